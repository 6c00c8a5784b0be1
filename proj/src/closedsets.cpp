#include "prenichols/closedsets.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace prenichols {

SumGround::SumGround(std::vector<DegreeVector> elements) : elems_(std::move(elements)) {
    if (static_cast<int>(elems_.size()) > kGroundCap)
        throw std::invalid_argument("ground exceeds the size cap of " + std::to_string(kGroundCap));
    std::sort(elems_.begin(), elems_.end(), HeightLexLess{});
    for (size_t i = 1; i < elems_.size(); ++i)
        if (elems_[i] == elems_[i - 1])
            throw std::invalid_argument("duplicate ground element " + format_compact(elems_[i]));
    for (const auto& e : elems_)
        if (e.is_zero()) throw std::invalid_argument("ground elements must be nonzero");
    into_.resize(elems_.size());
    std::map<DegreeVector, int> index;
    for (int i = 0; i < size(); ++i) index[elems_[i]] = i;
    for (int i = 0; i < size(); ++i)
        for (int j = i; j < size(); ++j) {
            auto it = index.find(elems_[i] + elems_[j]);
            if (it != index.end()) {
                sums_[{i, j}] = it->second;
                into_[it->second].push_back({i, j});
            }
        }
}

std::optional<int> SumGround::index_of(const DegreeVector& v) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v, HeightLexLess{});
    if (it == elems_.end() || !(*it == v)) return std::nullopt;
    return static_cast<int>(it - elems_.begin());
}

std::optional<int> SumGround::sum_of(int i, int j) const {
    auto it = sums_.find({std::min(i, j), std::max(i, j)});
    if (it == sums_.end()) return std::nullopt;
    return it->second;
}

bool is_closed_by_sums(const SumGround& g, Bitset s) {
    for (const auto& [pair, k] : g.sum_pairs())
        if ((s >> pair.first & 1) && (s >> pair.second & 1) && !(s >> k & 1)) return false;
    return true;
}

bool is_compatible(const SumGround& g, Bitset s) {
    for (int k = 0; k < g.size(); ++k) {
        if (!(s >> k & 1)) continue;
        for (const auto& [i, j] : g.pairs_summing_to(k))
            if (!(s >> i & 1) && !(s >> j & 1)) return false;
    }
    return true;
}

std::vector<Bitset> enumerate_closed(const SumGround& g) {
    const int n = g.size();
    std::vector<Bitset> out;
    // elements are in height-lex order, so forced sums always lie at larger
    // indices; deciding indices left to right never revisits a decision
    std::function<void(int, Bitset)> walk = [&](int idx, Bitset in) {
        if (idx == n) {
            out.push_back(in);
            return;
        }
        if (in >> idx & 1) {
            walk(idx + 1, in);
            return;
        }
        walk(idx + 1, in); // exclude idx
        Bitset closed = in | (Bitset(1) << idx);
        std::vector<int> work{idx};
        while (!work.empty()) {
            int a = work.back();
            work.pop_back();
            for (int b = 0; b < n; ++b) {
                if (!(closed >> b & 1)) continue;
                auto k = g.sum_of(a, b);
                if (k && !(closed >> *k & 1)) {
                    closed |= Bitset(1) << *k;
                    work.push_back(*k);
                }
            }
        }
        walk(idx + 1, closed);
    };
    walk(0, 0);
    std::sort(out.begin(), out.end(), [](Bitset a, Bitset b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HasseDiagram hasse(const SumGround& g, const std::vector<Bitset>& sets) {
    HasseDiagram h;
    h.nodes = sets;
    std::sort(h.nodes.begin(), h.nodes.end(), [](Bitset a, Bitset b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    std::map<Bitset, int> pos;
    const int n = static_cast<int>(h.nodes.size());
    for (int i = 0; i < n; ++i) pos[h.nodes[i]] = i;
    // A cover adds exactly one element: removing a minimum-height element of
    // T-S from closed T >= S stays closed, since a forced sum would need two
    // strictly lower summands outside S.  So S -< S u {e} enumerates all edges.
    for (int i = 0; i < n; ++i) {
        Bitset s = h.nodes[i];
        for (int e = 0; e < g.size(); ++e) {
            if (s >> e & 1) continue;
            Bitset t = s | (Bitset(1) << e);
            auto it = pos.find(t);
            if (it != pos.end()) h.edges.push_back({i, it->second});
        }
    }
    if (n <= 256) {
        // cross-check against the brute transitive reduction of inclusion
        std::vector<std::pair<int, int>> brute;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Bitset a = h.nodes[i], b = h.nodes[j];
                if (a == b || (a & b) != a) continue;
                bool covered = true;
                for (int k = 0; k < n && covered; ++k) {
                    Bitset c = h.nodes[k];
                    if (c != a && c != b && (a & c) == a && (c & b) == c) covered = false;
                }
                if (covered) brute.push_back({i, j});
            }
        std::sort(brute.begin(), brute.end());
        auto edges = h.edges;
        std::sort(edges.begin(), edges.end());
        if (edges != brute) {
            h.unit_covers = false;
            h.edges = std::move(brute);
        }
    }
    return h;
}

SumGround product_ground(const std::vector<SumGround>& parts) {
    std::set<int> used;
    std::vector<DegreeVector> all;
    int rank = -1;
    for (const auto& p : parts) {
        std::set<int> sup;
        for (const auto& e : p.elements()) {
            if (rank < 0) rank = e.rank();
            if (e.rank() != rank) throw std::invalid_argument("product parts of different rank");
            for (int i : support(e)) sup.insert(i);
            all.push_back(e);
        }
        for (int i : sup)
            if (!used.insert(i).second)
                throw std::invalid_argument("product parts have overlapping supports");
    }
    return SumGround(std::move(all));
}

bool graded_lie_check(const RootSystem& rs, Bitset s) {
    const auto& roots = rs.positive_roots();
    for (int i = 0; i < rs.root_count(); ++i) {
        if (!(s >> i & 1)) continue;
        for (int j = i; j < rs.root_count(); ++j) {
            if (!(s >> j & 1)) continue;
            long long n = rs.struct_const(roots[i], roots[j]);
            if (n == 0) continue; // bracket vanishes, stays in the span
            auto k = rs.root_index(roots[i] + roots[j]);
            if (!k) throw std::logic_error("nonzero bracket outside the root system");
            if (!(s >> *k & 1)) return false;
        }
    }
    return true;
}

} // namespace prenichols
