#include "prenichols/braiding.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <tuple>

namespace prenichols {

BraidingMatrix::BraidingMatrix(std::vector<std::vector<Scalar>> entries) : q_(std::move(entries)) {
    int n = size();
    if (n == 0) throw std::invalid_argument("empty braiding matrix");
    for (auto& row : q_)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("braiding matrix is not square");
}

Scalar BraidingMatrix::bilinear(const DegreeVector& alpha, const DegreeVector& beta) const {
    if (alpha.rank() != size() || beta.rank() != size())
        throw std::invalid_argument("degree vector rank does not match braiding size");
    Scalar out = Scalar::one();
    for (int i = 0; i < size(); ++i) {
        if (alpha[i] == 0) continue;
        for (int j = 0; j < size(); ++j) {
            if (beta[j] == 0) continue;
            out = out * q_[i][j].pow(checked_mul(alpha[i], beta[j]));
        }
    }
    return out;
}

std::optional<Int> BraidingMatrix::root_order(const DegreeVector& beta) const {
    return bilinear(beta, beta).order();
}

bool BraidingMatrix::is_cartan_root(const DegreeVector& beta) const {
    Scalar qbb = bilinear(beta, beta);
    for (int j = 0; j < size(); ++j) {
        DegreeVector ej = DegreeVector::basis(size(), j);
        Scalar qt = bilinear(beta, ej) * bilinear(ej, beta);
        if (!qt.in_cyclic_subgroup(qbb)) return false;
    }
    return true;
}

bool BraidingMatrix::operator==(const BraidingMatrix& o) const { return q_ == o.q_; }

std::string DynkinDiagram::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < vertex.size(); ++i) {
        if (i) out << "  ";
        out << (i + 1) << ":" << vertex[i].str();
    }
    for (const auto& [key, label] : edge)
        out << "  {" << (key.first + 1) << "," << (key.second + 1) << "}:" << label.str();
    return out.str();
}

DynkinDiagram diagram(const BraidingMatrix& b) {
    DynkinDiagram d;
    for (int i = 0; i < b.size(); ++i) d.vertex.push_back(b.q(i, i));
    for (int i = 0; i < b.size(); ++i)
        for (int j = i + 1; j < b.size(); ++j) {
            Scalar qt = b.q(i, j) * b.q(j, i);
            if (!qt.is_one()) d.edge[{i, j}] = qt;
        }
    return d;
}

bool twist_equivalent(const BraidingMatrix& a, const BraidingMatrix& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("braiding matrices of different size");
    return diagram(a) == diagram(b);
}

Components components(const BraidingMatrix& b) {
    DynkinDiagram d = diagram(b);
    int n = b.size();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [key, label] : d.edge) {
        adj[key.first].push_back(key.second);
        adj[key.second].push_back(key.first);
    }
    Components out;
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        if (adj[v].empty()) {
            seen[v] = true;
            if (d.vertex[v].is_one()) {
                out.isolated_plus.push_back(v);
                continue;
            }
            if (d.vertex[v] == Scalar::minus_one()) {
                out.isolated_minus.push_back(v);
                continue;
            }
            out.connected.push_back({v});
            continue;
        }
        std::vector<int> comp, stack{v};
        seen[v] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.connected.push_back(std::move(comp));
    }
    return out;
}

BraidingMatrix cartan_braiding(const CartanMatrix& cm, long long N) {
    if (N < 2) throw std::invalid_argument("cartan_braiding requires N >= 2");
    if (N % 2 == 0) throw std::invalid_argument("cartan_braiding requires odd N");
    for (int i = 0; i < cm.rank(); ++i)
        for (int j = 0; j < cm.rank(); ++j)
            if (cm.a(i, j) == -3 && N % 3 == 0)
                throw std::invalid_argument("cartan_braiding on a G2 block requires N coprime to 3");
    std::vector<std::vector<Scalar>> q(cm.rank(), std::vector<Scalar>(cm.rank()));
    for (int i = 0; i < cm.rank(); ++i)
        for (int j = 0; j < cm.rank(); ++j)
            q[i][j] = Scalar::root_of_unity(N, checked_mul(cm.d(i), cm.a(i, j)) % N);
    return BraidingMatrix(std::move(q));
}

std::string family_tag_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::distinguished: return "distinguished";
        case FamilyTag::A2_G3: return "A2_G3";
        case FamilyTag::superA3_2: return "superA3_2";
        case FamilyTag::superA3_123: return "superA3_123";
        case FamilyTag::g23_d1: return "g23_d1";
        case FamilyTag::g23_d2: return "g23_d2";
    }
    return "?";
}

namespace {

struct LocalDatum {
    FamilyTag family;
    std::vector<int> order;                      // component vertices, local position -> global vertex
    std::vector<std::vector<long long>> roots;   // local coords
    std::vector<long long> N;
    std::vector<bool> cartan;
    std::vector<std::vector<long long>> underline; // hOc: N_beta * beta part
    std::vector<std::vector<long long>> bold;      // hOc: extra generators
};

struct CompView {
    std::vector<int> verts;                // ascending global indices
    std::vector<Scalar> label;             // by position in verts
    std::map<std::pair<int, int>, Scalar> edge; // local index pairs (i<j)
    bool has_edge(int i, int j) const { return edge.count({std::min(i, j), std::max(i, j)}) > 0; }
    Scalar edge_label(int i, int j) const { return edge.at({std::min(i, j), std::max(i, j)}); }
};

CompView comp_view(const BraidingMatrix& b, const std::vector<int>& verts) {
    CompView cv;
    cv.verts = verts;
    for (int v : verts) cv.label.push_back(b.q(v, v));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            Scalar qt = b.q(verts[i], verts[j]) * b.q(verts[j], verts[i]);
            if (!qt.is_one()) cv.edge[{static_cast<int>(i), static_cast<int>(j)}] = qt;
        }
    return cv;
}

// component as a path v0-v1-...-vk, or empty if not a path
std::vector<int> path_order(const CompView& cv) {
    int n = static_cast<int>(cv.verts.size());
    if (n == 1) return {0};
    std::vector<std::vector<int>> adj(n);
    for (const auto& [key, label] : cv.edge) {
        adj[key.first].push_back(key.second);
        adj[key.second].push_back(key.first);
    }
    int ends = 0, start = -1;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() > 2) return {};
        if (adj[i].size() == 1) {
            ++ends;
            if (start < 0) start = i;
        }
        if (adj[i].empty()) return {};
    }
    if (ends != 2) return {};
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int w : adj[cur])
            if (w != prev) next = w;
        if (next < 0) return {};
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

std::optional<long long> finite_order_geq(const Scalar& s, long long lo) {
    auto o = s.order();
    if (!o) return std::nullopt;
    if (*o < lo) return std::nullopt;
    return static_cast<long long>(*o);
}

const std::vector<std::vector<long long>> kA3Roots = {
    {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}};

std::optional<LocalDatum> match_a2_g3(const CompView& cv) {
    if (cv.verts.size() != 2 || !cv.has_edge(0, 1)) return std::nullopt;
    Scalar u = cv.label[0];
    auto o = u.order();
    if (!o || *o != 3) return std::nullopt;
    if (cv.label[1] != u || cv.edge_label(0, 1) != u.inverse()) return std::nullopt;
    LocalDatum d;
    d.family = FamilyTag::A2_G3;
    d.order = {0, 1};
    d.roots = {{0, 1}, {1, 0}, {1, 1}};
    d.N = {3, 3, 3};
    d.cartan = {true, true, true};
    d.underline = {{0, 3}, {3, 0}, {3, 3}};
    d.bold = {{2, 1}, {1, 2}};
    return d;
}

std::optional<LocalDatum> match_super_a3_2(const CompView& cv, const std::vector<int>& path) {
    // labels (u, -1, u^{-1}), edges (u^{-1}, u); the mirror reads the same with
    // u replaced by u^{-1}
    if (path.size() != 3) return std::nullopt;
    auto try_orient = [&](int a, int m, int c) -> std::optional<LocalDatum> {
        if (cv.label[m] != Scalar::minus_one()) return std::nullopt;
        Scalar u = cv.label[a];
        auto N = finite_order_geq(u, 3);
        if (!N) return std::nullopt;
        if (cv.label[c] != u.inverse()) return std::nullopt;
        if (cv.edge_label(a, m) != u.inverse() || cv.edge_label(m, c) != u) return std::nullopt;
        LocalDatum d;
        d.family = FamilyTag::superA3_2;
        d.order = {a, m, c};
        d.roots = kA3Roots;
        d.N = {*N, 2, *N, 2, 2, 2};
        d.cartan = {true, false, true, false, false, false};
        d.underline = {{0, 0, *N}, {*N, 0, 0}};
        d.bold = {{1, 2, 1}};
        return d;
    };
    if (auto d = try_orient(path[0], path[1], path[2])) return d;
    return try_orient(path[2], path[1], path[0]);
}

std::optional<LocalDatum> match_super_a3_123(const CompView& cv, const std::vector<int>& path) {
    // labels (-1,-1,-1), edges (u, u^{-1}) with u of finite order N >= 3
    if (path.size() != 3) return std::nullopt;
    for (int i : path)
        if (cv.label[i] != Scalar::minus_one()) return std::nullopt;
    Scalar u = cv.edge_label(path[0], path[1]);
    auto N = finite_order_geq(u, 3);
    if (!N) return std::nullopt;
    if (cv.edge_label(path[1], path[2]) != u.inverse()) return std::nullopt;
    LocalDatum d;
    d.family = FamilyTag::superA3_123;
    d.order = path;
    d.roots = kA3Roots;
    d.N = {2, 2, 2, *N, *N, 2};
    d.cartan = {false, false, false, true, true, false};
    d.underline = {{0, *N, *N}, {*N, *N, 0}};
    d.bold = {{1, 0, 1}};
    return d;
}

std::optional<LocalDatum> match_g23_d1(const CompView& cv, const std::vector<int>& path) {
    // labels (-1,-1,-1), both edges the same xi of order 3
    if (path.size() != 3) return std::nullopt;
    for (int i : path)
        if (cv.label[i] != Scalar::minus_one()) return std::nullopt;
    Scalar xi = cv.edge_label(path[0], path[1]);
    auto o = xi.order();
    if (!o || *o != 3) return std::nullopt;
    if (cv.edge_label(path[1], path[2]) != xi) return std::nullopt;
    LocalDatum d;
    d.family = FamilyTag::g23_d1;
    d.order = path;
    d.roots = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 1, 0},
               {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {2, 2, 1}, {2, 3, 2}};
    d.N = {2, 2, 2, 3, 3, 6, 3, 2, 2, 2};
    d.cartan = {false, false, false, true, true, true, true, false, false, false};
    d.underline = {{0, 3, 3}, {3, 3, 0}, {3, 6, 3}, {6, 6, 6}};
    d.bold = {{2, 3, 1}, {1, 3, 2}};
    return d;
}

std::optional<LocalDatum> match_g23_d2(const CompView& cv, const std::vector<int>& path) {
    // labels (-1, xi, -1), edges (xi^2, xi); orientation fixed by the edges
    if (path.size() != 3) return std::nullopt;
    auto try_orient = [&](int a, int m, int c) -> std::optional<LocalDatum> {
        if (cv.label[a] != Scalar::minus_one() || cv.label[c] != Scalar::minus_one()) return std::nullopt;
        Scalar xi = cv.label[m];
        auto o = xi.order();
        if (!o || *o != 3) return std::nullopt;
        if (cv.edge_label(a, m) != xi * xi || cv.edge_label(m, c) != xi) return std::nullopt;
        LocalDatum d;
        d.family = FamilyTag::g23_d2;
        d.order = {a, m, c};
        d.roots = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 1, 0},
                   {0, 2, 1}, {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {1, 3, 2}};
        d.N = {2, 3, 2, 6, 2, 2, 3, 3, 2, 2};
        d.cartan = {false, true, false, true, false, false, true, true, false, false};
        d.underline = {{0, 3, 0}, {0, 6, 6}, {3, 3, 3}, {3, 6, 3}};
        d.bold = {{1, 3, 1}, {2, 3, 2}};
        return d;
    };
    if (auto d = try_orient(path[0], path[1], path[2])) return d;
    return try_orient(path[2], path[1], path[0]);
}

// multi-vertex Cartan recognition: the diagram of cartan_braiding(A, N) for
// some finite-type A and valid odd N
std::optional<LocalDatum> match_cartan(const CompView& cv) {
    int n = static_cast<int>(cv.verts.size());
    auto N0 = cv.label[0].order();
    if (!N0 || *N0 < 2 || *N0 % 2 == 0) return std::nullopt;
    long long N = static_cast<long long>(*N0);
    for (const auto& l : cv.label) {
        auto o = l.order();
        if (!o || *o != N) return std::nullopt;
    }
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (const auto& [key, label] : cv.edge) {
        auto fit = [&](int v, const Scalar& e) -> std::optional<long long> {
            for (long long cand : {-1LL, -2LL, -3LL})
                if (cv.label[v].pow(cand) == e) return cand;
            return std::nullopt;
        };
        auto aij = fit(key.first, label);
        auto aji = fit(key.second, label);
        if (!aij || !aji) return std::nullopt;
        a[key.first][key.second] = *aij;
        a[key.second][key.first] = *aji;
    }
    std::optional<CartanMatrix> cm;
    try {
        cm.emplace(a);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cm->a(i, j) == -3 && N % 3 == 0) return std::nullopt;
    // unique candidate root of unity: q with q^{2 d_1} = label_1
    long long m = 2 * cm->d(0) % N;
    // extended Euclid for m^{-1} mod N
    long long inv = -1;
    {
        long long r0 = N, r1 = m, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long long q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        }
        if (r0 == 1) inv = ((s0 % N) + N) % N;
    }
    if (inv < 0) return std::nullopt;
    Scalar q = cv.label[0].pow(inv);
    for (int i = 0; i < n; ++i)
        if (q.pow(2 * cm->d(i)) != cv.label[i]) return std::nullopt;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Scalar expect = q.pow(2 * cm->d(i) * cm->a(i, j));
            Scalar got = cv.has_edge(i, j) ? cv.edge_label(i, j) : Scalar::one();
            if (expect != got) return std::nullopt;
        }
    RootSystem rs(*cm);
    LocalDatum d;
    d.family = FamilyTag::distinguished;
    d.order.resize(n);
    for (int i = 0; i < n; ++i) d.order[i] = i;
    for (const auto& r : rs.positive_roots()) {
        d.roots.push_back(r.coords());
        d.N.push_back(N);
        d.cartan.push_back(true);
        d.underline.push_back((r * N).coords());
    }
    return d;
}

bool excluded_minus_one_AD(const CompView& cv) {
    int n = static_cast<int>(cv.verts.size());
    if (n < 2) return false;
    for (const auto& l : cv.label)
        if (l != Scalar::minus_one()) return false;
    for (const auto& [key, label] : cv.edge)
        if (label != Scalar::minus_one()) return false;
    // shape: tree that is a path (type A) or has a single trivalent vertex
    // with two arms of length one (type D)
    std::vector<int> deg(n, 0);
    int edges = 0;
    for (const auto& [key, label] : cv.edge) {
        ++deg[key.first];
        ++deg[key.second];
        ++edges;
    }
    if (edges != n - 1) return false; // not a tree (connected by assumption)
    int tri = -1;
    for (int i = 0; i < n; ++i) {
        if (deg[i] > 3) return false;
        if (deg[i] == 3) {
            if (tri >= 0) return false;
            tri = i;
        }
    }
    if (tri < 0) return true; // path = type A
    int leaf_neighbors = 0;
    for (const auto& [key, label] : cv.edge) {
        if (key.first == tri && deg[key.second] == 1) ++leaf_neighbors;
        if (key.second == tri && deg[key.first] == 1) ++leaf_neighbors;
    }
    return leaf_neighbors >= 2; // type D
}

DegreeVector embed(const std::vector<long long>& local, const std::vector<int>& order, int rank) {
    std::vector<long long> c(rank, 0);
    for (size_t i = 0; i < local.size(); ++i) c[order[i]] = local[i];
    return DegreeVector(std::move(c));
}

} // namespace

std::vector<DegreeVector> RootDatum::all_positive_roots() const {
    std::vector<DegreeVector> out;
    for (const auto& c : comps) out.insert(out.end(), c.positive_roots.begin(), c.positive_roots.end());
    return out;
}

std::vector<long long> RootDatum::all_N_beta() const {
    std::vector<long long> out;
    for (const auto& c : comps) out.insert(out.end(), c.N_beta.begin(), c.N_beta.end());
    return out;
}

std::vector<bool> RootDatum::all_cartan_flags() const {
    std::vector<bool> out;
    for (const auto& c : comps) out.insert(out.end(), c.cartan_flag.begin(), c.cartan_flag.end());
    return out;
}

std::vector<DegreeVector> RootDatum::hOc() const {
    std::vector<DegreeVector> out;
    for (const auto& c : comps) out.insert(out.end(), c.hOc.begin(), c.hOc.end());
    std::sort(out.begin(), out.end(), HeightLexLess{});
    return out;
}

std::vector<DegreeVector> RootDatum::hOc_bold() const {
    std::vector<DegreeVector> out;
    for (const auto& c : comps)
        for (size_t i = 0; i < c.hOc.size(); ++i)
            if (c.hOc_bold[i]) out.push_back(c.hOc[i]);
    std::sort(out.begin(), out.end(), HeightLexLess{});
    return out;
}

RootDatum build_datum(const BraidingMatrix& b,
                      const std::optional<std::vector<DegreeVector>>& supplied_roots) {
    Components parts = components(b);
    if (!parts.isolated_plus.empty() || !parts.isolated_minus.empty()) {
        std::ostringstream msg;
        msg << "isolated vertices labelled +-1 are not supported (";
        for (int v : parts.isolated_plus) msg << " +" << (v + 1);
        for (int v : parts.isolated_minus) msg << " -" << (v + 1);
        msg << " ); no classification of the finite-GKdim poset exists for them";
        throw std::invalid_argument(msg.str());
    }
    int rank = b.size();

    // group supplied roots by the component owning their support
    std::vector<std::vector<DegreeVector>> supplied_by_comp(parts.connected.size());
    if (supplied_roots) {
        std::vector<int> owner(rank, -1);
        for (size_t c = 0; c < parts.connected.size(); ++c)
            for (int v : parts.connected[c]) owner[v] = static_cast<int>(c);
        for (const auto& r : *supplied_roots) {
            if (r.rank() != rank) throw std::invalid_argument("supplied root of wrong rank");
            if (!r.is_nonnegative() || r.is_zero())
                throw std::invalid_argument("supplied roots must be nonzero and nonnegative");
            std::set<int> sup = support(r);
            int c = owner[*sup.begin()];
            for (int v : sup)
                if (owner[v] != c)
                    throw std::invalid_argument("supplied root " + format_compact(r) +
                                                " spans several connected components");
            supplied_by_comp[c].push_back(r);
        }
    }

    RootDatum datum{b, {}};
    for (size_t ci = 0; ci < parts.connected.size(); ++ci) {
        const auto& verts = parts.connected[ci];
        CompView cv = comp_view(b, verts);
        if (excluded_minus_one_AD(cv)) {
            throw std::invalid_argument(
                "component {" + std::to_string(verts.front() + 1) + "..} is of Cartan type A/D with all "
                "labels -1; no minimal finite-GKdim pre-Nichols algebra is known there");
        }
        std::optional<LocalDatum> local;
        if (verts.size() == 1) {
            Scalar u = cv.label[0];
            auto o = u.order();
            if (!o)
                throw std::invalid_argument("vertex " + std::to_string(verts[0] + 1) +
                                            " has a label of infinite order; dim B_q must be finite");
            LocalDatum d;
            d.family = FamilyTag::distinguished;
            d.order = {0};
            d.roots = {{1}};
            d.N = {static_cast<long long>(*o)};
            d.cartan = {true};
            d.underline = {{static_cast<long long>(*o)}};
            local = d;
        }
        if (!local) {
            std::vector<int> path = path_order(cv);
            if (auto d = match_a2_g3(cv)) local = d;
            else if (auto d2 = match_super_a3_2(cv, path)) local = d2;
            else if (auto d3 = match_super_a3_123(cv, path)) local = d3;
            else if (auto d4 = match_g23_d1(cv, path)) local = d4;
            else if (auto d5 = match_g23_d2(cv, path)) local = d5;
            else if (auto d6 = match_cartan(cv)) local = d6;
        }

        ComponentDatum comp;
        if (local) {
            comp.family = local->family;
            for (int p : local->order) comp.vertices.push_back(verts[p]);
            for (const auto& r : local->roots) comp.positive_roots.push_back(embed(r, comp.vertices, rank));
            comp.N_beta = local->N;
            comp.cartan_flag = local->cartan;
            for (const auto& u : local->underline) {
                comp.hOc.push_back(embed(u, comp.vertices, rank));
                comp.hOc_bold.push_back(false);
            }
            for (const auto& u : local->bold) {
                comp.hOc.push_back(embed(u, comp.vertices, rank));
                comp.hOc_bold.push_back(true);
            }
            // cross-check the table against the braiding itself
            for (size_t i = 0; i < comp.positive_roots.size(); ++i) {
                auto o = b.root_order(comp.positive_roots[i]);
                if (!o || *o != comp.N_beta[i])
                    throw std::logic_error("family table order mismatch at root " +
                                           format_compact(comp.positive_roots[i]));
                if (b.is_cartan_root(comp.positive_roots[i]) != comp.cartan_flag[i])
                    throw std::logic_error("family table Cartan flag mismatch at root " +
                                           format_compact(comp.positive_roots[i]));
            }
            if (!supplied_by_comp[ci].empty()) {
                auto given = supplied_by_comp[ci];
                auto own = comp.positive_roots;
                std::sort(given.begin(), given.end(), HeightLexLess{});
                std::sort(own.begin(), own.end(), HeightLexLess{});
                if (given != own)
                    throw std::invalid_argument("supplied roots disagree with the recognized component");
            }
        } else {
            if (supplied_by_comp[ci].empty())
                throw std::invalid_argument(
                    "component containing vertex " + std::to_string(verts.front() + 1) +
                    " is not a built-in family; supply its positive roots via a root-datum file");
            comp.family = FamilyTag::distinguished;
            comp.vertices = verts;
            comp.positive_roots = supplied_by_comp[ci];
            std::sort(comp.positive_roots.begin(), comp.positive_roots.end(), HeightLexLess{});
            for (size_t i = 1; i < comp.positive_roots.size(); ++i)
                if (comp.positive_roots[i] == comp.positive_roots[i - 1])
                    throw std::invalid_argument("duplicate supplied root " +
                                                format_compact(comp.positive_roots[i]));
            for (int v : verts) {
                DegreeVector simple = DegreeVector::basis(rank, v);
                if (std::find(comp.positive_roots.begin(), comp.positive_roots.end(), simple) ==
                    comp.positive_roots.end())
                    throw std::invalid_argument("supplied roots miss the simple root " +
                                                format_compact(simple));
            }
            for (const auto& r : comp.positive_roots) {
                auto o = b.root_order(r);
                if (!o)
                    throw std::invalid_argument("root " + format_compact(r) +
                                                " has infinite order; dim B_q must be finite");
                if (*o < 2)
                    throw std::invalid_argument("root " + format_compact(r) + " has q_{bb} = 1");
                comp.N_beta.push_back(static_cast<long long>(*o));
                bool flag = b.is_cartan_root(r);
                comp.cartan_flag.push_back(flag);
                if (flag) {
                    comp.hOc.push_back(r * comp.N_beta.back());
                    comp.hOc_bold.push_back(false);
                }
            }
        }
        // sort hOc height-lex, keeping bold flags aligned
        {
            std::vector<size_t> idx(comp.hOc.size());
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
                return height_lex_less(comp.hOc[x], comp.hOc[y]);
            });
            std::vector<DegreeVector> h;
            std::vector<bool> f;
            for (size_t i : idx) {
                h.push_back(comp.hOc[i]);
                f.push_back(comp.hOc_bold[i]);
            }
            comp.hOc = std::move(h);
            comp.hOc_bold = std::move(f);
        }
        datum.comps.push_back(std::move(comp));
    }

    auto all = datum.hOc();
    for (size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1])
            throw std::invalid_argument("duplicate degree " + format_compact(all[i]) + " in hOc");
    return datum;
}

RootDatum embed_datum(const RootDatum& part, int rank, int offset) {
    int n = part.rank();
    if (offset < 0 || offset + n > rank)
        throw std::invalid_argument("embedding does not fit the target lattice");
    std::vector<std::vector<Scalar>> q(rank, std::vector<Scalar>(rank, Scalar::one()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[offset + i][offset + j] = part.braiding.q(i, j);
    auto shift = [&](const DegreeVector& v) {
        std::vector<long long> c(rank, 0);
        for (int i = 0; i < n; ++i) c[offset + i] = v[i];
        return DegreeVector(std::move(c));
    };
    RootDatum out{BraidingMatrix(std::move(q)), {}};
    for (const auto& comp : part.comps) {
        ComponentDatum c;
        c.family = comp.family;
        for (int v : comp.vertices) c.vertices.push_back(v + offset);
        for (const auto& r : comp.positive_roots) c.positive_roots.push_back(shift(r));
        c.N_beta = comp.N_beta;
        c.cartan_flag = comp.cartan_flag;
        for (const auto& u : comp.hOc) c.hOc.push_back(shift(u));
        c.hOc_bold = comp.hOc_bold;
        out.comps.push_back(std::move(c));
    }
    return out;
}

std::vector<DegreeVector> underline_basis(const std::vector<DegreeVector>& degrees) {
    std::vector<DegreeVector> out;
    for (const auto& g : degrees) {
        bool is_sum = false;
        for (const auto& a : degrees) {
            for (const auto& b : degrees) {
                if (a + b == g) {
                    is_sum = true;
                    break;
                }
            }
            if (is_sum) break;
        }
        if (!is_sum) out.push_back(g);
    }
    return out;
}

} // namespace prenichols
