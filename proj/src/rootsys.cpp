#include "prenichols/rootsys.hpp"
#include "prenichols/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace prenichols {

namespace {

// minimal positive d with d_i a_ij = d_j a_ji, by ratio propagation over the diagram
std::vector<long long> symmetrizers(const std::vector<std::vector<long long>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<Rat> d(n, Rat(0));
    for (int start = 0; start < n; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                Rat dj = d[i] * Rat(-a[i][j], -a[j][i]); // off-diagonal entries are negative

                if (d[j] == 0) {
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    throw std::invalid_argument("Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    Int lcm_den = 1;
    for (auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
    std::vector<Int> ints(n);
    Int g = 0;
    for (int i = 0; i < n; ++i) {
        ints[i] = boost::multiprecision::numerator(d[i]) * (lcm_den / boost::multiprecision::denominator(d[i]));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    std::vector<long long> out(n);
    for (int i = 0; i < n; ++i) out[i] = static_cast<long long>(ints[i] / g);
    return out;
}

bool positive_definite(const std::vector<std::vector<Int>>& s) {
    // leading principal minors via fraction-free elimination
    int n = static_cast<int>(s.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(s[i][j]);
    Rat det = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) return false;
        det *= m[k][k];
        if (det <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            Rat f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return true;
}

} // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<long long>> entries) : a_(std::move(entries)) {
    int n = static_cast<int>(a_.size());
    if (n == 0) throw std::invalid_argument("empty Cartan matrix");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a_[i].size()) != n)
            throw std::invalid_argument("Cartan matrix is not square");
        if (a_[i][i] != 2)
            throw std::invalid_argument("Cartan matrix diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a_[i][j] > 0)
                throw std::invalid_argument("Cartan matrix off-diagonal must be <= 0");
            if ((a_[i][j] == 0) != (a_[j][i] == 0))
                throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
        }
    }
    d_ = symmetrizers(a_);
    std::vector<std::vector<Int>> s(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i][j] = Int(d_[i]) * a_[i][j];
    if (!positive_definite(s))
        throw std::invalid_argument("Cartan matrix is not of finite type");
}

Int CartanMatrix::form(const DegreeVector& v, const DegreeVector& w) const {
    Int total = 0;
    for (int i = 0; i < rank(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) {
            if (w[j] == 0) continue;
            total += Int(v[i]) * w[j] * d_[i] * a_[i][j];
        }
    }
    return total;
}

CartanMatrix named_cartan_matrix(const std::string& name) {
    // split on 'x' for direct products
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char ch : name) {
            if (ch == 'x' || ch == 'X') {
                parts.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
    }
    auto single = [](const std::string& t) -> std::vector<std::vector<long long>> {
        if (t.size() < 2) throw std::invalid_argument("bad type name '" + t + "'");
        char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
        int n = std::stoi(t.substr(1));
        auto path = [&](int rank) {
            std::vector<std::vector<long long>> a(rank, std::vector<long long>(rank, 0));
            for (int i = 0; i < rank; ++i) a[i][i] = 2;
            for (int i = 0; i + 1 < rank; ++i) a[i][i + 1] = a[i + 1][i] = -1;
            return a;
        };
        switch (fam) {
            case 'A': {
                if (n < 1 || n > 12) throw std::invalid_argument("rank out of range for type A");
                return path(n);
            }
            case 'B': {
                if (n < 2 || n > 12) throw std::invalid_argument("rank out of range for type B");
                auto a = path(n);
                a[n - 2][n - 1] = -1;
                a[n - 1][n - 2] = -2; // alpha_n short
                return a;
            }
            case 'C': {
                if (n < 2 || n > 12) throw std::invalid_argument("rank out of range for type C");
                auto a = path(n);
                a[n - 2][n - 1] = -2;
                a[n - 1][n - 2] = -1; // alpha_n long
                return a;
            }
            case 'D': {
                if (n < 3 || n > 12) throw std::invalid_argument("rank out of range for type D");
                auto a = path(n);
                a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
                a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
                return a;
            }
            case 'E': {
                if (n < 6 || n > 8) throw std::invalid_argument("rank out of range for type E");
                // Bourbaki: vertex 2 attaches to vertex 4 of the path 1-3-4-5-...-n
                std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
                for (int i = 0; i < n; ++i) a[i][i] = 2;
                auto join = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
                join(0, 2);
                join(1, 3);
                for (int i = 2; i + 1 < n; ++i) join(i, i + 1);
                return a;
            }
            case 'F': {
                if (n != 4) throw std::invalid_argument("type F requires rank 4");
                auto a = path(4);
                a[1][2] = -1;
                a[2][1] = -2; // alpha_3, alpha_4 short
                return a;
            }
            case 'G': {
                if (n != 2) throw std::invalid_argument("type G requires rank 2");
                return {{2, -3}, {-1, 2}}; // alpha_1 short, highest root 3a1+2a2
            }
            default:
                throw std::invalid_argument("unknown type family '" + std::string(1, fam) + "'");
        }
    };
    std::vector<std::vector<long long>> total;
    for (const auto& p : parts) {
        auto block = single(p);
        int off = static_cast<int>(total.size());
        int bn = static_cast<int>(block.size());
        for (auto& row : total) row.resize(off + bn, 0);
        for (int i = 0; i < bn; ++i) {
            std::vector<long long> row(off + bn, 0);
            for (int j = 0; j < bn; ++j) row[off + j] = block[i][j];
            total.push_back(std::move(row));
        }
    }
    return CartanMatrix(std::move(total));
}

RootSystem::RootSystem(CartanMatrix cm) : cm_(std::move(cm)) { generate(); }

void RootSystem::generate() {
    int n = cm_.rank();
    std::vector<DegreeVector> frontier;
    std::map<DegreeVector, bool> seen;
    for (int i = 0; i < n; ++i) {
        auto e = DegreeVector::basis(n, i);
        seen[e] = true;
        frontier.push_back(e);
    }
    // close under simple reflections s_i(b) = b - <alpha_i^v, b> alpha_i, keeping positives
    while (!frontier.empty()) {
        std::vector<DegreeVector> next;
        for (const auto& b : frontier) {
            for (int i = 0; i < n; ++i) {
                long long pairing = 0;
                for (int j = 0; j < n; ++j) pairing = checked_add(pairing, checked_mul(cm_.a(i, j), b[j]));
                DegreeVector r = b - DegreeVector::basis(n, i) * pairing;
                if (!r.is_nonnegative() || r.is_zero()) continue;
                if (!seen.count(r)) {
                    seen[r] = true;
                    next.push_back(r);
                }
            }
        }
        frontier = std::move(next);
    }
    for (auto& [v, flag] : seen) roots_.push_back(v);
    std::sort(roots_.begin(), roots_.end(), HeightLexLess{});
    for (int i = 0; i < root_count(); ++i) index_[roots_[i]] = i;
    for (int i = 0; i < root_count(); ++i)
        for (int j = i; j < root_count(); ++j) {
            auto it = index_.find(roots_[i] + roots_[j]);
            if (it != index_.end()) sums_[{i, j}] = it->second;
        }
}

std::optional<int> RootSystem::root_index(const DegreeVector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RootSystem::is_root(const DegreeVector& v) const {
    if (v.is_nonnegative()) return is_positive_root(v);
    return is_positive_root(DegreeVector::zero(rank()) - v);
}

std::optional<int> RootSystem::sum_index(int i, int j) const {
    auto it = sums_.find({std::min(i, j), std::max(i, j)});
    if (it == sums_.end()) return std::nullopt;
    return it->second;
}

// ---- Chevalley structure constants --------------------------------------
//
// Extraspecial-pair convention: process sums delta by height; the special pair
// (a,b), a < b in height-lex, with minimal a gets N_{a,b} = p+1 > 0 where p is
// the length of the a-string below b.  Remaining constants follow from
//   (R1) N_{b,a} = -N_{a,b}
//   (R2) N_{-a,-b} = -N_{a,b}
//   (R3) a+b+c = 0  =>  N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
//   (R4) a+b+c+d = 0, no two opposite =>
//        N_{a,b}N_{c,d}/(a+b,a+b) + N_{b,c}N_{a,d}/(b+c,b+c)
//                                 + N_{c,a}N_{b,d}/(c+a,c+a) = 0

// Root order for the sign convention: by height, then with the leftmost
// support first, so the simple roots come in index order and the extraspecial
// pair of alpha_1+alpha_2 is (alpha_1, alpha_2) with sign +.
static bool sc_less(const DegreeVector& a, const DegreeVector& b) {
    long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.coords() > b.coords();
}

void RootSystem::build_struct_consts() const {
    if (nconst_built_) return;
    int M = root_count();
    DegreeVector zero = DegreeVector::zero(rank());
    auto set_pair = [&](const DegreeVector& a, const DegreeVector& b, long long value) {
        nconst_[{a, b}] = value;
        nconst_[{b, a}] = -value;
    };
    for (int k = 0; k < M; ++k) {
        const DegreeVector& delta = roots_[k];
        // special pairs (a,b), a < b in the convention order, a+b = delta
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < M; ++i) {
            auto rest = delta - roots_[i];
            if (rest.is_zero() || !rest.is_nonnegative()) continue;
            auto j = root_index(rest);
            if (j && sc_less(roots_[i], roots_[*j])) pairs.push_back({i, *j});
        }
        if (pairs.empty()) continue;
        std::sort(pairs.begin(), pairs.end(),
                  [&](const auto& x, const auto& y) { return sc_less(roots_[x.first], roots_[y.first]); });
        auto chain_p = [&](const DegreeVector& a, const DegreeVector& b) {
            long long p = 0;
            DegreeVector cur = b - a;
            while (is_root(cur)) {
                ++p;
                cur = cur - a;
            }
            return p;
        };
        auto [e, h] = pairs.front();
        const DegreeVector eps = roots_[e], eta = roots_[h];
        set_pair(eps, eta, chain_p(eps, eta) + 1);
        for (size_t t = 1; t < pairs.size(); ++t) {
            const DegreeVector a = roots_[pairs[t].first], b = roots_[pairs[t].second];
            Rat sum = 0;
            DegreeVector em_a = eta - a; // = b - eps
            if (is_root(em_a))
                sum += Rat(resolve_n(eta, zero - a)) * resolve_n(eps, zero - b) / Rat(cm_.form(em_a, em_a));
            DegreeVector ea = eps - a;
            if (is_root(ea))
                sum += Rat(resolve_n(zero - a, eps)) * resolve_n(eta, zero - b) / Rat(cm_.form(ea, ea));
            Rat val = Rat(cm_.form(delta, delta)) * sum / Rat(nconst_.at({eps, eta}));
            if (boost::multiprecision::denominator(val) != 1 || val == 0)
                throw std::logic_error("structure constant propagation failed");
            long long n = static_cast<long long>(boost::multiprecision::numerator(val));
            long long expect = chain_p(a, b) + 1;
            if (n != expect && n != -expect)
                throw std::logic_error("structure constant magnitude mismatch");
            set_pair(a, b, n);
        }
    }
    nconst_built_ = true;
}

long long RootSystem::resolve_n(const DegreeVector& x, const DegreeVector& y) const {
    DegreeVector z = x + y;
    assert(is_root(z));
    DegreeVector zero = DegreeVector::zero(rank());
    bool xp = x.is_nonnegative(), yp = y.is_nonnegative();
    if (xp && yp) return nconst_.at({x, y});
    if (!xp && !yp) return -resolve_n(zero - x, zero - y);
    if (!xp) return -resolve_n(y, x); // R1: land on the positive-first mixed case
    // x > 0, y < 0; rotate by R3 to land on a pair of equal signs
    if (z.is_nonnegative()) {
        // (x, y, -z): N(x,y) = (z,z)/(x,x) * N(y, -z), both arguments negative
        Rat val = Rat(cm_.form(z, z)) * resolve_n(y, zero - z) / Rat(cm_.form(x, x));
        assert(boost::multiprecision::denominator(val) == 1);
        return static_cast<long long>(boost::multiprecision::numerator(val));
    }
    // N(x,y) = (z,z)/(y,y) * N(-z, x), both arguments positive
    Rat val = Rat(cm_.form(z, z)) * resolve_n(zero - z, x) / Rat(cm_.form(y, y));
    assert(boost::multiprecision::denominator(val) == 1);
    return static_cast<long long>(boost::multiprecision::numerator(val));
}

long long RootSystem::struct_const(const DegreeVector& beta, const DegreeVector& gamma) const {
    build_struct_consts();
    if (!is_root(beta) || !is_root(gamma))
        throw std::invalid_argument("struct_const arguments must be roots");
    if (!is_root(beta + gamma)) return 0;
    return resolve_n(beta, gamma);
}

const std::vector<int>& RootSystem::convex_order() const {
    if (!convex_.empty()) return convex_;
    int n = rank();
    // beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) along the lex-least reduced
    // word for the longest Weyl element; such a sequence is convex.
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) w[i][i] = 1; // columns = images of simple roots
    auto apply_s = [&](int i) {
        // w <- w * s_i : column j of w*s_i is w(s_i(alpha_j))
        std::vector<long long> wi(n);
        for (int r = 0; r < n; ++r) wi[r] = w[r][i];
        for (int j = 0; j < n; ++j) {
            if (j == i) {
                for (int r = 0; r < n; ++r) w[r][i] = -wi[r];
            } else {
                for (int r = 0; r < n; ++r) w[r][j] = checked_sub(w[r][j], checked_mul(cm_.a(i, j), wi[r]));
            }
        }
    };
    std::vector<int> order;
    const int M = root_count();
    while (static_cast<int>(order.size()) < M) {
        bool advanced = false;
        for (int i = 0; i < n && !advanced; ++i) {
            std::vector<long long> img(n);
            bool positive = true, nonzero = false;
            for (int r = 0; r < n; ++r) {
                img[r] = w[r][i];
                if (img[r] < 0) positive = false;
                if (img[r] != 0) nonzero = true;
            }
            if (!positive || !nonzero) continue;
            auto idx = root_index(DegreeVector(img));
            if (!idx) throw std::logic_error("convex order walked outside the root system");
            order.push_back(*idx);
            apply_s(i);
            advanced = true;
        }
        if (!advanced) throw std::logic_error("convex order construction stalled");
    }
    // verify convexity: alpha + beta sits between alpha and beta
    std::vector<int> pos(M);
    for (int p = 0; p < M; ++p) pos[order[p]] = p;
    for (const auto& [pair, k] : sums_) {
        auto [i, j] = pair;
        int lo = std::min(pos[i], pos[j]), hi = std::max(pos[i], pos[j]);
        if (!(lo < pos[k] && pos[k] < hi))
            throw std::logic_error("convex order verification failed");
    }
    convex_ = std::move(order);
    return convex_;
}

RootSystem::SumLemmaReport RootSystem::verify_sum_lemma(int max_parts, int workers) const {
    if (max_parts < 3) throw std::invalid_argument("max_parts must be >= 3");
    const int M = root_count();
    auto check_alpha = [&](int ridx) {
        SumLemmaReport rep;
        std::vector<int> parts;
        // multiset DFS over root indices, nondecreasing
        auto has_root_pair = [&]() {
            for (size_t u = 0; u < parts.size(); ++u)
                for (size_t v = u + 1; v < parts.size(); ++v)
                    if (sum_index(parts[u], parts[v])) return true;
            return false;
        };
        std::function<void(DegreeVector, int)> dfs = [&](DegreeVector remaining, int min_idx) {
            if (remaining.is_zero()) {
                if (static_cast<int>(parts.size()) >= 3) {
                    ++rep.decompositions_checked;
                    if (!has_root_pair()) {
                        rep.pass = false;
                        std::vector<DegreeVector> witness;
                        for (int p : parts) witness.push_back(roots_[p]);
                        rep.counterexamples.push_back({roots_[ridx], witness});
                    }
                }
                return;
            }
            if (static_cast<int>(parts.size()) >= max_parts) return;
            for (int i = min_idx; i < M; ++i) {
                if (!leq(roots_[i], remaining)) continue;
                parts.push_back(i);
                dfs(remaining - roots_[i], i);
                parts.pop_back();
            }
        };
        dfs(roots_[ridx], 0);
        return rep;
    };
    auto partial = parallel_map<SumLemmaReport>(M, workers, check_alpha);
    SumLemmaReport total;
    for (auto& rep : partial) {
        total.pass = total.pass && rep.pass;
        total.decompositions_checked += rep.decompositions_checked;
        for (auto& c : rep.counterexamples) total.counterexamples.push_back(std::move(c));
    }
    return total;
}

} // namespace prenichols
