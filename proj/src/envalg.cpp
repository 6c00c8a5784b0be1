#include "prenichols/envalg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace prenichols {

PBWAlgebra::PBWAlgebra(const RootSystem& rs, long long max_height) : rs_(rs), d_(max_height) {
    if (max_height < 1) throw std::invalid_argument("max height must be positive");
    // reversed convex order; [xi_b, xi_g] lands strictly between its factors
    // either way, which is all the straightening needs
    order_ = rs.convex_order();
    std::reverse(order_.begin(), order_.end());
    pos_of_.resize(order_.size());
    for (int p = 0; p < generators(); ++p) pos_of_[order_[p]] = p;
}

DegreeVector PBWAlgebra::degree_of(const Monomial& m) const {
    DegreeVector d = DegreeVector::zero(rs_.rank());
    for (int p = 0; p < generators(); ++p)
        if (m[p]) d = d + rs_.positive_roots()[order_[p]] * m[p];
    return d;
}

long long PBWAlgebra::height_of(const Monomial& m) const {
    long long h = 0;
    for (int p = 0; p < generators(); ++p)
        if (m[p]) h += m[p] * height(rs_.positive_roots()[order_[p]]);
    return h;
}

LinComb PBWAlgebra::mul_gen(const Monomial& m, int p) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(m, p);
    auto hit = insert_memo_.find(key);
    if (hit != insert_memo_.end()) return hit->second;
    int last = -1;
    for (int q = generators() - 1; q >= 0; --q)
        if (m[q]) {
            last = q;
            break;
        }
    LinComb out;
    if (last <= p) {
        Monomial t = m;
        ++t[p];
        out[t] = 1;
    } else {
        Monomial head = m;
        --head[last];
        // m xi_p = (head xi_p) xi_last + N(last,p) head xi_{last+p}
        for (auto& [t, c] : mul_gen(head, p)) {
            Monomial u = t;
            ++u[last];
            out[u] += c;
        }
        const auto& roots = rs_.positive_roots();
        DegreeVector sum = roots[order_[last]] + roots[order_[p]];
        if (auto k = rs_.root_index(sum)) {
            long long n = rs_.struct_const(roots[order_[last]], roots[order_[p]]);
            for (auto& [t, c] : mul_gen(head, pos_of_[*k])) out[t] += c * n;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return insert_memo_.emplace(std::move(key), std::move(out)).first->second;
}

const LinComb& PBWAlgebra::product(const Monomial& a, const Monomial& b) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(a, b);
    auto hit = prod_memo_.find(key);
    if (hit != prod_memo_.end()) return hit->second;
    LinComb cur;
    if (height_of(a) + height_of(b) <= d_) {
        cur[a] = 1;
        for (int p = 0; p < generators(); ++p) {
            for (int rep = 0; rep < b[p]; ++rep) {
                LinComb next;
                for (auto& [t, c] : cur)
                    for (auto& [u, c2] : mul_gen(t, p)) next[u] += c * c2;
                cur = std::move(next);
            }
        }
        for (auto it = cur.begin(); it != cur.end();)
            it = it->second == 0 ? cur.erase(it) : std::next(it);
    }
    return prod_memo_.emplace(std::move(key), std::move(cur)).first->second;
}

const std::vector<Monomial>& PBWAlgebra::monomials_of_degree(const DegreeVector& deg) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto hit = mono_by_degree_.find(deg);
    if (hit != mono_by_degree_.end()) return hit->second;
    std::vector<Monomial> out;
    Monomial cur(generators(), 0);
    const auto& roots = rs_.positive_roots();
    std::function<void(int, DegreeVector)> walk = [&](int p, DegreeVector rest) {
        if (rest.is_zero()) {
            Monomial t = cur;
            std::fill(t.begin() + p, t.end(), 0);
            out.push_back(std::move(t));
            return;
        }
        if (p == generators()) return;
        const DegreeVector& beta = roots[order_[p]];
        DegreeVector r = rest;
        for (int e = 0;; ++e) {
            cur[p] = e;
            walk(p + 1, r);
            if (!leq(beta, r)) break;
            r = r - beta;
        }
        cur[p] = 0;
    };
    if (deg.is_nonnegative() && height(deg) <= d_) walk(0, deg);
    std::sort(out.begin(), out.end());
    return mono_by_degree_.emplace(deg, std::move(out)).first->second;
}

std::vector<DegreeVector> PBWAlgebra::degrees_up_to(long long h) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto hit = degrees_cache_.find(h);
    if (hit != degrees_cache_.end()) return hit->second;
    // reachable degrees = nonnegative combinations of the roots, height <= h
    std::set<DegreeVector> seen{DegreeVector::zero(rs_.rank())};
    std::vector<DegreeVector> frontier{DegreeVector::zero(rs_.rank())};
    while (!frontier.empty()) {
        std::vector<DegreeVector> next;
        for (const auto& d : frontier)
            for (const auto& beta : rs_.positive_roots()) {
                DegreeVector s = d + beta;
                if (height(s) > h || seen.count(s)) continue;
                seen.insert(s);
                next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::vector<DegreeVector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), HeightLexLess{});
    return degrees_cache_.emplace(h, std::move(out)).first->second;
}

std::string PBWAlgebra::mono_str(const Monomial& m) const {
    std::ostringstream out;
    bool any = false;
    for (int p = 0; p < generators(); ++p) {
        if (!m[p]) continue;
        if (any) out << ' ';
        out << "xi(" << format_compact(rs_.positive_roots()[order_[p]]) << ")";
        if (m[p] > 1) out << '^' << m[p];
        any = true;
    }
    if (!any) out << '1';
    return out.str();
}

std::vector<std::tuple<Monomial, Monomial, Int>> DualCoalgebra::reduced_coproduct(
    const Monomial& m) const {
    std::vector<std::tuple<Monomial, Monomial, Int>> out;
    DegreeVector deg = u_.degree_of(m);
    // coefficient of m* n* in Delta(c*) is the coefficient of c in m n
    for (const auto& d1 : u_.degrees_up_to(height(deg))) {
        if (d1.is_zero() || d1 == deg || !leq(d1, deg)) continue;
        DegreeVector d2 = deg - d1;
        for (const auto& m1 : u_.monomials_of_degree(d1))
            for (const auto& m2 : u_.monomials_of_degree(d2)) {
                const auto& prod = u_.product(m1, m2);
                auto it = prod.find(m);
                if (it != prod.end() && it->second != 0) out.push_back({m1, m2, it->second});
            }
    }
    return out;
}

std::pair<Monomial, Int> DualCoalgebra::product(const Monomial& a, const Monomial& b) const {
    Monomial sum(a.size());
    Int coeff = 1;
    for (size_t p = 0; p < a.size(); ++p) {
        sum[p] = a[p] + b[p];
        // binomial C(a+b, a), exactly
        Int binom = 1;
        for (int i = 1; i <= b[p]; ++i) binom = binom * (a[p] + i) / i;
        coeff *= binom;
    }
    return {std::move(sum), std::move(coeff)};
}

long long DualCoalgebra::primitive_dimension(const DegreeVector& deg) const {
    if (deg.is_zero()) return 0;
    const auto& monos = u_.monomials_of_degree(deg);
    if (monos.empty()) return 0;
    const int dim = static_cast<int>(monos.size());
    std::map<Monomial, int> col;
    for (int i = 0; i < dim; ++i) col[monos[i]] = i;
    // rows of the reduced-coproduct matrix, reduced incrementally over Q
    std::vector<std::vector<Rat>> echelon;
    std::vector<int> pivots;
    int rank = 0;
    auto feed = [&](std::vector<Rat> row) {
        for (size_t r = 0; r < echelon.size(); ++r) {
            if (row[pivots[r]] == 0) continue;
            Rat f = row[pivots[r]];
            for (int c = 0; c < dim; ++c) row[c] -= f * echelon[r][c];
        }
        int piv = -1;
        for (int c = 0; c < dim; ++c)
            if (row[c] != 0) {
                piv = c;
                break;
            }
        if (piv < 0) return;
        Rat f = row[piv];
        for (int c = 0; c < dim; ++c) row[c] /= f;
        echelon.push_back(std::move(row));
        pivots.push_back(piv);
        ++rank;
    };
    for (const auto& d1 : u_.degrees_up_to(height(deg))) {
        if (rank == dim) break;
        if (d1.is_zero() || d1 == deg || !leq(d1, deg)) continue;
        DegreeVector d2 = deg - d1;
        for (const auto& m1 : u_.monomials_of_degree(d1)) {
            for (const auto& m2 : u_.monomials_of_degree(d2)) {
                const auto& prod = u_.product(m1, m2);
                std::vector<Rat> row(dim, Rat(0));
                bool nonzero = false;
                for (const auto& [mono, c] : prod) {
                    auto it = col.find(mono);
                    if (it != col.end() && c != 0) {
                        row[it->second] = Rat(c);
                        nonzero = true;
                    }
                }
                if (nonzero) feed(std::move(row));
                if (rank == dim) break;
            }
            if (rank == dim) break;
        }
    }
    return dim - rank;
}

long long DualCoalgebra::primitive_total(long long h) const {
    long long total = 0;
    for (const auto& deg : u_.degrees_up_to(h))
        if (!deg.is_zero()) total += primitive_dimension(deg);
    return total;
}

namespace {

bool monomial_in_set(const PBWAlgebra& u, const Monomial& m, Bitset root_set) {
    for (int p = 0; p < u.generators(); ++p)
        if (m[p] && !(root_set >> u.root_at(p) & 1)) return false;
    return true;
}

} // namespace

HopfIdealReport hopf_ideal_check(const PBWAlgebra& u, Bitset root_set) {
    HopfIdealReport rep;
    // I(B)* side: products of B-monomials must not hit monomials using a
    // generator outside B
    std::vector<Monomial> good;
    for (const auto& deg : u.degrees_up_to(u.max_height()))
        for (const auto& m : u.monomials_of_degree(deg))
            if (!deg.is_zero() && monomial_in_set(u, m, root_set)) good.push_back(m);
    for (const auto& m1 : good) {
        long long h1 = u.height_of(m1);
        for (const auto& m2 : good) {
            if (h1 + u.height_of(m2) > u.max_height()) continue;
            ++rep.pairs_checked;
            for (const auto& [mono, c] : u.product(m1, m2)) {
                if (c != 0 && !monomial_in_set(u, mono, root_set)) {
                    rep.pass = false;
                    if (rep.witnesses.size() < 5)
                        rep.witnesses.push_back(
                            {u.mono_str(mono), u.mono_str(m1), u.mono_str(m2)});
                }
            }
        }
    }
    return rep;
}

HopfIdealReport verify_hopf_ideal(const PBWAlgebra& u, Bitset root_set) {
    const auto& rs = u.roots();
    SumGround ground(rs.positive_roots());
    if (!is_closed_by_sums(ground, root_set))
        throw std::invalid_argument("the set B must be closed by sums");
    return hopf_ideal_check(u, root_set);
}

Z1234Report z1234_fixture(long long max_height) {
    if (max_height < 4) throw std::invalid_argument("the fixture needs height >= 4");
    Z1234Report rep;
    RootSystem rs(named_cartan_matrix("A4"));
    PBWAlgebra u(rs, max_height);
    DualCoalgebra dual(u);

    auto vec = [&](std::initializer_list<long long> c) { return DegreeVector(std::vector<long long>(c)); };
    std::vector<DegreeVector> bset = {vec({1, 0, 0, 0}), vec({1, 1, 1, 0}), vec({1, 1, 1, 1}),
                                      vec({0, 1, 1, 1}), vec({0, 0, 0, 1})};
    Bitset B = 0;
    for (const auto& b : bset) {
        auto idx = rs.root_index(b);
        if (!idx) throw std::logic_error("fixture root missing");
        B |= Bitset(1) << *idx;
    }
    SumGround ground(rs.positive_roots());
    if (!is_closed_by_sums(ground, B)) {
        rep.detail = "fixture set is not closed by sums";
        return rep;
    }

    DegreeVector target = vec({1, 1, 1, 1});
    Monomial c0(u.generators(), 0);
    c0[u.pos_of_root(*rs.root_index(target))] = 1;

    auto zname = [&](const Monomial& m) {
        std::ostringstream out;
        bool any = false;
        for (int p = 0; p < u.generators(); ++p) {
            if (!m[p]) continue;
            if (any) out << ' ';
            out << "z(" << format_compact(rs.positive_roots()[u.root_at(p)]) << ")";
            if (m[p] > 1) out << '^' << m[p];
            any = true;
        }
        if (!any) out << "1";
        return out.str();
    };

    // reduced coproduct of z_1234 inside Z(B): only B-monomial tensor factors
    std::vector<std::pair<std::pair<DegreeVector, DegreeVector>, Int>> support;
    for (const auto& [m1, m2, c] : dual.reduced_coproduct(c0)) {
        if (!monomial_in_set(u, m1, B) || !monomial_in_set(u, m2, B)) continue;
        rep.terms.push_back({zname(m1), zname(m2), c});
        DegreeVector d1 = u.degree_of(m1), d2 = u.degree_of(m2);
        support.push_back({{d1, d2}, c});
    }
    std::vector<std::pair<DegreeVector, DegreeVector>> expect = {
        {vec({1, 0, 0, 0}), vec({0, 1, 1, 1})}, {vec({1, 1, 1, 0}), vec({0, 0, 0, 1})}};
    rep.support_ok = support.size() == 2;
    if (rep.support_ok) {
        for (const auto& e : expect) {
            bool found = false;
            for (const auto& [pr, c] : support)
                if (pr == e && c != 0) found = true;
            rep.support_ok = rep.support_ok && found;
        }
    }
    rep.coefficients_pm1 = true;
    for (const auto& [pr, c] : support)
        if (c != 1 && c != -1) rep.coefficients_pm1 = false;

    // every other z_b, b in B - {1234}, is primitive in Z(B)
    rep.primitives_ok = true;
    for (const auto& b : bset) {
        if (b == target) continue;
        Monomial cb(u.generators(), 0);
        cb[u.pos_of_root(*rs.root_index(b))] = 1;
        for (const auto& [m1, m2, c] : dual.reduced_coproduct(cb)) {
            if (monomial_in_set(u, m1, B) && monomial_in_set(u, m2, B) && c != 0) {
                rep.primitives_ok = false;
                rep.detail += "unexpected term in coproduct of z(" + format_compact(b) + "); ";
            }
        }
    }
    rep.pass = rep.support_ok && rep.primitives_ok;
    return rep;
}

} // namespace prenichols
