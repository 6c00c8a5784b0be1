#pragma once

#include "prenichols/closedsets.hpp"
#include "prenichols/lattice.hpp"
#include "prenichols/numeric.hpp"
#include "prenichols/rootsys.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace prenichols {

// exponent vector over the PBW positions; Monomial[p] is the power of the
// generator sitting at convex position p
using Monomial = std::vector<int>;
using LinComb = std::map<Monomial, Int>;

/**
 * U(n_+) truncated at total height D: PBW monomials over a convex order of
 * the positive roots, with multiplication by bracket straightening
 * [xi_b, xi_g] = N_{b,g} xi_{b+g}.  Products whose degree exceeds D are
 * discarded (the grading makes this exact on every kept degree).
 */
class PBWAlgebra {
public:
    PBWAlgebra(const RootSystem& rs, long long max_height);

    const RootSystem& roots() const { return rs_; }
    long long max_height() const { return d_; }
    int generators() const { return static_cast<int>(order_.size()); }
    int root_at(int pos) const { return order_[pos]; }
    int pos_of_root(int root_index) const { return pos_of_[root_index]; }

    DegreeVector degree_of(const Monomial& m) const;
    long long height_of(const Monomial& m) const;

    // straightened product, truncated at D
    const LinComb& product(const Monomial& a, const Monomial& b) const;

    // all PBW monomials of the given degree (empty when outside the cone)
    const std::vector<Monomial>& monomials_of_degree(const DegreeVector& deg) const;
    // degrees of height <= h carrying at least one monomial, height-lex order
    std::vector<DegreeVector> degrees_up_to(long long h) const;

    std::string mono_str(const Monomial& m) const; // "xi(12)^2 xi(2)" style

private:
    const RootSystem& rs_;
    long long d_;
    std::vector<int> order_;   // position -> root index (reversed convex order)
    std::vector<int> pos_of_;  // root index -> position
    // lazily filled caches; the recursive mutex keeps concurrent readers safe
    // (map nodes are stable, so returned references survive later inserts)
    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<Monomial, int>, LinComb> insert_memo_;
    mutable std::map<std::pair<Monomial, Monomial>, LinComb> prod_memo_;
    mutable std::map<DegreeVector, std::vector<Monomial>> mono_by_degree_;
    mutable std::map<long long, std::vector<DegreeVector>> degrees_cache_;

    LinComb mul_gen(const Monomial& m, int p) const;
};

/**
 * Graded dual of a PBWAlgebra: the coordinate ring of the unipotent group.
 * Dual-basis vectors m* of PBW monomials; z_b := (xi_b)*.  The coproduct
 * transposes the multiplication, the product transposes the (binomial)
 * coproduct of U.
 */
class DualCoalgebra {
public:
    explicit DualCoalgebra(const PBWAlgebra& u) : u_(u) {}
    const PBWAlgebra& algebra() const { return u_; }

    // full coproduct of m* minus the primitive part: (m1, m2, coeff) terms
    std::vector<std::tuple<Monomial, Monomial, Int>> reduced_coproduct(const Monomial& m) const;

    // dual product: divided-power rule m* n* = prod_p C(m_p+n_p, m_p) (m+n)*
    std::pair<Monomial, Int> product(const Monomial& a, const Monomial& b) const;

    // dim ker of the reduced coproduct on the dual component of this degree
    long long primitive_dimension(const DegreeVector& deg) const;
    // sum of primitive dimensions over all degrees of height <= h
    long long primitive_total(long long h) const;

private:
    const PBWAlgebra& u_;
};

struct HopfIdealReport {
    bool pass = true;
    long long pairs_checked = 0;
    // (bad monomial, good factor, good factor) witnesses
    std::vector<std::tuple<std::string, std::string, std::string>> witnesses;
};

// raw coideal test for I(B) = span{m* : m uses a generator outside B};
// no closedness assumption, used to pair the lemma with its converse
HopfIdealReport hopf_ideal_check(const PBWAlgebra& u, Bitset root_set);

// spec'd entry point: requires B closed by sums over Delta_+
HopfIdealReport verify_hopf_ideal(const PBWAlgebra& u, Bitset root_set);

struct Z1234Report {
    bool pass = false;
    bool support_ok = false;
    bool primitives_ok = false;
    bool coefficients_pm1 = false;
    std::vector<std::tuple<std::string, std::string, Int>> terms; // oriented coproduct terms
    std::string detail;
};

// the sl_5 fixture: A4, B = {1, 123, 1234, 234, 4}; checks the reduced
// coproduct of z_1234 in Z(B) and primitivity of the other generators
Z1234Report z1234_fixture(long long max_height);

} // namespace prenichols
