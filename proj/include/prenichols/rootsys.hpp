#pragma once

#include "prenichols/lattice.hpp"
#include "prenichols/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prenichols {

/**
 * Generalized Cartan matrix of finite type with its minimal symmetrizers.
 * Construction validates: diagonal 2, off-diagonal <= 0, a_ij = 0 iff a_ji = 0,
 * symmetrizability, and positive definiteness of (d_i a_ij).
 */
class CartanMatrix {
public:
    explicit CartanMatrix(std::vector<std::vector<long long>> entries);

    int rank() const { return static_cast<int>(a_.size()); }
    long long a(int i, int j) const { return a_[i][j]; }
    long long d(int i) const { return d_[i]; }
    const std::vector<std::vector<long long>>& entries() const { return a_; }

    // symmetric invariant form (alpha_i, alpha_j) = d_i a_ij, extended bilinearly
    Int form(const DegreeVector& v, const DegreeVector& w) const;

private:
    std::vector<std::vector<long long>> a_;
    std::vector<long long> d_;
};

// "A3", "B2", "G2", "E6", products like "B2xA1"; ranks A-D capped at 12
CartanMatrix named_cartan_matrix(const std::string& name);

/**
 * The positive roots of the semisimple Lie algebra of a finite-type Cartan
 * matrix, with the sum structure and (optionally) Chevalley structure
 * constants N_{beta,gamma} in the extraspecial-pair sign convention.
 */
class RootSystem {
public:
    explicit RootSystem(CartanMatrix cm);

    int rank() const { return cm_.rank(); }
    const CartanMatrix& cartan() const { return cm_; }
    const std::vector<DegreeVector>& positive_roots() const { return roots_; }
    int root_count() const { return static_cast<int>(roots_.size()); }

    std::optional<int> root_index(const DegreeVector& v) const;
    bool is_positive_root(const DegreeVector& v) const { return root_index(v).has_value(); }
    // true for v in Delta = Delta_+ u (-Delta_+)
    bool is_root(const DegreeVector& v) const;

    // index of roots[i] + roots[j] when that sum is again a positive root
    std::optional<int> sum_index(int i, int j) const;

    // Chevalley constant for a pair of (possibly negative) roots whose sum is
    // a root; computed on first use.  [xi_b, xi_g] = struct_const(b,g) xi_{b+g}.
    long long struct_const(const DegreeVector& beta, const DegreeVector& gamma) const;
    long long struct_const(int i, int j) const { return struct_const(roots_[i], roots_[j]); }

    // positions into positive_roots() forming a convex total order
    const std::vector<int>& convex_order() const;

    struct SumLemmaReport {
        bool pass = true;
        long long decompositions_checked = 0;
        // (root, offending decomposition) witnesses
        std::vector<std::pair<DegreeVector, std::vector<DegreeVector>>> counterexamples;
    };
    // exhaustively checks: every decomposition of a positive root into
    // m in [3, max_parts] positive roots contains a pair summing to a root
    SumLemmaReport verify_sum_lemma(int max_parts, int workers = 1) const;

private:
    CartanMatrix cm_;
    std::vector<DegreeVector> roots_;               // height-lex order
    std::map<DegreeVector, int> index_;
    std::map<std::pair<int, int>, int> sums_;       // (i<=j) -> k
    mutable std::map<std::pair<DegreeVector, DegreeVector>, long long> nconst_;
    mutable bool nconst_built_ = false;
    mutable std::vector<int> convex_;

    void generate();
    void build_struct_consts() const;
    long long resolve_n(const DegreeVector& x, const DegreeVector& y) const;
};

} // namespace prenichols
