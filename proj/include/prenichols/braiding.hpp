#pragma once

#include "prenichols/lattice.hpp"
#include "prenichols/rootsys.hpp"
#include "prenichols/scalars.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace prenichols {

/** Braiding matrix q = (q_ij) of nonzero scalars. */
class BraidingMatrix {
public:
    explicit BraidingMatrix(std::vector<std::vector<Scalar>> entries);

    int size() const { return static_cast<int>(q_.size()); }
    const Scalar& q(int i, int j) const { return q_[i][j]; }

    // q_{alpha beta} = prod q_ij^{a_i b_j}, exactly
    Scalar bilinear(const DegreeVector& alpha, const DegreeVector& beta) const;
    // N_beta = ord q_{beta beta}
    std::optional<Int> root_order(const DegreeVector& beta) const;
    // beta of Cartan type: q_{beta,a}q_{a,beta} in <q_{beta,beta}> for all a;
    // testing simple roots suffices by multiplicativity
    bool is_cartan_root(const DegreeVector& beta) const;

    bool operator==(const BraidingMatrix& o) const;

private:
    std::vector<std::vector<Scalar>> q_;
};

/** Vertex labels q_ii and edge labels q_ij q_ji != 1. */
struct DynkinDiagram {
    std::vector<Scalar> vertex;
    std::map<std::pair<int, int>, Scalar> edge; // key (i<j), only labels != 1

    bool operator==(const DynkinDiagram& o) const { return vertex == o.vertex && edge == o.edge; }
    std::string str() const;
};

DynkinDiagram diagram(const BraidingMatrix& b);
bool twist_equivalent(const BraidingMatrix& a, const BraidingMatrix& b);

/** Partition of the vertex set per the diagram. */
struct Components {
    std::vector<int> isolated_plus;          // isolated vertices labelled +1
    std::vector<int> isolated_minus;         // isolated vertices labelled -1
    std::vector<std::vector<int>> connected; // remaining connected components
};

Components components(const BraidingMatrix& b);

// Cartan-type braiding q_ij = q^{d_i a_ij}, q a primitive N-th root of unity.
// N must be odd and coprime to 3 whenever the matrix has a G2 block.
BraidingMatrix cartan_braiding(const CartanMatrix& cm, long long N);

enum class FamilyTag { distinguished, A2_G3, superA3_2, superA3_123, g23_d1, g23_d2 };
std::string family_tag_name(FamilyTag t);

/** One connected component of a root datum, in global coordinates. */
struct ComponentDatum {
    std::vector<int> vertices;             // global vertex indices, in path/local order
    FamilyTag family = FamilyTag::distinguished;
    std::vector<DegreeVector> positive_roots; // global coords, height-lex
    std::vector<long long> N_beta;            // aligned with positive_roots
    std::vector<bool> cartan_flag;            // aligned with positive_roots
    std::vector<DegreeVector> hOc;            // degrees of the coinvariant generators
    std::vector<bool> hOc_bold;               // true for generators beyond N_beta*beta
};

/**
 * The data the poset machinery runs on: positive roots with orders and Cartan
 * flags per connected component, and the set hOc of coinvariant-generator
 * degrees (N_beta*beta over Cartan roots, extended by the extra generators of
 * the five exceptional families).
 */
struct RootDatum {
    BraidingMatrix braiding;
    std::vector<ComponentDatum> comps;

    int rank() const { return braiding.size(); }
    std::vector<DegreeVector> all_positive_roots() const;
    std::vector<long long> all_N_beta() const;
    std::vector<bool> all_cartan_flags() const;
    std::vector<DegreeVector> hOc() const;      // height-lex sorted
    std::vector<DegreeVector> hOc_bold() const; // the non-underline part
};

// Builds the datum.  Rejects isolated +-1 vertices, Cartan A/D components with
// all labels -1, and unrecognized components unless their roots are supplied.
RootDatum build_datum(const BraidingMatrix& b,
                      const std::optional<std::vector<DegreeVector>>& supplied_roots = std::nullopt);

// elements of the input not expressible as a sum of two elements of the input
std::vector<DegreeVector> underline_basis(const std::vector<DegreeVector>& degrees);

// shifts a datum into Z^rank starting at the given vertex offset, padding the
// braiding with 1 entries; used to place parts side by side before assembly
RootDatum embed_datum(const RootDatum& part, int rank, int offset);

} // namespace prenichols
