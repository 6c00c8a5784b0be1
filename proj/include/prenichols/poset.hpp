#pragma once

#include "prenichols/braiding.hpp"
#include "prenichols/closedsets.hpp"
#include "prenichols/hilbert.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace prenichols {

/**
 * A finite description of the quotient B(q,B): the subset B of hOc kept alive,
 * the generators killed, and the Gelfand-Kirillov dimension |B|.  The algebra
 * itself is never materialized; PBW data and the Hilbert series stand in for it.
 */
struct PreNicholsDescriptor {
    Bitset members = 0;   // over the hOc ground
    int gkdim = 0;
    std::vector<DegreeVector> kept;
    std::vector<DegreeVector> killed;
};

struct PreNicholsPoset {
    RootDatum datum;
    SumGround ground;                        // over hOc
    std::vector<PreNicholsDescriptor> nodes; // canonical order (cardinality, bitset)
    HasseDiagram diagram;                    // indices into nodes
};

// sum structure on hOc by exact degree addition
SumGround build_ground(const RootDatum& d);

// one descriptor per closed subset; order anti-isomorphic to inclusion
PreNicholsPoset full_poset(const RootDatum& d);

// poset of a disconnected braiding from its per-component data; node counts multiply
PreNicholsPoset assemble_disconnected(const std::vector<RootDatum>& parts);

// human-readable block: ambient algebra, killed generators, PBW exponents,
// GKdim, Hilbert series prefix
std::string describe(const PreNicholsPoset& poset, int node, long long max_degree);

// Graphviz DOT, edges oriented along surjections (larger B -> smaller B)
void write_dot(std::ostream& out, const PreNicholsPoset& poset);

} // namespace prenichols
