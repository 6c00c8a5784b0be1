#pragma once

#include "prenichols/lattice.hpp"
#include "prenichols/rootsys.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace prenichols {

using Bitset = std::uint64_t;
constexpr int kGroundCap = 32;

/**
 * A finite set of degree vectors with its internal sum structure: which pairs
 * (including self-pairs) add up to another element.  Serves both Delta_+ and
 * hOc grounds.  Elements are stored in height-lex order.
 */
class SumGround {
public:
    explicit SumGround(std::vector<DegreeVector> elements);

    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<DegreeVector>& elements() const { return elems_; }
    const DegreeVector& element(int i) const { return elems_[i]; }
    std::optional<int> index_of(const DegreeVector& v) const;

    // (i <= j) -> k with elems[i] + elems[j] == elems[k]
    const std::map<std::pair<int, int>, int>& sum_pairs() const { return sums_; }
    std::optional<int> sum_of(int i, int j) const;
    // decompositions of k as unordered in-ground pairs
    const std::vector<std::pair<int, int>>& pairs_summing_to(int k) const { return into_[k]; }

private:
    std::vector<DegreeVector> elems_;
    std::map<std::pair<int, int>, int> sums_;
    std::vector<std::vector<std::pair<int, int>>> into_;
};

bool is_closed_by_sums(const SumGround& g, Bitset s);
// every recorded two-term decomposition of an element of s meets s
bool is_compatible(const SumGround& g, Bitset s);

// all closed-by-sums subsets, sorted by (cardinality, bitset value)
std::vector<Bitset> enumerate_closed(const SumGround& g);

struct HasseDiagram {
    std::vector<Bitset> nodes;                    // canonical order
    std::vector<std::pair<int, int>> edges;       // (smaller set, larger set) covering pairs
    bool unit_covers = true;                      // every cover differs by one element
};

// covering relations of inclusion among the given closed sets
HasseDiagram hasse(const SumGround& g, const std::vector<Bitset>& sets);

// disjoint union of grounds with pairwise disjoint supports
SumGround product_ground(const std::vector<SumGround>& parts);

// bracket closure of span{xi_b : b in s}, decided from the Chevalley structure
// constants rather than the sum table
bool graded_lie_check(const RootSystem& rs, Bitset s);

} // namespace prenichols
