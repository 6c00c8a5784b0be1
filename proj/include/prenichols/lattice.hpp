#pragma once

#include "prenichols/numeric.hpp"

#include <set>
#include <string>
#include <vector>

namespace prenichols {

/**
 * Element of Z^theta: the grading lattice shared by every module.
 * Immutable after construction; all arithmetic is exact (overflow-checked).
 */
class DegreeVector {
public:
    DegreeVector() = default;
    explicit DegreeVector(std::vector<long long> coords) : c_(std::move(coords)) {}
    static DegreeVector zero(int rank) { return DegreeVector(std::vector<long long>(rank, 0)); }
    static DegreeVector basis(int rank, int i);

    int rank() const { return static_cast<int>(c_.size()); }
    long long operator[](int i) const { return c_[i]; }
    const std::vector<long long>& coords() const { return c_; }

    DegreeVector operator+(const DegreeVector& o) const;
    DegreeVector operator-(const DegreeVector& o) const;
    DegreeVector operator*(long long k) const;

    bool operator==(const DegreeVector& o) const { return c_ == o.c_; }
    bool operator!=(const DegreeVector& o) const { return c_ != o.c_; }

    bool is_zero() const;
    bool is_nonnegative() const;

private:
    std::vector<long long> c_;
    void check_rank(const DegreeVector& o) const;
};

long long height(const DegreeVector& v);
std::set<int> support(const DegreeVector& v);

// componentwise order; throws on rank mismatch
bool leq(const DegreeVector& v, const DegreeVector& w);

// canonical total order: by height, ties broken lexicographically
bool height_lex_less(const DegreeVector& a, const DegreeVector& b);

struct HeightLexLess {
    bool operator()(const DegreeVector& a, const DegreeVector& b) const {
        return height_lex_less(a, b);
    }
};

// so DegreeVector can key std::map/std::set directly
inline bool operator<(const DegreeVector& a, const DegreeVector& b) { return height_lex_less(a, b); }

/**
 * Compact text form "1^3 2^6 3^3": one segment per nonzero entry, exponent 1
 * omitted, bare segments concatenated ("12" is alpha_1+alpha_2).  The zero
 * vector renders as "0".  Vertices beyond 9 are written "(10)".
 */
std::string format_compact(const DegreeVector& v);

// inverse of format_compact; rank must be given since trailing zeros are elided
DegreeVector parse_compact(const std::string& text, int rank);

} // namespace prenichols
