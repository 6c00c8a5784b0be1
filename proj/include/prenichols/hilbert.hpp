#pragma once

#include "prenichols/braiding.hpp"
#include "prenichols/closedsets.hpp"
#include "prenichols/lattice.hpp"
#include "prenichols/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace prenichols {

/**
 * Multivariate power series with exact integer coefficients, truncated at
 * total degree D.  The truncation degree is part of the value: operations mix
 * only series with equal rank and D.
 */
class TruncatedSeries {
public:
    TruncatedSeries(int rank, long long max_degree);
    static TruncatedSeries one(int rank, long long max_degree);
    static TruncatedSeries monomial(const DegreeVector& d, long long max_degree, Int coeff = 1);

    int rank() const { return rank_; }
    long long max_degree() const { return d_; }
    const std::map<DegreeVector, Int>& coeffs() const { return c_; }
    Int coeff(const DegreeVector& d) const;
    void set_coeff(const DegreeVector& d, Int value);
    void add_coeff(const DegreeVector& d, const Int& value);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    bool operator==(const TruncatedSeries& o) const;
    bool leq_coefficientwise(const TruncatedSeries& o) const;
    Int sum_of_coeffs() const;

    std::string str(size_t max_terms = 0) const;

private:
    int rank_;
    long long d_;
    std::map<DegreeVector, Int> c_; // nonzero coefficients only, height <= d_
    void check_compatible(const TruncatedSeries& o) const;
};

// sum_{k>=0} t^{k b}, truncated
TruncatedSeries geometric_factor(const DegreeVector& beta, long long max_degree);
// 1 + t^b + ... + t^{(N-1) b}
TruncatedSeries qfactor(const DegreeVector& beta, long long N, long long max_degree);

// Hilbert series of the Nichols algebra: restricted PBW over Delta_+^q
TruncatedSeries nichols_series(const RootDatum& d, long long max_degree);

// Hilbert series of B(q,B): nichols_series times a geometric factor per element of B
TruncatedSeries prenichols_series(const RootDatum& d, const SumGround& ground, Bitset B,
                                  long long max_degree);

// Hilbert series of the full quotient computed along the other PBW route:
// unbounded Cartan generators, bounded non-Cartan ones, one geometric factor
// per extra (bold) generator
TruncatedSeries eminent_series_structural(const RootDatum& d, long long max_degree);

// independent check: explicit enumeration of restricted PBW monomials
// x^{n} z^{p}, n_beta < N_beta, z over the members of B, binned by degree
TruncatedSeries pbw_count_oracle(const RootDatum& d, const SumGround& ground, Bitset B,
                                 long long max_degree);

inline int gkdim(Bitset B) { return __builtin_popcountll(B); }

// default truncation: 2 max height over hOc, plus 4
long long default_max_degree(const RootDatum& d);

} // namespace prenichols
