#pragma once

#include "prenichols/numeric.hpp"

#include <optional>
#include <string>

namespace prenichols {

/**
 * Nonzero field element of the form zeta * q^e where zeta = e^{2 pi i rot} is
 * a root of unity (rot rational, reduced, in [0,1)) and q is a fixed formal
 * parameter that is not a root of unity.  Multiplicative group only: products,
 * powers and exact comparisons; no addition.
 */
class Scalar {
public:
    Scalar() : rot_(0), param_exp_(0) {}
    Scalar(Rat rot, long long param_exp);

    static Scalar one() { return Scalar(); }
    static Scalar minus_one() { return Scalar(Rat(1, 2), 0); }
    // e^{2 pi i k/N}
    static Scalar root_of_unity(long long N, long long k = 1);
    static Scalar param(long long e = 1) { return Scalar(Rat(0), e); }

    const Rat& rot() const { return rot_; }
    long long param_exp() const { return param_exp_; }

    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(long long n) const;

    bool operator==(const Scalar& o) const { return rot_ == o.rot_ && param_exp_ == o.param_exp_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool is_one() const { return rot_ == 0 && param_exp_ == 0; }

    // multiplicative order; nullopt means infinite (param_exp != 0)
    std::optional<Int> order() const;

    // true iff *this == g^n for some integer n, decided exactly
    bool in_cyclic_subgroup(const Scalar& g) const;

    std::string str() const;

private:
    Rat rot_;             // reduced, 0 <= rot < 1
    long long param_exp_;
};

// grammar: "zeta(N)^k * q^e" with every factor omissible, "1"/"-1" shorthands,
// optional leading '-' (multiplies by -1)
Scalar parse_scalar(const std::string& text);

} // namespace prenichols
