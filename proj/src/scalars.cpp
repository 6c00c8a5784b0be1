#include "prenichols/scalars.hpp"

#include <cctype>
#include <sstream>

namespace prenichols {

namespace {

Rat mod1(Rat r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r); // > 0, reduced
    Int q = num / den;
    if (num < 0 && q * den != num) q -= 1; // floor division
    return r - Rat(q);
}

} // namespace

Scalar::Scalar(Rat rot, long long param_exp) : rot_(mod1(std::move(rot))), param_exp_(param_exp) {}

Scalar Scalar::root_of_unity(long long N, long long k) {
    if (N < 1) throw std::invalid_argument("root of unity order must be >= 1");
    return Scalar(Rat(k, N), 0);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(rot_ + o.rot_, checked_add(param_exp_, o.param_exp_));
}

Scalar Scalar::inverse() const { return Scalar(-rot_, checked_mul(param_exp_, -1)); }

Scalar Scalar::pow(long long n) const {
    return Scalar(rot_ * Rat(n), checked_mul(param_exp_, n));
}

std::optional<Int> Scalar::order() const {
    if (param_exp_ != 0) return std::nullopt;
    return Int(boost::multiprecision::denominator(rot_));
}

bool Scalar::in_cyclic_subgroup(const Scalar& g) const {
    if (g.param_exp_ != 0) {
        // g^n has parameter exponent n*e; at most one candidate n
        if (param_exp_ % g.param_exp_ != 0) return false;
        long long n = param_exp_ / g.param_exp_;
        return mod1(rot_ - g.rot_ * Rat(n)) == 0;
    }
    if (param_exp_ != 0) return false;
    // <g> is the full group of N-th roots of unity (rot of g is reduced)
    Int N = boost::multiprecision::denominator(g.rot_);
    Int d = boost::multiprecision::denominator(rot_);
    return N % d == 0;
}

std::string Scalar::str() const {
    if (is_one()) return "1";
    if (rot_ == Rat(1, 2) && param_exp_ == 0) return "-1";
    std::ostringstream out;
    bool need_star = false;
    if (rot_ != 0) {
        Int k = boost::multiprecision::numerator(rot_);
        Int N = boost::multiprecision::denominator(rot_);
        out << "zeta(" << N << ")";
        if (k != 1) out << "^" << k;
        need_star = true;
    }
    if (param_exp_ != 0) {
        if (need_star) out << " * ";
        out << "q";
        if (param_exp_ != 1) out << "^" << param_exp_;
    }
    return out.str();
}

Scalar parse_scalar(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_int = [&]() -> long long {
        skip_ws();
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("bad integer in scalar '" + text + "'");
        return std::stoll(text.substr(start, i - start));
    };

    Scalar result = Scalar::one();
    skip_ws();
    if (i < text.size() && text[i] == '-') {
        result = result * Scalar::minus_one();
        ++i;
    }
    bool saw_factor = false;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '*') { ++i; continue; }
        if (text[i] == '1') {
            ++i;
            saw_factor = true;
            continue;
        }
        if (text.compare(i, 5, "zeta(") == 0) {
            i += 5;
            long long N = parse_int();
            skip_ws();
            if (i >= text.size() || text[i] != ')')
                throw std::invalid_argument("missing ')' in scalar '" + text + "'");
            ++i;
            long long k = 1;
            if (i < text.size() && text[i] == '^') { ++i; k = parse_int(); }
            result = result * Scalar::root_of_unity(N, k);
            saw_factor = true;
            continue;
        }
        if (text[i] == 'q') {
            ++i;
            long long e = 1;
            if (i < text.size() && text[i] == '^') { ++i; e = parse_int(); }
            result = result * Scalar::param(e);
            saw_factor = true;
            continue;
        }
        throw std::invalid_argument("cannot parse scalar '" + text + "'");
    }
    if (!saw_factor)
        throw std::invalid_argument("empty scalar '" + text + "'");
    return result;
}

} // namespace prenichols
