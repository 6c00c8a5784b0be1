#include "prenichols/hilbert.hpp"

#include <functional>
#include <sstream>

namespace prenichols {

TruncatedSeries::TruncatedSeries(int rank, long long max_degree) : rank_(rank), d_(max_degree) {
    if (rank < 1) throw std::invalid_argument("series rank must be positive");
    if (max_degree < 0) throw std::invalid_argument("truncation degree must be nonnegative");
}

TruncatedSeries TruncatedSeries::one(int rank, long long max_degree) {
    TruncatedSeries s(rank, max_degree);
    s.c_[DegreeVector::zero(rank)] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const DegreeVector& d, long long max_degree, Int coeff) {
    TruncatedSeries s(d.rank(), max_degree);
    s.set_coeff(d, std::move(coeff));
    return s;
}

Int TruncatedSeries::coeff(const DegreeVector& d) const {
    auto it = c_.find(d);
    return it == c_.end() ? Int(0) : it->second;
}

void TruncatedSeries::set_coeff(const DegreeVector& d, Int value) {
    if (d.rank() != rank_) throw std::invalid_argument("degree of wrong rank");
    if (!d.is_nonnegative() || height(d) > d_) return;
    if (value == 0)
        c_.erase(d);
    else
        c_[d] = std::move(value);
}

void TruncatedSeries::add_coeff(const DegreeVector& d, const Int& value) {
    if (d.rank() != rank_) throw std::invalid_argument("degree of wrong rank");
    if (!d.is_nonnegative() || height(d) > d_ || value == 0) return;
    Int& slot = c_[d];
    slot += value;
    if (slot == 0) c_.erase(d);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("series of different rank");
    if (d_ != o.d_) throw std::invalid_argument("series with different truncation degrees");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries out = *this;
    for (const auto& [d, v] : o.c_) out.add_coeff(d, v);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries out = *this;
    for (const auto& [d, v] : o.c_) out.add_coeff(d, -v);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries out(rank_, d_);
    for (const auto& [da, va] : c_) {
        long long ha = height(da);
        for (const auto& [db, vb] : o.c_) {
            if (ha + height(db) > d_) continue;
            out.add_coeff(da + db, va * vb);
        }
    }
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    check_compatible(o);
    return c_ == o.c_;
}

bool TruncatedSeries::leq_coefficientwise(const TruncatedSeries& o) const {
    check_compatible(o);
    for (const auto& [d, v] : c_)
        if (v > o.coeff(d)) return false;
    for (const auto& [d, v] : o.c_)
        if (coeff(d) > v) return false;
    return true;
}

Int TruncatedSeries::sum_of_coeffs() const {
    Int total = 0;
    for (const auto& [d, v] : c_) total += v;
    return total;
}

std::string TruncatedSeries::str(size_t max_terms) const {
    std::ostringstream out;
    size_t count = 0;
    for (const auto& [d, v] : c_) {
        if (max_terms && count >= max_terms) {
            out << " + ...";
            break;
        }
        if (count) out << " + ";
        if (d.is_zero())
            out << v;
        else if (v == 1)
            out << "t(" << format_compact(d) << ")";
        else
            out << v << " t(" << format_compact(d) << ")";
        ++count;
    }
    if (count == 0) out << "0";
    return out.str();
}

TruncatedSeries geometric_factor(const DegreeVector& beta, long long max_degree) {
    if (beta.is_zero() || !beta.is_nonnegative())
        throw std::invalid_argument("geometric factor needs a nonzero nonnegative degree");
    TruncatedSeries s(beta.rank(), max_degree);
    long long h = height(beta);
    for (long long k = 0; k * h <= max_degree; ++k) s.set_coeff(beta * k, 1);
    return s;
}

TruncatedSeries qfactor(const DegreeVector& beta, long long N, long long max_degree) {
    if (beta.is_zero() || !beta.is_nonnegative())
        throw std::invalid_argument("qfactor needs a nonzero nonnegative degree");
    if (N < 2) throw std::invalid_argument("qfactor needs N >= 2");
    TruncatedSeries s(beta.rank(), max_degree);
    long long h = height(beta);
    for (long long k = 0; k < N && k * h <= max_degree; ++k) s.set_coeff(beta * k, 1);
    return s;
}

TruncatedSeries nichols_series(const RootDatum& d, long long max_degree) {
    TruncatedSeries s = TruncatedSeries::one(d.rank(), max_degree);
    auto roots = d.all_positive_roots();
    auto orders = d.all_N_beta();
    for (size_t i = 0; i < roots.size(); ++i) s = s * qfactor(roots[i], orders[i], max_degree);
    return s;
}

TruncatedSeries prenichols_series(const RootDatum& d, const SumGround& ground, Bitset B,
                                  long long max_degree) {
    if (!is_closed_by_sums(ground, B))
        throw std::invalid_argument("the set B must be closed by sums");
    TruncatedSeries s = nichols_series(d, max_degree);
    for (int i = 0; i < ground.size(); ++i)
        if (B >> i & 1) s = s * geometric_factor(ground.element(i), max_degree);
    return s;
}

TruncatedSeries eminent_series_structural(const RootDatum& d, long long max_degree) {
    TruncatedSeries s = TruncatedSeries::one(d.rank(), max_degree);
    auto roots = d.all_positive_roots();
    auto orders = d.all_N_beta();
    auto flags = d.all_cartan_flags();
    for (size_t i = 0; i < roots.size(); ++i) {
        if (flags[i])
            s = s * geometric_factor(roots[i], max_degree);
        else
            s = s * qfactor(roots[i], orders[i], max_degree);
    }
    for (const auto& b : d.hOc_bold()) s = s * geometric_factor(b, max_degree);
    return s;
}

TruncatedSeries pbw_count_oracle(const RootDatum& d, const SumGround& ground, Bitset B,
                                 long long max_degree) {
    auto roots = d.all_positive_roots();
    auto orders = d.all_N_beta();
    std::vector<DegreeVector> zgens;
    for (int i = 0; i < ground.size(); ++i)
        if (B >> i & 1) zgens.push_back(ground.element(i));

    TruncatedSeries out(d.rank(), max_degree);
    DegreeVector zero = DegreeVector::zero(d.rank());
    // explicit DFS over exponent tuples; independent of series multiplication
    std::function<void(size_t, DegreeVector, long long)> z_part =
        [&](size_t zi, DegreeVector deg, long long h) {
            if (zi == zgens.size()) {
                out.add_coeff(deg, 1);
                return;
            }
            long long step = height(zgens[zi]);
            DegreeVector cur = deg;
            for (long long p = 0; h + p * step <= max_degree; ++p) {
                z_part(zi + 1, cur, h + p * step);
                cur = cur + zgens[zi];
            }
        };
    std::function<void(size_t, DegreeVector, long long)> x_part =
        [&](size_t ri, DegreeVector deg, long long h) {
            if (ri == roots.size()) {
                z_part(0, deg, h);
                return;
            }
            long long step = height(roots[ri]);
            DegreeVector cur = deg;
            for (long long n = 0; n < orders[ri] && h + n * step <= max_degree; ++n) {
                x_part(ri + 1, cur, h + n * step);
                cur = cur + roots[ri];
            }
        };
    x_part(0, zero, 0);
    return out;
}

long long default_max_degree(const RootDatum& d) {
    long long m = 0;
    for (const auto& u : d.hOc()) m = std::max(m, height(u));
    return 2 * m + 4;
}

} // namespace prenichols
