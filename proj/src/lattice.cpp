#include "prenichols/lattice.hpp"

#include <cctype>
#include <sstream>

namespace prenichols {

DegreeVector DegreeVector::basis(int rank, int i) {
    std::vector<long long> c(rank, 0);
    c.at(i) = 1;
    return DegreeVector(std::move(c));
}

void DegreeVector::check_rank(const DegreeVector& o) const {
    if (rank() != o.rank())
        throw std::invalid_argument("degree vectors of different rank");
}

DegreeVector DegreeVector::operator+(const DegreeVector& o) const {
    check_rank(o);
    std::vector<long long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = checked_add(c_[i], o.c_[i]);
    return DegreeVector(std::move(r));
}

DegreeVector DegreeVector::operator-(const DegreeVector& o) const {
    check_rank(o);
    std::vector<long long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = checked_sub(c_[i], o.c_[i]);
    return DegreeVector(std::move(r));
}

DegreeVector DegreeVector::operator*(long long k) const {
    std::vector<long long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = checked_mul(c_[i], k);
    return DegreeVector(std::move(r));
}

bool DegreeVector::is_zero() const {
    for (long long x : c_)
        if (x != 0) return false;
    return true;
}

bool DegreeVector::is_nonnegative() const {
    for (long long x : c_)
        if (x < 0) return false;
    return true;
}

long long height(const DegreeVector& v) {
    long long h = 0;
    for (int i = 0; i < v.rank(); ++i) h = checked_add(h, v[i]);
    return h;
}

std::set<int> support(const DegreeVector& v) {
    std::set<int> s;
    for (int i = 0; i < v.rank(); ++i)
        if (v[i] != 0) s.insert(i);
    return s;
}

bool leq(const DegreeVector& v, const DegreeVector& w) {
    if (v.rank() != w.rank())
        throw std::invalid_argument("degree vectors of different rank");
    for (int i = 0; i < v.rank(); ++i)
        if (v[i] > w[i]) return false;
    return true;
}

bool height_lex_less(const DegreeVector& a, const DegreeVector& b) {
    long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.coords() < b.coords();
}

std::string format_compact(const DegreeVector& v) {
    if (!v.is_nonnegative())
        throw std::invalid_argument("compact form requires nonnegative entries");
    if (v.is_zero()) return "0";
    std::ostringstream out;
    bool prev_had_exp = false;
    bool first = true;
    for (int i = 0; i < v.rank(); ++i) {
        if (v[i] == 0) continue;
        if (!first && prev_had_exp) out << ' ';
        if (i + 1 <= 9)
            out << (i + 1);
        else
            out << '(' << (i + 1) << ')';
        if (v[i] > 1) {
            out << '^' << v[i];
            prev_had_exp = true;
        } else {
            prev_had_exp = false;
        }
        first = false;
    }
    return out.str();
}

DegreeVector parse_compact(const std::string& text, int rank) {
    std::vector<long long> c(rank, 0);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < text.size() && text[i] == '0' && [&] {
            size_t j = i + 1;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            return j == text.size();
        }())
        return DegreeVector(std::move(c));
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        long long vertex = 0;
        if (text[i] == '(') {
            ++i;
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start || i >= text.size() || text[i] != ')')
                throw std::invalid_argument("bad vertex index in '" + text + "'");
            vertex = std::stoll(text.substr(start, i - start));
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            vertex = text[i] - '0';
            ++i;
        } else {
            throw std::invalid_argument("unexpected character '" + std::string(1, text[i]) + "' in '" + text + "'");
        }
        if (vertex < 1 || vertex > rank)
            throw std::invalid_argument("vertex " + std::to_string(vertex) + " out of range in '" + text + "'");
        long long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start)
                throw std::invalid_argument("missing exponent in '" + text + "'");
            exp = std::stoll(text.substr(start, i - start));
        }
        c[vertex - 1] = checked_add(c[vertex - 1], exp);
    }
    return DegreeVector(std::move(c));
}

} // namespace prenichols
