#include "core/genus_polynomial.hpp"

#include <cstdlib>
#include <stdexcept>

namespace petrial {

GenusPolynomial GenusPolynomial::constant(long long c) {
    return monomial(0, c);
}

GenusPolynomial GenusPolynomial::monomial(int exp, long long c) {
    GenusPolynomial p;
    p.add_term(exp, c);
    return p;
}

void GenusPolynomial::add_term(int exp, long long c) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    if (static_cast<size_t>(exp) >= c_.size()) c_.resize(exp + 1, 0);
    c_[exp] += c;
    if (c_[exp] == 0) trim();
}

long long GenusPolynomial::coeff(int exp) const {
    if (exp < 0 || static_cast<size_t>(exp) >= c_.size()) return 0;
    return c_[exp];
}

int GenusPolynomial::degree() const {
    for (int e = static_cast<int>(c_.size()) - 1; e >= 0; --e)
        if (c_[e] != 0) return e;
    return -1;
}

int GenusPolynomial::min_degree() const {
    for (size_t e = 0; e < c_.size(); ++e)
        if (c_[e] != 0) return static_cast<int>(e);
    return -1;
}

bool GenusPolynomial::is_zero() const {
    return degree() < 0;
}

long long GenusPolynomial::coeff_sum() const {
    long long s = 0;
    for (long long c : c_) s += c;
    return s;
}

bool GenusPolynomial::has_consecutive_support() const {
    const int lo = min_degree();
    if (lo < 0) return true;
    const int hi = degree();
    for (int e = lo; e <= hi; ++e)
        if (c_[e] == 0) return false;
    return true;
}

std::vector<std::pair<int, long long>> GenusPolynomial::terms() const {
    std::vector<std::pair<int, long long>> t;
    for (size_t e = 0; e < c_.size(); ++e)
        if (c_[e] != 0) t.emplace_back(static_cast<int>(e), c_[e]);
    return t;
}

GenusPolynomial& GenusPolynomial::operator+=(const GenusPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t e = 0; e < o.c_.size(); ++e) c_[e] += o.c_[e];
    trim();
    return *this;
}

GenusPolynomial& GenusPolynomial::operator-=(const GenusPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t e = 0; e < o.c_.size(); ++e) c_[e] -= o.c_[e];
    trim();
    return *this;
}

GenusPolynomial GenusPolynomial::operator+(const GenusPolynomial& o) const {
    GenusPolynomial r = *this;
    r += o;
    return r;
}

GenusPolynomial GenusPolynomial::operator-(const GenusPolynomial& o) const {
    GenusPolynomial r = *this;
    r -= o;
    return r;
}

GenusPolynomial GenusPolynomial::operator*(const GenusPolynomial& o) const {
    GenusPolynomial r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

GenusPolynomial GenusPolynomial::operator-() const {
    GenusPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool GenusPolynomial::operator==(const GenusPolynomial& o) const {
    const size_t n = std::max(c_.size(), o.c_.size());
    for (size_t e = 0; e < n; ++e)
        if (coeff(static_cast<int>(e)) != o.coeff(static_cast<int>(e))) return false;
    return true;
}

void GenusPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string GenusPolynomial::to_text() const {
    const int hi = degree();
    if (hi < 0) return "0";
    std::string out;
    for (int e = hi; e >= 0; --e) {
        const long long c = coeff(e);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        const long long mag = std::llabs(c);
        if (mag != 1 || e == 0) out += std::to_string(mag);
        if (e >= 1) out += "z";
        if (e >= 2) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace petrial
