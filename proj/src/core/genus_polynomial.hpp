#pragma once

#include <string>
#include <utility>
#include <vector>

namespace petrial {

// Univariate polynomial in z with exact 64-bit integer coefficients.
// Exponents are Euler genera, i.e. small non-negative integers, so a dense
// coefficient vector indexed by exponent is used throughout.
class GenusPolynomial {
public:
    GenusPolynomial() = default; // zero polynomial
    static GenusPolynomial constant(long long c);
    static GenusPolynomial monomial(int exp, long long c);

    void add_term(int exp, long long c);
    long long coeff(int exp) const;
    int degree() const;     // -1 for the zero polynomial
    int min_degree() const; // -1 for the zero polynomial
    bool is_zero() const;
    long long coeff_sum() const;

    // True iff the nonzero coefficients occupy a consecutive exponent range.
    bool has_consecutive_support() const;

    // Nonzero terms in ascending exponent order.
    std::vector<std::pair<int, long long>> terms() const;

    GenusPolynomial& operator+=(const GenusPolynomial& o);
    GenusPolynomial& operator-=(const GenusPolynomial& o);
    GenusPolynomial operator+(const GenusPolynomial& o) const;
    GenusPolynomial operator-(const GenusPolynomial& o) const;
    GenusPolynomial operator*(const GenusPolynomial& o) const;
    GenusPolynomial operator-() const;
    bool operator==(const GenusPolynomial& o) const;

    // Human form, descending exponents: "1412z^7 + 23z^3 + z^2", "z - 1", "0".
    std::string to_text() const;

private:
    std::vector<long long> c_; // c_[e] = coefficient of z^e; trailing zeros trimmed
    void trim();
};

} // namespace petrial
