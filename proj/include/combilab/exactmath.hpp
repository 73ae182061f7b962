#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace combilab {

using ExactInt = boost::multiprecision::cpp_int;

/// C(n, k); zero whenever k < 0, k > n or n < 0.
ExactInt binomial(long long n, long long k);

/// 2^e for e >= 0.
ExactInt pow2(long long e);

/// (-1)^e as an ExactInt.
inline ExactInt sign_pow(long long e) { return (e % 2 == 0) ? ExactInt(1) : ExactInt(-1); }

/// Dense univariate polynomial with exact integer coefficients.
///
/// coeffs()[i] is the coefficient of x^i. The stored sequence never ends in a
/// zero; the zero polynomial stores nothing.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(ExactInt constant);  // NOLINT(google-explicit-constructor)
    IntPoly(int constant) : IntPoly(ExactInt(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit IntPoly(std::vector<ExactInt> coeffs);
    /// Ascending coefficients: IntPoly({-1, 0, 1}) is x^2 - 1.
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly monomial(ExactInt c, std::size_t power);
    static IntPoly x() { return monomial(1, 1); }

    const std::vector<ExactInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    ExactInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ExactInt(0); }
    ExactInt leading() const { return is_zero() ? ExactInt(0) : coeffs_.back(); }

    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    IntPoly& operator*=(const IntPoly& other);
    IntPoly& operator*=(const ExactInt& scalar);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const ExactInt& s) { return a *= s; }
    friend IntPoly operator*(const ExactInt& s, IntPoly a) { return a *= s; }
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human form in descending powers, e.g. "x^4 + 3x^2 - 2x + 2".
    std::string to_string() const;

private:
    void normalize();

    std::vector<ExactInt> coeffs_;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
ExactInt poly_coeff(const IntPoly& p, std::size_t i);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace combilab
