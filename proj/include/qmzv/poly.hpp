#ifndef QMZV_POLY_HPP
#define QMZV_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <qmzv/rational.hpp>

namespace qmzv
{

// Polynomial in the formal variable t with exact coefficients, indexed by
// exponent. Trailing zeros are always trimmed, so the zero polynomial has no
// coefficients and degree -1.
class Poly
{
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);
    Poly(std::initializer_list<Rational> coefficients);

    static Poly monomial(std::size_t exponent, Rational coefficient = 1);
    // (1 - t)^power
    static Poly one_minus_t_pow(std::size_t power);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    // Coefficient of t^exponent, zero past the degree.
    Rational coeff(std::size_t exponent) const;
    const std::vector<Rational> &coefficients() const noexcept { return coeffs_; }

    Rational operator()(const Rational &t) const;

    Poly &operator+=(const Poly &other);
    Poly &operator-=(const Poly &other);
    Poly &operator*=(const Rational &scalar);

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational &s) { return a *= s; }
    friend Poly operator*(const Rational &s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend bool operator==(const Poly &a, const Poly &b) { return a.coeffs_ == b.coeffs_; }

    // Human readable, ascending: "t + 4t^2 + t^3".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

} // namespace qmzv

#endif
