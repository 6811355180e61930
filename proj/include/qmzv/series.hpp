#ifndef QMZV_SERIES_HPP
#define QMZV_SERIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <qmzv/poly.hpp>
#include <qmzv/rational.hpp>

namespace qmzv
{

// Truncated power series a_0 + a_1 q + ... + a_N q^N. The coefficient vector
// always has exactly precision() + 1 entries. Binary operations on operands of
// different precision produce the smaller precision.
class QSeries
{
public:
    explicit QSeries(std::size_t precision = 0);
    QSeries(std::size_t precision, std::vector<Rational> coefficients);

    static QSeries constant(std::size_t precision, const Rational &value);

    std::size_t precision() const noexcept { return coeffs_.size() - 1; }

    const Rational &operator[](std::size_t n) const { return coeffs_[n]; }
    Rational &operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<Rational> &coefficients() const noexcept { return coeffs_; }

    QSeries truncated(std::size_t precision) const;

    QSeries &operator+=(const QSeries &other);
    QSeries &operator-=(const QSeries &other);
    QSeries &operator*=(const Rational &scalar);

    // this += scalar * other, over the common precision.
    QSeries &add_scaled(const QSeries &other, const Rational &scalar);

    friend QSeries operator+(QSeries a, const QSeries &b);
    friend QSeries operator-(QSeries a, const QSeries &b);
    friend QSeries operator*(QSeries a, const Rational &s) { return a *= s; }
    friend QSeries operator*(const Rational &s, QSeries a) { return a *= s; }
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    friend QSeries operator-(QSeries a);

    // Exact equality of precision and every coefficient.
    friend bool operator==(const QSeries &a, const QSeries &b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

// 1 / (1 - q^n)^s: coefficient of q^(n m) is binom(m + s - 1, s - 1).
QSeries geometric_pow(std::size_t n, std::size_t s, std::size_t precision);

// P(q^n) truncated to the given precision.
QSeries poly_eval_at_qpow(const Poly &p, std::size_t n, std::size_t precision);

// d = q d/dq, coefficientwise n a_n.
QSeries q_derive(const QSeries &a);

// Lowest exponent in 0..min(precision) where a and b differ, if any.
std::optional<std::size_t> first_mismatch(const QSeries &a, const QSeries &b, std::size_t from = 0);

} // namespace qmzv

#endif
