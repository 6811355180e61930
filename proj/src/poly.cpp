#include <qmzv/poly.hpp>

#include <algorithm>
#include <string>

namespace qmzv
{

Poly::Poly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients))
{
    trim();
}

Poly::Poly(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients)
{
    trim();
}

Poly Poly::monomial(std::size_t exponent, Rational coefficient)
{
    std::vector<Rational> c(exponent + 1);
    c[exponent] = std::move(coefficient);
    return Poly(std::move(c));
}

Poly Poly::one_minus_t_pow(std::size_t power)
{
    std::vector<Rational> c(power + 1);
    for (std::size_t i = 0; i <= power; ++i) {
        c[i] = Rational(binomial(static_cast<long>(power), static_cast<long>(i)));
        if (i % 2 == 1)
            c[i] = -c[i];
    }
    return Poly(std::move(c));
}

Rational Poly::coeff(std::size_t exponent) const
{
    return exponent < coeffs_.size() ? coeffs_[exponent] : Rational(0);
}

Rational Poly::operator()(const Rational &t) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

Poly &Poly::operator+=(const Poly &other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Poly &Poly::operator-=(const Poly &other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Poly &Poly::operator*=(const Rational &scalar)
{
    for (auto &c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(c));
}

void Poly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

std::string Poly::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational &c = coeffs_[i];
        if (sgn(c) == 0)
            continue;
        const Rational mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        const bool unit = mag == 1;
        if (i == 0 || !unit)
            out += qmzv::to_string(mag);
        if (i >= 1)
            out += "t";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace qmzv
