#include <qmzv/series.hpp>

#include <algorithm>
#include <string>

#include <qmzv/errors.hpp>

namespace qmzv
{

QSeries::QSeries(std::size_t precision)
    : coeffs_(precision + 1)
{
}

QSeries::QSeries(std::size_t precision, std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients))
{
    coeffs_.resize(precision + 1);
}

QSeries QSeries::constant(std::size_t precision, const Rational &value)
{
    QSeries r(precision);
    r.coeffs_[0] = value;
    return r;
}

QSeries QSeries::truncated(std::size_t precision) const
{
    const std::size_t p = std::min(precision, this->precision());
    return QSeries(p, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(p + 1)));
}

QSeries &QSeries::operator+=(const QSeries &other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

QSeries &QSeries::operator*=(const Rational &scalar)
{
    for (auto &c : coeffs_)
        c *= scalar;
    return *this;
}

QSeries &QSeries::add_scaled(const QSeries &other, const Rational &scalar)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    if (sgn(scalar) == 0)
        return *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(other.coeffs_[i]) != 0)
            coeffs_[i] += scalar * other.coeffs_[i];
    return *this;
}

QSeries operator+(QSeries a, const QSeries &b)
{
    return a += b;
}

QSeries operator-(QSeries a, const QSeries &b)
{
    return a -= b;
}

QSeries operator-(QSeries a)
{
    for (auto &c : a.coeffs_)
        c = -c;
    return a;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    const std::size_t p = std::min(a.precision(), b.precision());
    QSeries r(p);
    Rational tmp;
    for (std::size_t i = 0; i <= p; ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j <= p; ++j) {
            if (sgn(b.coeffs_[j]) == 0)
                continue;
            mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            r.coeffs_[i + j] += tmp;
        }
    }
    return r;
}

std::string QSeries::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out += ", ";
        out += qmzv::to_string(coeffs_[i]);
    }
    return out;
}

QSeries geometric_pow(std::size_t n, std::size_t s, std::size_t precision)
{
    if (n == 0 || s == 0)
        throw DomainError("geometric_pow needs n >= 1 and s >= 1");
    QSeries r(precision);
    for (std::size_t m = 0; n * m <= precision; ++m)
        r[n * m] = Rational(binomial(static_cast<long>(m + s - 1), static_cast<long>(s - 1)));
    return r;
}

QSeries poly_eval_at_qpow(const Poly &p, std::size_t n, std::size_t precision)
{
    if (n == 0)
        throw DomainError("poly_eval_at_qpow needs n >= 1");
    QSeries r(precision);
    const auto &c = p.coefficients();
    for (std::size_t e = 0; e < c.size() && n * e <= precision; ++e)
        r[n * e] = c[e];
    return r;
}

QSeries q_derive(const QSeries &a)
{
    QSeries r = a;
    for (std::size_t n = 0; n <= r.precision(); ++n)
        r[n] *= static_cast<unsigned long>(n);
    return r;
}

std::optional<std::size_t> first_mismatch(const QSeries &a, const QSeries &b, std::size_t from)
{
    const std::size_t p = std::min(a.precision(), b.precision());
    for (std::size_t n = from; n <= p; ++n)
        if (a[n] != b[n])
            return n;
    return std::nullopt;
}

} // namespace qmzv
