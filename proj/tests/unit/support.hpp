#ifndef QMZV_TESTS_SUPPORT_HPP
#define QMZV_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <qmzv/lincomb.hpp>
#include <qmzv/rational.hpp>
#include <qmzv/series.hpp>

namespace qmzv::test
{

inline Rational q(long p, long d = 1)
{
    return make_rational(p, d);
}

inline QSeries series(std::vector<long> coeffs)
{
    std::vector<Rational> c;
    for (long v : coeffs)
        c.emplace_back(v);
    const std::size_t n = c.size() - 1;
    return QSeries(n, std::move(c));
}

inline LinComb combo(const std::string &basis, std::initializer_list<std::pair<std::vector<int>, Rational>> terms,
                     Rational constant = 0)
{
    LinComb c(basis);
    c.add_constant(constant);
    for (const auto &[idx, coeff] : terms)
        c.add_term(Index(idx), coeff);
    return c;
}

inline Rational random_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    return make_rational(num(rng), den(rng));
}

inline QSeries random_series(std::mt19937_64 &rng, std::size_t precision)
{
    QSeries a(precision);
    for (std::size_t n = 0; n <= precision; ++n)
        a[n] = random_rational(rng);
    return a;
}

} // namespace qmzv::test

#endif
