#include <doctest.h>

#include <qmzv/errors.hpp>
#include <qmzv/poly.hpp>
#include <qmzv/series.hpp>

#include "support.hpp"

using namespace qmzv;
using qmzv::test::q;
using qmzv::test::series;

namespace
{

// Sum of divisors, by trial division.
long sigma(long n, int power)
{
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            long p = 1;
            for (int i = 0; i < power; ++i)
                p *= d;
            s += p;
        }
    return s;
}

} // namespace

TEST_CASE("rationals stay canonical")
{
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK(parse_rational(" 10/4 ") == q(5, 2));
    CHECK(parse_rational("-7") == q(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("3/-4"), ParseError);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational a = test::random_rational(rng);
        const Rational b = test::random_rational(rng);
        CHECK(is_canonical(a * b));
        CHECK(is_canonical(a + b));
        CHECK(is_canonical(a - b));
        if (sgn(b) != 0)
            CHECK(is_canonical(a / b));
    }
}

TEST_CASE("polynomials trim and multiply")
{
    CHECK(Poly().degree() == -1);
    CHECK(Poly{q(0), q(0)}.degree() == -1);
    CHECK(Poly{q(0), q(1), q(0)}.degree() == 1);
    CHECK(Poly::one_minus_t_pow(2) == Poly{q(1), q(-2), q(1)});
    const Poly a{q(0), q(1), q(1)};
    CHECK(a * a == Poly{q(0), q(0), q(1), q(2), q(1)});
    CHECK(a(q(1)) == q(2));
    CHECK((a - a).is_zero());
    CHECK(Poly{q(0), q(1), q(4), q(1)}.to_string() == "t + 4t^2 + t^3");
    CHECK(Poly{q(0), q(-1, 6), q(0), q(1)}.to_string() == "-1/6t + t^3");
}

TEST_CASE("series ring operations")
{
    const QSeries one_plus_q = series({1, 1, 0});
    CHECK(one_plus_q * one_plus_q == series({1, 2, 1}));

    std::mt19937_64 rng(11);
    const QSeries a = test::random_series(rng, 8);
    CHECK(a * QSeries::constant(8, 1) == a);

    // mixed precision keeps the minimum
    CHECK((a + series({1, 2, 3})).precision() == 2);
    CHECK((a * series({1, 2, 3})).precision() == 2);
    CHECK((QSeries(3) * q(2)).precision() == 3);

    // (sum sigma_1(n) q^n)^2 at N = 4 against a direct double loop
    QSeries s(4);
    for (long n = 1; n <= 4; ++n)
        s[static_cast<std::size_t>(n)] = Rational(sigma(n, 1));
    std::vector<long> expected(5, 0);
    for (long i = 1; i <= 4; ++i)
        for (long j = 1; i + j <= 4; ++j)
            expected[static_cast<std::size_t>(i + j)] += sigma(i, 1) * sigma(j, 1);
    CHECK(s * s == series(expected));
    CHECK(s * s == series({0, 0, 1, 6, 17}));
}

TEST_CASE("ring axioms hold exactly")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + trial % 9;
        const QSeries a = test::random_series(rng, n);
        const QSeries b = test::random_series(rng, n);
        const QSeries c = test::random_series(rng, n);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QSeries(n));
    }
}

TEST_CASE("precision monotonicity")
{
    std::mt19937_64 rng(99);
    const QSeries a = test::random_series(rng, 12);
    const QSeries b = test::random_series(rng, 12);
    const QSeries big = q_derive(a * b + a) * b;
    for (std::size_t m = 0; m <= 12; ++m) {
        const QSeries am = a.truncated(m);
        const QSeries bm = b.truncated(m);
        CHECK(big.truncated(m) == q_derive(am * bm + am) * bm);
    }
    CHECK(a.truncated(40).precision() == 12);
}

TEST_CASE("geometric powers")
{
    CHECK(geometric_pow(1, 2, 3) == series({1, 2, 3, 4}));
    CHECK(geometric_pow(1, 1, 2) == series({1, 1, 1}));
    CHECK(geometric_pow(3, 2, 7) == series({1, 0, 0, 2, 0, 0, 3, 0}));
    // 1/(1-q)^s times (1-q)^s is 1
    for (std::size_t s = 1; s <= 6; ++s)
        CHECK(geometric_pow(1, s, 10) * poly_eval_at_qpow(Poly::one_minus_t_pow(s), 1, 10) ==
              QSeries::constant(10, 1));
    CHECK_THROWS_AS(geometric_pow(0, 2, 3), DomainError);
}

TEST_CASE("polynomials evaluated at q^n")
{
    CHECK(poly_eval_at_qpow(Poly{q(0), q(1)}, 2, 3) == series({0, 0, 1, 0}));
    CHECK(poly_eval_at_qpow(Poly{q(0), q(1), q(1)}, 1, 4) == series({0, 1, 1, 0, 0}));
    CHECK(poly_eval_at_qpow(Poly{q(0), q(1), q(1)}, 2, 6) == series({0, 0, 1, 0, 1, 0, 0}));
    CHECK(poly_eval_at_qpow(Poly{q(0), q(1), q(1)}, 4, 6) == series({0, 0, 0, 0, 1, 0, 0}));
}

TEST_CASE("q d/dq")
{
    CHECK(q_derive(QSeries::constant(5, 1)) == QSeries(5));
    CHECK(q_derive(series({0, 1, 3})) == series({0, 1, 6}));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const QSeries a = test::random_series(rng, 10);
        const QSeries b = test::random_series(rng, 10);
        CHECK(q_derive(a * b) == q_derive(a) * b + a * q_derive(b));
    }
}

TEST_CASE("first mismatch")
{
    CHECK_FALSE(first_mismatch(series({1, 2, 3}), series({1, 2, 3, 4})).has_value());
    CHECK(first_mismatch(series({1, 2, 3}), series({1, 5, 3})) == std::optional<std::size_t>(1));
    CHECK_FALSE(first_mismatch(series({9, 2}), series({1, 2}), 1).has_value());
}
