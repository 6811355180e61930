#include <doctest.h>

#include <qmzv/errors.hpp>
#include <qmzv/families.hpp>
#include <qmzv/index.hpp>
#include <qmzv/series.hpp>

#include "support.hpp"

using namespace qmzv;
using qmzv::test::q;

namespace
{

// Eulerian numbers A(m, k) from A(m, k) = (k+1) A(m-1, k) + (m-k) A(m-1, k-1).
std::vector<std::vector<long>> eulerian_triangle(int max_m)
{
    std::vector<std::vector<long>> a(static_cast<std::size_t>(max_m + 1));
    a[0] = {1};
    for (int m = 1; m <= max_m; ++m) {
        auto &row = a[static_cast<std::size_t>(m)];
        row.assign(static_cast<std::size_t>(m), 0);
        const auto &prev = a[static_cast<std::size_t>(m - 1)];
        for (int k = 0; k < m; ++k) {
            long v = 0;
            if (k < static_cast<int>(prev.size()))
                v += (k + 1) * prev[static_cast<std::size_t>(k)];
            if (k >= 1 && k - 1 < static_cast<int>(prev.size()))
                v += (m - k) * prev[static_cast<std::size_t>(k - 1)];
            row[static_cast<std::size_t>(k)] = v;
        }
    }
    return a;
}

// Bernoulli numbers from the Akiyama-Tanigawa algorithm (which yields B_1 = +1/2).
std::vector<Rational> bernoulli_akiyama_tanigawa(int n)
{
    std::vector<Rational> out;
    std::vector<Rational> a(static_cast<std::size_t>(n + 1));
    for (int m = 0; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = make_rational(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[static_cast<std::size_t>(j - 1)] =
                j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
        out.push_back(a[0]);
    }
    return out;
}

} // namespace

TEST_CASE("Eulerian polynomials")
{
    CHECK(eulerian_poly(0) == Poly{q(1)});
    CHECK(eulerian_poly(1) == Poly{q(1)});
    CHECK(eulerian_poly(2) == Poly{q(1), q(1)});
    CHECK(eulerian_poly(3) == Poly{q(1), q(4), q(1)});

    const auto triangle = eulerian_triangle(14);
    for (int m = 1; m <= 14; ++m) {
        const Poly p = eulerian_poly(static_cast<unsigned>(m));
        REQUIRE(p.degree() == m - 1);
        for (int k = 0; k < m; ++k)
            CHECK(p.coeff(static_cast<std::size_t>(k)) ==
                  Rational(triangle[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)]));
    }

    // t P_m(t) / (1-t)^(m+1) against sum d^m t^d
    for (unsigned m = 0; m <= 8; ++m) {
        const std::size_t n = 30;
        const QSeries lhs = poly_eval_at_qpow(Poly::monomial(1) * eulerian_poly(m), 1, n) *
                            geometric_pow(1, m + 1, n);
        QSeries rhs(n);
        for (std::size_t d = 1; d <= n; ++d) {
            Integer p = 1;
            for (unsigned i = 0; i < m; ++i)
                p *= static_cast<unsigned long>(d);
            rhs[d] = Rational(p);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli(0) == q(1));
    CHECK(bernoulli(1) == q(-1, 2));
    CHECK(bernoulli(2) == q(1, 6));
    CHECK(bernoulli(3) == q(0));
    CHECK(bernoulli(4) == q(-1, 30));
    CHECK(bernoulli(12) == q(-691, 2730));
    const auto oracle = bernoulli_akiyama_tanigawa(30);
    for (unsigned n = 2; n <= 30; ++n)
        CHECK(bernoulli(n) == oracle[n]);
}

TEST_CASE("built-in families")
{
    const PolyFamily e = family_eulerian();
    CHECK(e.poly(1) == Poly{q(0), q(1)});
    CHECK(e.poly(2) == Poly{q(0), q(1)});
    CHECK(e.poly(3) == Poly{q(0), q(1, 2), q(1, 2)});
    CHECK(e.poly(4) == Poly{q(0), q(1, 6), q(4, 6), q(1, 6)});
    for (int s = 1; s <= 30; ++s) {
        CHECK(e.poly(s)(q(1)) == q(1));
        CHECK(e.poly(s).degree() == std::max(1, s - 1));
    }

    const PolyFamily o = family_okounkov();
    CHECK_FALSE(o.supports(1));
    CHECK(o.poly(2) == Poly{q(0), q(1)});
    CHECK(o.poly(3) == Poly{q(0), q(1), q(1)});
    CHECK(o.poly(4) == Poly{q(0), q(0), q(1)});
    CHECK(o.poly(5) == Poly{q(0), q(0), q(1), q(1)});
    CHECK_THROWS_AS(o.poly(1), UnsupportedIndexError);

    const PolyFamily t = family_monomial();
    CHECK_FALSE(t.supports(1));
    CHECK(t.poly(4) == Poly::monomial(3));
    CHECK(t.support_range(1, 4) == std::vector<int>{2, 3, 4});

    for (int s = 2; s <= 20; ++s) {
        CHECK(sgn(o.poly(s).coeff(0)) == 0);
        CHECK(o.poly(s).degree() <= s - 1);
        CHECK(sgn(o.poly(s)(q(1))) != 0);
    }

    CHECK(family_by_name("brackets").name() == "eulerian");
    CHECK(family_by_name("eulerian-brackets").name() == "eulerian");
    CHECK_THROWS_AS(family_by_name("nope"), DomainError);
}

TEST_CASE("custom families are validated")
{
    CHECK_THROWS_AS(family_custom("c", {{2, Poly{q(1), q(1)}}}), InvalidFamilyError);
    CHECK_THROWS_AS(family_custom("c", {{2, Poly{q(0), q(1), q(-1)}}}), InvalidFamilyError);
    const PolyFamily c = family_custom("c", {{2, Poly{q(0), q(2)}}});
    CHECK(c.supports(2));
    CHECK_FALSE(c.supports(3));
    CHECK_THROWS_AS(c.poly(3), UnsupportedIndexError);
}

TEST_CASE("indices")
{
    CHECK(parse_index("2,3") == Index{2, 3});
    CHECK(parse_index(" 4 , 1 ") == Index{4, 1});
    CHECK(parse_index("").empty());
    CHECK_THROWS_AS(parse_index("2,,3"), ParseError);
    CHECK_THROWS_AS(parse_index("0"), ParseError);
    CHECK_THROWS_AS(parse_index("a"), ParseError);
    CHECK(Index{2, 3}.weight() == 5);
    CHECK(Index{2, 3}.to_string() == "2,3");

    CHECK_THROWS_AS(Index({2, 1}).check_admissible(family_okounkov()), UnsupportedIndexError);
    try {
        Index({2, 1}).check_admissible(family_okounkov());
    } catch (const UnsupportedIndexError &e) {
        CHECK(e.slot() == 1);
        CHECK(e.entry() == 1);
    }
    CHECK(Index({1, 1}).admissible(family_eulerian()));

    // weight <= 4 Okounkov: (2), (3), (4), (2,2)
    const auto idx = admissible_indices(family_okounkov(), 4);
    CHECK(idx == std::vector<Index>{Index{2}, Index{3}, Index{4}, Index{2, 2}});
    CHECK(admissible_indices(family_eulerian(), 3).size() == 7);
}
