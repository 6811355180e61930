#include <doctest.h>

#include <qmzv/linear_solve.hpp>

#include "support.hpp"

using namespace qmzv;
using qmzv::test::q;
using Status = LinearSolution::Status;

TEST_CASE("unique solution")
{
    const RationalMatrix a = {{q(2), q(1)}, {q(1), q(-1)}, {q(3), q(0)}};
    const std::vector<Rational> b = {q(5), q(1), q(6)};
    const auto sol = solve_exact(a, b);
    CHECK(sol.status == Status::unique);
    CHECK(sol.values == std::vector<Rational>{q(2), q(1)});
    CHECK(sol.rank == 2);
    CHECK(multiply(a, sol.values) == b);
}

TEST_CASE("rational entries")
{
    const RationalMatrix a = {{q(1, 2), q(1, 3)}, {q(1, 5), q(-1, 7)}};
    const std::vector<Rational> x = {q(-3, 4), q(11, 9)};
    const auto sol = solve_exact(a, multiply(a, x));
    CHECK(sol.status == Status::unique);
    CHECK(sol.values == x);
}

TEST_CASE("underdetermined keeps leftmost columns")
{
    const RationalMatrix a = {{q(1), q(1), q(2)}, {q(2), q(2), q(4)}};
    const auto sol = solve_exact(a, {q(3), q(6)});
    CHECK(sol.status == Status::underdetermined);
    CHECK(sol.kernel_dimension == 2);
    CHECK(sol.values == std::vector<Rational>{q(3), q(0), q(0)});
}

TEST_CASE("inconsistent system")
{
    const RationalMatrix a = {{q(1), q(1)}, {q(1), q(1)}};
    const auto sol = solve_exact(a, {q(1), q(2)});
    CHECK(sol.status == Status::inconsistent);
    CHECK(sol.rank == 1);
    CHECK(sol.augmented_rank == 2);
    CHECK(sol.values.empty());
}

TEST_CASE("zero right-hand side")
{
    const RationalMatrix a = {{q(1), q(2)}, {q(3), q(4)}};
    const auto sol = solve_exact(a, {q(0), q(0)});
    CHECK(sol.status == Status::unique);
    CHECK(sol.values == std::vector<Rational>{q(0), q(0)});
}
