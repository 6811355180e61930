#ifndef QMZV_LINEAR_SOLVE_HPP
#define QMZV_LINEAR_SOLVE_HPP

#include <cstddef>
#include <vector>

#include <qmzv/rational.hpp>

namespace qmzv
{

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution
{
    enum class Status
    {
        unique,
        underdetermined,
        inconsistent,
    };

    Status status = Status::inconsistent;
    // A particular solution; free variables are 0. Empty when inconsistent.
    std::vector<Rational> values;
    std::size_t rank = 0;           // rank of the coefficient matrix
    std::size_t augmented_rank = 0; // rank of [A | b]
    std::size_t kernel_dimension = 0;
    std::vector<std::size_t> pivot_columns;

    bool consistent() const noexcept { return status != Status::inconsistent; }
};

// Solves A x = b exactly. Rows are cleared of denominators and reduced with
// fraction-free integer elimination (rows kept primitive); the pivot of each
// column is the first remaining row with a nonzero entry, columns taken left
// to right. Free variables are set to zero, so an underdetermined system
// returns the solution supported on the leftmost independent columns.
LinearSolution solve_exact(const RationalMatrix &a, const std::vector<Rational> &b);

// A x, for residual checks.
std::vector<Rational> multiply(const RationalMatrix &a, const std::vector<Rational> &x);

} // namespace qmzv

#endif
