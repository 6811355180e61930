#include <qmzv/linear_solve.hpp>

#include <algorithm>

#include <qmzv/errors.hpp>

namespace qmzv
{

namespace
{

using IntegerRow = std::vector<Integer>;

// Clears denominators of a rational row, then divides by the content.
IntegerRow integer_row(const std::vector<Rational> &row)
{
    Integer lcm = 1;
    for (const auto &c : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    IntegerRow out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
        out[i] = row[i].get_num() * (lcm / row[i].get_den());
    return out;
}

void make_primitive(IntegerRow &row)
{
    Integer g = 0;
    for (const auto &c : row)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0 || g == 1)
        return;
    for (auto &c : row)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

} // namespace

LinearSolution solve_exact(const RationalMatrix &a, const std::vector<Rational> &b)
{
    const std::size_t rows = a.size();
    if (b.size() != rows)
        throw DomainError("solve_exact: right-hand side has the wrong length");
    const std::size_t cols = rows == 0 ? 0 : a.front().size();

    // Augmented integer matrix [A | b].
    std::vector<IntegerRow> m;
    m.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        if (a[r].size() != cols)
            throw DomainError("solve_exact: ragged matrix");
        std::vector<Rational> row = a[r];
        row.push_back(b[r]);
        m.push_back(integer_row(row));
        make_primitive(m.back());
    }

    LinearSolution sol;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t p = pivot_row;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[pivot_row]);
        const IntegerRow &pivot = m[pivot_row];
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            if (m[r][c] == 0)
                continue;
            // row_r <- pivot_c * row_r - row_r[c] * pivot, then strip the content.
            const Integer factor = m[r][c];
            const Integer lead = pivot[c];
            for (std::size_t k = c; k <= cols; ++k)
                m[r][k] = lead * m[r][k] - factor * pivot[k];
            make_primitive(m[r]);
        }
        sol.pivot_columns.push_back(c);
        ++pivot_row;
    }
    sol.rank = pivot_row;
    sol.augmented_rank = sol.rank;
    for (std::size_t r = sol.rank; r < rows; ++r) {
        if (m[r][cols] != 0) {
            sol.augmented_rank = sol.rank + 1;
            break;
        }
    }
    sol.kernel_dimension = cols - sol.rank;
    if (sol.augmented_rank != sol.rank) {
        sol.status = LinearSolution::Status::inconsistent;
        return sol;
    }

    sol.values.assign(cols, Rational(0));
    for (std::size_t i = sol.rank; i-- > 0;) {
        const std::size_t c = sol.pivot_columns[i];
        Rational acc(m[i][cols]);
        for (std::size_t k = c + 1; k < cols; ++k)
            if (m[i][k] != 0 && sgn(sol.values[k]) != 0)
                acc -= Rational(m[i][k]) * sol.values[k];
        sol.values[c] = acc / Rational(m[i][c]);
    }
    sol.status = sol.kernel_dimension == 0 ? LinearSolution::Status::unique : LinearSolution::Status::underdetermined;
    return sol;
}

std::vector<Rational> multiply(const RationalMatrix &a, const std::vector<Rational> &x)
{
    std::vector<Rational> out(a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < x.size() && c < a[r].size(); ++c)
            if (sgn(a[r][c]) != 0 && sgn(x[c]) != 0)
                out[r] += a[r][c] * x[c];
    return out;
}

} // namespace qmzv
