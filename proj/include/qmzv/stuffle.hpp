#ifndef QMZV_STUFFLE_HPP
#define QMZV_STUFFLE_HPP

#include <utility>
#include <vector>

#include <qmzv/families.hpp>
#include <qmzv/index.hpp>
#include <qmzv/lincomb.hpp>
#include <qmzv/poly.hpp>
#include <qmzv/rational.hpp>

namespace qmzv
{

// (j, lambda_j) pairs, j ascending, zero coefficients omitted.
using ReductionCoeffs = std::vector<std::pair<int, Rational>>;

// Solves Q_r Q_s = sum_{j in S, 1 <= j <= r+s} lambda_j (1-t)^(r+s-j) Q_j(t)
// exactly. Unknowns are ordered by j descending, so an underdetermined system
// keeps the largest j. Results are memoized per family. Throws ClosureFailure
// with the residual polynomial when no solution exists.
const ReductionCoeffs &reduction_coeffs(const PolyFamily &family, int r, int s);

// sum lambda_j (1-t)^(r+s-j) Q_j(t), to re-check a reduction.
Poly reduction_rhs(const PolyFamily &family, int r, int s, const ReductionCoeffs &coeffs);

// (-1)^(b-1) binom(a+b-j-1, a-j) B_{a+b-j} / (a+b-j)!, for 1 <= j <= a.
Rational lambda_closed_form(int a, int b, int j);

// Eulerian reduction assembled from the closed form: sum_j lambda^j_{r,s},
// sum_j lambda^j_{s,r}, and 1 on j = r+s, merged by j.
ReductionCoeffs eulerian_reduction_via_formula(int r, int s);

// lambda^1_{a,b} + lambda^1_{b,a} in closed form:
//   ((-1)^(a-1) + (-1)^(b-1)) binom(a+b-2, a-1) B_{a+b-1} / (a+b-1)!
Rational lambda_one_sum(int a, int b);

// Parity case split for Okounkov products: Q_{r+s} for r+s even, 2 Q_{r+s} + (1-t)^2 Q_{r+s-2}
// for r+s odd. Kept only to document that it does not hold.
ReductionCoeffs okounkov_reduction_parity_split(int r, int s);

// Quasi-shuffle u * v over the family: with u = (r, u'), v = (s, v'),
//   u * v = r:(u' * v) + s:(u * v') + sum_j lambda_j j:(u' * v').
LinComb stuffle_product(const PolyFamily &family, const Index &u, const Index &v);

// Bilinear extension to combinations in the family basis.
LinComb lincomb_product(const PolyFamily &family, const LinComb &a, const LinComb &b);

} // namespace qmzv

#endif
