#ifndef QMZV_CONVERSION_HPP
#define QMZV_CONVERSION_HPP

#include <utility>
#include <vector>

#include <qmzv/families.hpp>
#include <qmzv/index.hpp>
#include <qmzv/lincomb.hpp>
#include <qmzv/poly.hpp>
#include <qmzv/rational.hpp>

namespace qmzv
{

// (j, coefficient) pairs.
using SlotDecomposition = std::vector<std::pair<int, Rational>>;

// (b^k_{i,1}, ..., b^k_{i,k-1}) with sum_j b^k_{i,j} t^j / j! = binom(t + k - 1 - i, k - 1).
std::vector<Rational> b_coeffs(int k, int i);

// t^i = sum_{j=2}^{k} b^k_{i,j-1} (1-t)^(k-j) Q^E_j(t); every j = 2..k listed,
// zeros included.
SlotDecomposition monomial_slot_decomposition(int i, int k);

// Q(t) = sum_{j=2}^{s} lambda_j (1-t)^(s-j) Q^E_j(t) for deg Q <= s-1, Q(0) = 0.
// Zero coefficients are dropped. Throws InvalidFamilyError on a degree or
// constant-term violation, DomainError for s < 2.
SlotDecomposition slot_decompose_general(const Poly &q, int s);

// Bracket (Eulerian, entries >= 2) form of Z_Q(idx), expanded slot by slot.
LinComb zq_to_brackets(const PolyFamily &family, const Index &idx);
LinComb zq_to_brackets(const PolyFamily &family, const LinComb &c);

// Closed form for Okounkov length one:
//   Z(2m)   = sum_j b^{2m}_{m,j-1} [j]
//   Z(2m+1) = sum_j (b^{2m+1}_{m,j-1} + b^{2m+1}_{m+1,j-1}) [j]
LinComb oz_length_one(int k);

// Inverse conversion, bracket basis (entries >= 2) into the family basis, by
// back substitution on the per-slot triangular systems. Throws
// NotRepresentableError when a bracket entry is 1.
LinComb brackets_to_family(const PolyFamily &family, const LinComb &brackets);
LinComb brackets_to_oz(const LinComb &brackets);

} // namespace qmzv

#endif
