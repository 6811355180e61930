#ifndef QMZV_EXPANSION_HPP
#define QMZV_EXPANSION_HPP

#include <cstddef>

#include <qmzv/families.hpp>
#include <qmzv/index.hpp>
#include <qmzv/lincomb.hpp>
#include <qmzv/series.hpp>

namespace qmzv
{

// Z_Q(s_1, ..., s_l) = sum_{n_1 > ... > n_l > 0} prod_j Q_{s_j}(q^{n_j}) / (1 - q^{n_j})^{s_j}
// truncated at q^precision. The empty index expands to 1.
QSeries zq_expand(const PolyFamily &family, const Index &idx, std::size_t precision);

// Same sum restricted to outer summation values first <= n_1 <= last.
QSeries zq_expand_outer_range(const PolyFamily &family, const Index &idx, std::size_t precision,
                              std::size_t first, std::size_t last);

// Splits the outer range 1..precision into `blocks` contiguous blocks,
// expands them (concurrently when `threads` > 1) and adds the parts in
// block order.
QSeries zq_expand_chunked(const PolyFamily &family, const Index &idx, std::size_t precision,
                          std::size_t blocks, std::size_t threads = 1);

// Brackets: zq_expand with the Eulerian family.
QSeries bracket_expand(const Index &idx, std::size_t precision);

// Multiple divisor sums by direct enumeration of u_1 v_1 + ... + u_l v_l = n,
// u_1 > ... > u_l > 0, weighted by prod v_j^(s_j - 1) / (s_j - 1)!. Shares no
// code with zq_expand.
QSeries multiple_divisor_oracle(const Index &idx, std::size_t precision);

// constant + sum c_I zq_expand(family, I).
QSeries lincomb_expand(const PolyFamily &family, const LinComb &c, std::size_t precision);

// Resolves the basis name to a built-in family.
QSeries lincomb_expand(const LinComb &c, std::size_t precision);

// G_2, G_4, G_6 as constant + bracket.
LinComb eisenstein(int k);

} // namespace qmzv

#endif
