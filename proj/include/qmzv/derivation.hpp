#ifndef QMZV_DERIVATION_HPP
#define QMZV_DERIVATION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <qmzv/families.hpp>
#include <qmzv/index.hpp>
#include <qmzv/lincomb.hpp>
#include <qmzv/series.hpp>

namespace qmzv
{

// Which (a, b) pairs enter the sum in the representation of d[k-2]:
// a + b = k (weight) or a + b = k + 2. Only the first is correct; the second
// is kept so the choice stays regression-tested.
enum class BracketSumRange
{
    weight,
    weight_plus_two,
};

inline constexpr std::size_t kDerivationCheckPrecision = 80;

// Raw formula: d[k-2] expressed in brackets through the splitting
// k = s1 + s2 (ordered so that s1 <= s2):
//   binom(k-2, s1-1) d[k-2] / (k-2) = [s1][s2] - [s1,s2] - [s2,s1] + binom(k-2, s1-1) [k-1]
//       - sum_{a > s1} (binom(a-1, s1-1) + binom(a-1, s2-1) - delta_{a,s2}) [a,b]
// No verification.
LinComb d_bracket_formula(int k, int s1, int s2, BracketSumRange range = BracketSumRange::weight);

// The formula above, checked against q_derive([k-2]) at `check_precision`.
// Throws VerificationFailure with the first differing exponent.
LinComb d_bracket_representation(int k, int s1, int s2,
                                 std::size_t check_precision = kDerivationCheckPrecision);

// d[m] for m >= 2 as a combination of brackets with all entries >= 2, by
// weighting the splittings (1, m+1) and (2, m) so that every term with an
// entry 1 cancels.
LinComb d_bracket_md_sharp(int m);

// d Z(k) in the Okounkov basis, k >= 2: the bracket form of Z(k), each d[j]
// replaced by d_bracket_md_sharp(j), converted back with brackets_to_oz.
// Checked against q_derive(Z(k)) at kDerivationCheckPrecision.
LinComb d_oz_representation_unreduced(int k);

// d_oz_representation_unreduced(k) passed through reduce_within_support, so
// linear relations among its own terms are used to drop low-weight terms.
LinComb d_oz_representation(int k);

struct IdentityRecord
{
    enum class Status
    {
        verified,
        refuted,
        conjectural,
    };

    LinComb lhs;
    bool lhs_derived = false;
    LinComb rhs;
    std::size_t checked_precision = 0;
    Status status = Status::refuted;
    std::optional<std::size_t> first_mismatch;

    // "verified", "refuted at q^17", "conjectural-verified-to-200".
    std::string status_text() const;
};

// Expands both sides (applying d to the left when lhs_derived) and compares
// every coefficient up to `precision`. A passing conjectural identity is
// reported as conjectural, never verified.
IdentityRecord verify_identity(const LinComb &lhs, bool lhs_derived, const LinComb &rhs,
                               std::size_t precision, bool conjectural = false);

struct RelationResult
{
    bool found = false;
    LinComb combination;
    std::size_t rank = 0;
    std::size_t augmented_rank = 0;
    std::size_t kernel_dimension = 0;
    std::size_t rows = 0;
};

enum class CandidateOrder
{
    canonical, // weight, length, lex ascending
    preferred, // PreferredIndexLess
};

// Minimum precision relation_find accepts without `force`.
std::size_t relation_min_precision(std::size_t candidate_count);

// Finds c with sum_i c_i series(candidate_i) = target on q^1..q^N. Candidates
// are sorted by `order` first; free variables of an underdetermined system
// are the later columns and are set to 0. On success the combination is
// re-verified on every coefficient. Throws DomainError when N < 2 * candidates
// and !force.
RelationResult relation_find(const QSeries &target, std::vector<Index> candidates,
                             const PolyFamily &basis, std::size_t precision, bool force = false,
                             CandidateOrder order = CandidateOrder::canonical);

// Rewrites c using only relations among its own terms, columns in preferred
// order, checked to max(precision, 2 * terms + 20) coefficients. The series of
// the result equals the series of c to that precision.
LinComb reduce_within_support(const PolyFamily &family, const LinComb &c,
                              std::size_t precision = kDerivationCheckPrecision);

// One summand  coeff * f_1 ... d(f_i) ... f_n  of a Leibniz expansion.
struct LeibnizTerm
{
    Rational coeff;
    std::vector<LinComb> factors;
    std::size_t derived = 0;
};

struct LeibnizExpansion
{
    std::vector<LeibnizTerm> terms;

    // q_derive applied to the i-th factor series, products taken as series.
    QSeries expand(const PolyFamily &family, std::size_t precision) const;

    // Substitutes derivative(f_i) for d(f_i) and multiplies out with the
    // quasi-shuffle product, giving a plain combination.
    LinComb resolve(const PolyFamily &family,
                    const std::function<LinComb(const LinComb &)> &derivative) const;
};

// d(f_1 ... f_n) = sum_i f_1 ... d(f_i) ... f_n, merging summands that agree
// up to reordering of the factors.
LeibnizExpansion d_leibniz_expand(const std::vector<LinComb> &factors);

// d of a combination in the Okounkov basis whose terms all have length one,
// through d_oz_representation.
LinComb d_oz_length_one_lincomb(const LinComb &c);

} // namespace qmzv

#endif
