#ifndef QMZV_FAMILIES_HPP
#define QMZV_FAMILIES_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <qmzv/poly.hpp>
#include <qmzv/rational.hpp>

namespace qmzv
{

namespace detail
{
struct FamilyState;
}

// Eulerian polynomial P_m, defined by t P_m(t) / (1-t)^(m+1) = sum_{d>=1} d^m t^d.
Poly eulerian_poly(unsigned m);

// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);

// A family Q = {Q_s(t)} of polynomials indexed by a support S of positive
// integers. Every Q_s satisfies Q_s(0) = 0 and Q_s(1) != 0.
//
// Copies share one immutable generator and one thread-safe memo (polynomials
// and solved reduction relations), so passing families by value is cheap.
class PolyFamily
{
public:
    using SupportFn = std::function<bool(int)>;
    using GeneratorFn = std::function<Poly(int)>;

    PolyFamily(std::string name, SupportFn support, GeneratorFn generator);

    const std::string &name() const noexcept;
    bool supports(int s) const;

    // Q_s; throws UnsupportedIndexError (slot 0) when s is outside the support.
    const Poly &poly(int s) const;

    // Bracket display: "[2,3]" for the Eulerian family, "Z(2,3)" otherwise.
    bool bracket_notation() const noexcept;

    // Supported entries s with lo <= s <= hi, ascending.
    std::vector<int> support_range(int lo, int hi) const;

    detail::FamilyState &state() const { return *state_; }

private:
    std::shared_ptr<detail::FamilyState> state_;
};

// Q^E_s = t P_{s-1}(t) / (s-1)!, support s >= 1. Its Z_Q values are the brackets.
PolyFamily family_eulerian();

// Q^O_s = t^(s/2) for even s, t^((s-1)/2)(1+t) for odd s; support s >= 2.
PolyFamily family_okounkov();

// Q^T_s = t^(s-1), support s >= 2 (Q^T_1 = 1 has a nonzero constant term).
PolyFamily family_monomial();

// Explicit finite family. Each polynomial is checked for Q(0) = 0 and Q(1) != 0;
// throws InvalidFamilyError otherwise.
PolyFamily family_custom(std::string name, const std::map<int, Poly> &polys);

// "eulerian" (aliases "brackets", "eulerian-brackets"), "okounkov", "monomial".
// Throws DomainError for anything else.
PolyFamily family_by_name(const std::string &name);

bool is_builtin_family_name(const std::string &name);

} // namespace qmzv

#endif
