#include <qmzv/stuffle.hpp>

#include <algorithm>
#include <map>
#include <mutex>

#include <qmzv/errors.hpp>
#include <qmzv/linear_solve.hpp>

#include "family_state.hpp"

namespace qmzv
{

namespace
{

// Remainder of `target` modulo the span of `basis`, reducing leading
// (highest-degree) terms. Zero exactly when target lies in the span.
Poly span_remainder(const std::vector<Poly> &basis, Poly target)
{
    std::map<int, Poly> echelon; // leading degree -> monic-free reduced vector
    for (Poly p : basis) {
        while (!p.is_zero()) {
            auto it = echelon.find(p.degree());
            if (it == echelon.end()) {
                echelon.emplace(p.degree(), p);
                break;
            }
            const Rational f = p.coeff(static_cast<std::size_t>(p.degree())) /
                               it->second.coeff(static_cast<std::size_t>(p.degree()));
            p -= it->second * f;
        }
    }
    for (;;) {
        if (target.is_zero())
            return target;
        auto it = echelon.find(target.degree());
        if (it == echelon.end()) {
            // Leading term is irreducible; keep it and reduce the rest.
            const int d = target.degree();
            const Poly lead = Poly::monomial(static_cast<std::size_t>(d), target.coeff(static_cast<std::size_t>(d)));
            return lead + span_remainder(basis, target - lead);
        }
        const auto d = static_cast<std::size_t>(target.degree());
        target -= it->second * (target.coeff(d) / it->second.coeff(d));
    }
}

ReductionCoeffs solve_reduction(const PolyFamily &family, int r, int s)
{
    const Poly product = family.poly(r) * family.poly(s);
    std::vector<int> js = family.support_range(1, r + s);
    std::reverse(js.begin(), js.end()); // unknowns ordered j descending

    std::vector<Poly> columns;
    int degree = product.degree();
    for (int j : js) {
        columns.push_back(Poly::one_minus_t_pow(static_cast<std::size_t>(r + s - j)) * family.poly(j));
        degree = std::max(degree, columns.back().degree());
    }

    RationalMatrix a(static_cast<std::size_t>(degree + 1), std::vector<Rational>(columns.size()));
    std::vector<Rational> b(static_cast<std::size_t>(degree + 1));
    for (std::size_t e = 0; e <= static_cast<std::size_t>(degree); ++e) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            a[e][c] = columns[c].coeff(e);
        b[e] = product.coeff(e);
    }

    const LinearSolution sol = solve_exact(a, b);
    if (!sol.consistent())
        throw ClosureFailure(r, s, span_remainder(columns, product).to_string());

    ReductionCoeffs out;
    for (std::size_t c = columns.size(); c-- > 0;)
        if (sgn(sol.values[c]) != 0)
            out.emplace_back(js[c], sol.values[c]);
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.first < y.first; });

    if (reduction_rhs(family, r, s, out) != product)
        throw Error("internal: reduction relation failed its re-check");
    return out;
}

} // namespace

const ReductionCoeffs &reduction_coeffs(const PolyFamily &family, int r, int s)
{
    if (!family.supports(r))
        throw UnsupportedIndexError(family.name(), 0, r);
    if (!family.supports(s))
        throw UnsupportedIndexError(family.name(), 1, s);
    const auto key = std::minmax(r, s);
    auto &state = family.state();
    {
        std::lock_guard lock(state.mutex);
        if (auto it = state.reductions.find(key); it != state.reductions.end())
            return it->second;
    }
    ReductionCoeffs solved = solve_reduction(family, key.first, key.second);
    std::lock_guard lock(state.mutex);
    // try_emplace keeps the first insertion if another thread won the race.
    return state.reductions.try_emplace(key, std::move(solved)).first->second;
}

Poly reduction_rhs(const PolyFamily &family, int r, int s, const ReductionCoeffs &coeffs)
{
    Poly out;
    for (const auto &[j, lambda] : coeffs)
        out += Poly::one_minus_t_pow(static_cast<std::size_t>(r + s - j)) * family.poly(j) * lambda;
    return out;
}

Rational lambda_closed_form(int a, int b, int j)
{
    if (a < 1 || b < 1)
        throw DomainError("lambda_closed_form needs a, b >= 1");
    if (j < 1 || j > a)
        throw DomainError("lambda_closed_form needs 1 <= j <= a");
    const int n = a + b - j;
    Rational value = Rational(binomial(n - 1, a - j)) * bernoulli(static_cast<unsigned>(n)) /
                     Rational(factorial(static_cast<unsigned long>(n)));
    return (b - 1) % 2 == 0 ? value : Rational(-value);
}

ReductionCoeffs eulerian_reduction_via_formula(int r, int s)
{
    if (r < 1 || s < 1)
        throw DomainError("eulerian_reduction_via_formula needs r, s >= 1");
    std::map<int, Rational> merged;
    for (int j = 1; j <= r; ++j)
        merged[j] += lambda_closed_form(r, s, j);
    for (int j = 1; j <= s; ++j)
        merged[j] += lambda_closed_form(s, r, j);
    merged[r + s] += 1;
    ReductionCoeffs out;
    for (const auto &[j, c] : merged)
        if (sgn(c) != 0)
            out.emplace_back(j, c);
    return out;
}

Rational lambda_one_sum(int a, int b)
{
    if (a < 1 || b < 1)
        throw DomainError("lambda_one_sum needs a, b >= 1");
    const int sign_sum = ((a - 1) % 2 == 0 ? 1 : -1) + ((b - 1) % 2 == 0 ? 1 : -1);
    const int n = a + b - 1;
    return Rational(sign_sum) * Rational(binomial(a + b - 2, a - 1)) * bernoulli(static_cast<unsigned>(n)) /
           Rational(factorial(static_cast<unsigned long>(n)));
}

ReductionCoeffs okounkov_reduction_parity_split(int r, int s)
{
    if (r < 2 || s < 2)
        throw DomainError("Okounkov indices start at 2");
    if ((r + s) % 2 == 0)
        return {{r + s, Rational(1)}};
    return {{r + s - 2, Rational(1)}, {r + s, Rational(2)}};
}

namespace
{

class StuffleEngine
{
public:
    explicit StuffleEngine(const PolyFamily &family)
        : family_(family)
    {
    }

    const LinComb &product(const Index &u, const Index &v)
    {
        const auto key = std::make_pair(u, v);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        LinComb out(family_.name());
        if (u.empty()) {
            out.add_term(v, 1);
        } else if (v.empty()) {
            out.add_term(u, 1);
        } else {
            const int r = u.head();
            const int s = v.head();
            const Index u_rest = u.tail();
            const Index v_rest = v.tail();
            out += product(u_rest, v).prefixed(r);
            out += product(u, v_rest).prefixed(s);
            const ReductionCoeffs &lambdas = reduction_coeffs(family_, r, s);
            if (!lambdas.empty()) {
                const LinComb inner = product(u_rest, v_rest);
                for (const auto &[j, lambda] : lambdas)
                    out += inner.prefixed(j) * lambda;
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    const PolyFamily &family_;
    std::map<std::pair<Index, Index>, LinComb> memo_;
};

} // namespace

LinComb stuffle_product(const PolyFamily &family, const Index &u, const Index &v)
{
    u.check_admissible(family);
    v.check_admissible(family);
    StuffleEngine engine(family);
    return engine.product(u, v);
}

LinComb lincomb_product(const PolyFamily &family, const LinComb &a, const LinComb &b)
{
    if (a.basis() != family.name() || b.basis() != family.name())
        throw DomainError("lincomb_product: basis does not match family '" + family.name() + "'");
    StuffleEngine engine(family);
    LinComb out(family.name());
    out.add_constant(a.constant() * b.constant());
    for (const auto &[idx, c] : b.terms())
        out.add_term(idx, a.constant() * c);
    for (const auto &[idx, c] : a.terms())
        out.add_term(idx, b.constant() * c);
    for (const auto &[u, cu] : a.terms()) {
        u.check_admissible(family);
        for (const auto &[v, cv] : b.terms()) {
            v.check_admissible(family);
            out += engine.product(u, v) * (cu * cv);
        }
    }
    return out;
}

} // namespace qmzv
