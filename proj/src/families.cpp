#include <qmzv/families.hpp>

#include <map>
#include <mutex>
#include <utility>

#include <qmzv/errors.hpp>
#include <qmzv/series.hpp>
#include <qmzv/stuffle.hpp>

#include "family_state.hpp"

namespace qmzv
{

UnsupportedIndexError::UnsupportedIndexError(std::string family, std::size_t slot, int entry)
    : Error("index entry " + std::to_string(entry) + " in slot " + std::to_string(slot + 1) +
            " is not in the support of family '" + family + "'"),
      family_(std::move(family)),
      slot_(slot),
      entry_(entry)
{
}

ClosureFailure::ClosureFailure(int r, int s, std::string residual)
    : Error("no reduction relation for Q_" + std::to_string(r) + " * Q_" + std::to_string(s) +
            "; residual " + residual),
      r_(r),
      s_(s),
      residual_(std::move(residual))
{
}

VerificationFailure::VerificationFailure(const std::string &what, std::size_t exponent)
    : Error(what + " (first mismatch at q^" + std::to_string(exponent) + ")"),
      exponent_(exponent)
{
}

Poly eulerian_poly(unsigned m)
{
    static std::mutex mutex;
    static std::map<unsigned, Poly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end())
            return it->second;
    }

    // t P_m(t) has degree <= m, so precision m captures it exactly.
    const std::size_t precision = m;
    QSeries power_sum(precision);
    for (std::size_t d = 1; d <= precision; ++d) {
        Integer v;
        mpz_ui_pow_ui(v.get_mpz_t(), d, m);
        power_sum[d] = Rational(v);
    }
    const auto &factor = Poly::one_minus_t_pow(m + 1);
    const QSeries product = power_sum * poly_eval_at_qpow(factor, 1, precision);
    std::vector<Rational> shifted(product.coefficients().begin() + 1, product.coefficients().end());
    Poly result(std::move(shifted));
    if (result.is_zero())
        result = Poly{Rational(1)}; // m = 0: t P_0 = t lies beyond precision 0

    std::lock_guard lock(mutex);
    return cache.emplace(m, std::move(result)).first->second;
}

Rational bernoulli(unsigned n)
{
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mutex);
    while (table.size() <= n) {
        const unsigned k = static_cast<unsigned>(table.size());
        Rational sum = 0;
        for (unsigned i = 0; i < k; ++i)
            sum += Rational(binomial(k + 1, i)) * table[i];
        table.push_back(-sum / Rational(k + 1));
    }
    return table[n];
}

PolyFamily::PolyFamily(std::string name, SupportFn support, GeneratorFn generator)
    : state_(std::make_shared<detail::FamilyState>())
{
    state_->name = std::move(name);
    state_->support = std::move(support);
    state_->generator = std::move(generator);
}

const std::string &PolyFamily::name() const noexcept
{
    return state_->name;
}

bool PolyFamily::supports(int s) const
{
    return s >= 1 && state_->support(s);
}

const Poly &PolyFamily::poly(int s) const
{
    if (!supports(s))
        throw UnsupportedIndexError(state_->name, 0, s);
    std::lock_guard lock(state_->mutex);
    auto it = state_->polys.find(s);
    if (it == state_->polys.end())
        it = state_->polys.emplace(s, state_->generator(s)).first;
    return it->second;
}

bool PolyFamily::bracket_notation() const noexcept
{
    return state_->name == "eulerian";
}

std::vector<int> PolyFamily::support_range(int lo, int hi) const
{
    std::vector<int> out;
    for (int s = std::max(lo, 1); s <= hi; ++s)
        if (supports(s))
            out.push_back(s);
    return out;
}

PolyFamily family_eulerian()
{
    static const PolyFamily family(
        "eulerian", [](int s) { return s >= 1; },
        [](int s) {
            Poly p = Poly::monomial(1) * eulerian_poly(static_cast<unsigned>(s - 1));
            return p * (Rational(1) / Rational(factorial(static_cast<unsigned long>(s - 1))));
        });
    return family;
}

PolyFamily family_okounkov()
{
    static const PolyFamily family(
        "okounkov", [](int s) { return s >= 2; },
        [](int s) {
            if (s % 2 == 0)
                return Poly::monomial(static_cast<std::size_t>(s / 2));
            return Poly::monomial(static_cast<std::size_t>((s - 1) / 2)) +
                   Poly::monomial(static_cast<std::size_t>((s + 1) / 2));
        });
    return family;
}

PolyFamily family_monomial()
{
    static const PolyFamily family(
        "monomial", [](int s) { return s >= 2; },
        [](int s) { return Poly::monomial(static_cast<std::size_t>(s - 1)); });
    return family;
}

PolyFamily family_custom(std::string name, const std::map<int, Poly> &polys)
{
    for (const auto &[s, p] : polys) {
        if (s < 1)
            throw InvalidFamilyError("family '" + name + "': index " + std::to_string(s) + " is not positive");
        if (sgn(p.coeff(0)) != 0)
            throw InvalidFamilyError("family '" + name + "': Q_" + std::to_string(s) + "(0) != 0");
        if (sgn(p(Rational(1))) == 0)
            throw InvalidFamilyError("family '" + name + "': Q_" + std::to_string(s) + "(1) = 0");
    }
    auto table = std::make_shared<const std::map<int, Poly>>(polys);
    return PolyFamily(
        std::move(name), [table](int s) { return table->contains(s); },
        [table](int s) { return table->at(s); });
}

bool is_builtin_family_name(const std::string &name)
{
    return name == "eulerian" || name == "brackets" || name == "eulerian-brackets" || name == "okounkov" ||
           name == "monomial";
}

PolyFamily family_by_name(const std::string &name)
{
    if (name == "eulerian" || name == "brackets" || name == "eulerian-brackets")
        return family_eulerian();
    if (name == "okounkov")
        return family_okounkov();
    if (name == "monomial")
        return family_monomial();
    throw DomainError("unknown family '" + name + "'");
}

} // namespace qmzv
