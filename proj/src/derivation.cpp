#include <qmzv/derivation.hpp>

#include <algorithm>
#include <map>

#include <qmzv/conversion.hpp>
#include <qmzv/errors.hpp>
#include <qmzv/expansion.hpp>
#include <qmzv/linear_solve.hpp>
#include <qmzv/stuffle.hpp>

namespace qmzv
{

LinComb d_bracket_formula(int k, int s1, int s2, BracketSumRange range)
{
    if (s1 < 1 || s2 < 1 || s1 + s2 != k || k < 3)
        throw DomainError("d[k-2] representation needs s1, s2 >= 1, s1 + s2 = k >= 3");
    // The coefficient below is only valid for the ordered splitting.
    if (s1 > s2)
        std::swap(s1, s2);

    const PolyFamily eulerian = family_eulerian();
    const Rational lead(binomial(k - 2, s1 - 1));

    LinComb rhs = stuffle_product(eulerian, Index{s1}, Index{s2});
    rhs.add_term(Index{s1, s2}, -1);
    rhs.add_term(Index{s2, s1}, -1);
    rhs.add_term(Index{k - 1}, lead);
    const int total = range == BracketSumRange::weight ? k : k + 2;
    for (int a = s1 + 1; a <= total - 1; ++a) {
        const int b = total - a;
        Rational c = Rational(binomial(a - 1, s1 - 1)) + Rational(binomial(a - 1, s2 - 1));
        if (a == s2)
            c -= 1;
        rhs.add_term(Index{a, b}, -c);
    }
    return rhs * (Rational(k - 2) / lead);
}

LinComb d_bracket_representation(int k, int s1, int s2, std::size_t check_precision)
{
    LinComb rep = d_bracket_formula(k, s1, s2, BracketSumRange::weight);
    const QSeries expected = q_derive(bracket_expand(Index{k - 2}, check_precision));
    if (auto bad = first_mismatch(lincomb_expand(family_eulerian(), rep, check_precision), expected))
        throw VerificationFailure("representation of d[" + std::to_string(k - 2) + "] failed its series check", *bad);
    return rep;
}

LinComb d_bracket_md_sharp(int m)
{
    if (m < 2)
        throw DomainError("d[m] lies in MD# only for m >= 2");
    const int k = m + 2;
    const LinComb first = d_bracket_representation(k, 1, k - 1);
    const LinComb second = d_bracket_representation(k, 2, k - 2);

    // alpha + beta = 1, and alpha c_1(T) + beta c_2(T) = 0 on every term T with an entry 1.
    RationalMatrix a{{Rational(1), Rational(1)}};
    std::vector<Rational> b{Rational(1)};
    std::vector<Index> ones;
    for (const auto *rep : {&first, &second})
        for (const auto &[idx, c] : rep->terms())
            if (std::find(idx.entries().begin(), idx.entries().end(), 1) != idx.entries().end() &&
                std::find(ones.begin(), ones.end(), idx) == ones.end())
                ones.push_back(idx);
    for (const Index &idx : ones) {
        a.push_back({first.coeff(idx), second.coeff(idx)});
        b.push_back(0);
    }
    const LinearSolution sol = solve_exact(a, b);
    if (!sol.consistent())
        throw Error("cancellation failure: the two splittings of d[" + std::to_string(m) +
                    "] cannot remove every entry-1 term with one weighting");

    LinComb out = first * sol.values[0] + second * sol.values[1];
    if (out.contains_entry(1))
        throw Error("cancellation failure: an entry-1 term survives in d[" + std::to_string(m) + "]");
    return out;
}

LinComb d_oz_representation(int k)
{
    return reduce_within_support(family_okounkov(), d_oz_representation_unreduced(k));
}

LinComb d_oz_representation_unreduced(int k)
{
    const PolyFamily okounkov = family_okounkov();
    if (!okounkov.supports(k))
        throw UnsupportedIndexError(okounkov.name(), 0, k);

    LinComb brackets("eulerian");
    const LinComb slot = zq_to_brackets(okounkov, Index{k});
    for (const auto &[idx, c] : slot.terms())
        brackets += d_bracket_md_sharp(idx[0]) * c;
    LinComb out = brackets_to_oz(brackets);

    const std::size_t n = kDerivationCheckPrecision;
    if (auto bad = first_mismatch(lincomb_expand(okounkov, out, n), q_derive(zq_expand(okounkov, Index{k}, n))))
        throw VerificationFailure("representation of d Z(" + std::to_string(k) + ") failed its series check", *bad);
    return out;
}

std::string IdentityRecord::status_text() const
{
    switch (status) {
    case Status::verified:
        return "verified";
    case Status::conjectural:
        return "conjectural-verified-to-" + std::to_string(checked_precision);
    case Status::refuted:
        break;
    }
    return "refuted at q^" + std::to_string(first_mismatch.value_or(0));
}

IdentityRecord verify_identity(const LinComb &lhs, bool lhs_derived, const LinComb &rhs, std::size_t precision,
                               bool conjectural)
{
    IdentityRecord rec{lhs, lhs_derived, rhs, precision, IdentityRecord::Status::refuted, std::nullopt};
    QSeries left = lincomb_expand(lhs, precision);
    if (lhs_derived)
        left = q_derive(left);
    const QSeries right = lincomb_expand(rhs, precision);
    rec.first_mismatch = first_mismatch(left, right);
    if (!rec.first_mismatch)
        rec.status = conjectural ? IdentityRecord::Status::conjectural : IdentityRecord::Status::verified;
    return rec;
}

std::size_t relation_min_precision(std::size_t candidate_count)
{
    return 2 * candidate_count;
}

RelationResult relation_find(const QSeries &target, std::vector<Index> candidates, const PolyFamily &basis,
                             std::size_t precision, bool force, CandidateOrder order)
{
    if (order == CandidateOrder::canonical)
        std::sort(candidates.begin(), candidates.end(), CanonicalIndexLess{});
    else
        std::sort(candidates.begin(), candidates.end(), PreferredIndexLess{});
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (!force && precision < relation_min_precision(candidates.size()))
        throw DomainError("relation_find: precision " + std::to_string(precision) + " is below 2 x " +
                          std::to_string(candidates.size()) + " candidates");
    if (target.precision() < precision)
        throw DomainError("relation_find: target known only to q^" + std::to_string(target.precision()));

    std::vector<QSeries> columns;
    columns.reserve(candidates.size());
    for (const Index &idx : candidates)
        columns.push_back(zq_expand(basis, idx, precision));

    RationalMatrix a(precision, std::vector<Rational>(candidates.size()));
    std::vector<Rational> b(precision);
    for (std::size_t n = 1; n <= precision; ++n) {
        for (std::size_t c = 0; c < candidates.size(); ++c)
            a[n - 1][c] = columns[c][n];
        b[n - 1] = target[n];
    }

    const LinearSolution sol = solve_exact(a, b);
    RelationResult result;
    result.combination = LinComb(basis.name());
    result.rank = sol.rank;
    result.augmented_rank = sol.augmented_rank;
    result.kernel_dimension = sol.kernel_dimension;
    result.rows = precision;
    if (!sol.consistent())
        return result;

    for (std::size_t c = 0; c < candidates.size(); ++c)
        result.combination.add_term(candidates[c], sol.values[c]);
    QSeries check(precision);
    for (std::size_t c = 0; c < candidates.size(); ++c)
        check.add_scaled(columns[c], sol.values[c]);
    if (first_mismatch(check, target.truncated(precision), 1))
        throw Error("internal: relation failed its re-verification");
    result.found = true;
    return result;
}

LinComb reduce_within_support(const PolyFamily &family, const LinComb &c, std::size_t precision)
{
    std::vector<Index> support;
    for (const auto &[idx, coeff] : c.terms())
        support.push_back(idx);
    if (support.size() < 2)
        return c;
    const std::size_t n = std::max(precision, 2 * support.size() + 20);
    QSeries target = lincomb_expand(family, c, n);
    target[0] -= c.constant();
    const RelationResult r = relation_find(target, support, family, n, false, CandidateOrder::preferred);
    if (!r.found)
        throw Error("internal: a combination is not in the span of its own terms");
    LinComb out = r.combination;
    out.add_constant(c.constant());
    return out;
}

namespace
{

std::string factor_key(const LinComb &f)
{
    return f.basis() + ":" + f.to_string();
}

} // namespace

LeibnizExpansion d_leibniz_expand(const std::vector<LinComb> &factors)
{
    if (factors.size() < 2)
        throw DomainError("Leibniz expansion needs at least two factors");
    // Canonical form: derived factor first, remaining factors sorted by key.
    std::map<std::vector<std::string>, LeibnizTerm> merged;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::vector<LinComb> rest;
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (j != i)
                rest.push_back(factors[j]);
        std::sort(rest.begin(), rest.end(),
                  [](const LinComb &x, const LinComb &y) { return factor_key(x) < factor_key(y); });
        std::vector<LinComb> ordered{factors[i]};
        ordered.insert(ordered.end(), rest.begin(), rest.end());
        std::vector<std::string> key;
        for (const auto &f : ordered)
            key.push_back(factor_key(f));
        auto [it, inserted] = merged.try_emplace(key, LeibnizTerm{Rational(0), ordered, 0});
        it->second.coeff += 1;
    }
    LeibnizExpansion out;
    for (auto &[key, term] : merged)
        out.terms.push_back(std::move(term));
    return out;
}

QSeries LeibnizExpansion::expand(const PolyFamily &family, std::size_t precision) const
{
    QSeries total(precision);
    for (const auto &term : terms) {
        QSeries product = QSeries::constant(precision, 1);
        for (std::size_t i = 0; i < term.factors.size(); ++i) {
            QSeries f = lincomb_expand(family, term.factors[i], precision);
            product = product * (i == term.derived ? q_derive(f) : f);
        }
        total.add_scaled(product, term.coeff);
    }
    return total;
}

LinComb LeibnizExpansion::resolve(const PolyFamily &family,
                                  const std::function<LinComb(const LinComb &)> &derivative) const
{
    LinComb total(family.name());
    for (const auto &term : terms) {
        LinComb product(family.name());
        product.add_constant(1);
        for (std::size_t i = 0; i < term.factors.size(); ++i)
            product = lincomb_product(family, product,
                                      i == term.derived ? derivative(term.factors[i]) : term.factors[i]);
        total += product * term.coeff;
    }
    return total;
}

LinComb d_oz_length_one_lincomb(const LinComb &c)
{
    if (c.basis() != "okounkov")
        throw DomainError("d_oz_length_one_lincomb expects the Okounkov basis");
    LinComb out("okounkov");
    for (const auto &[idx, coeff] : c.terms()) {
        if (idx.length() != 1)
            throw DomainError("d is only resolved for length-one Okounkov terms, got Z(" + idx.to_string() + ")");
        out += d_oz_representation(idx[0]) * coeff;
    }
    return out;
}

} // namespace qmzv
