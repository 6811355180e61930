#include <qmzv/conversion.hpp>

#include <algorithm>
#include <map>

#include <qmzv/errors.hpp>

namespace qmzv
{

std::vector<Rational> b_coeffs(int k, int i)
{
    if (k < 2)
        throw DomainError("b_coeffs needs k >= 2");
    if (i < 1 || i > k - 1)
        throw DomainError("b_coeffs needs 1 <= i <= k-1");
    // binom(t + k-1-i, k-1) = prod_{m=0}^{k-2} (t + k-1-i-m) / (k-1)!
    Poly p{Rational(1)};
    for (int m = 0; m <= k - 2; ++m)
        p = p * Poly{Rational(k - 1 - i - m), Rational(1)};
    p *= Rational(1) / Rational(factorial(static_cast<unsigned long>(k - 1)));
    if (sgn(p.coeff(0)) != 0)
        throw Error("internal: b_coeffs row has a nonzero constant term");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k - 1));
    for (int j = 1; j <= k - 1; ++j)
        out.push_back(p.coeff(static_cast<std::size_t>(j)) * Rational(factorial(static_cast<unsigned long>(j))));
    return out;
}

SlotDecomposition monomial_slot_decomposition(int i, int k)
{
    const std::vector<Rational> row = b_coeffs(k, i);
    SlotDecomposition out;
    for (int j = 2; j <= k; ++j)
        out.emplace_back(j, row[static_cast<std::size_t>(j - 2)]);
    return out;
}

SlotDecomposition slot_decompose_general(const Poly &q, int s)
{
    if (s < 2)
        throw DomainError("slot decomposition needs s >= 2");
    if (sgn(q.coeff(0)) != 0)
        throw InvalidFamilyError("slot polynomial has a nonzero constant term");
    if (q.degree() > s - 1)
        throw InvalidFamilyError("slot polynomial " + q.to_string() + " has degree above " + std::to_string(s - 1));
    std::map<int, Rational> acc;
    for (int i = 1; i <= q.degree(); ++i) {
        const Rational &c = q.coefficients()[static_cast<std::size_t>(i)];
        if (sgn(c) == 0)
            continue;
        for (const auto &[j, b] : monomial_slot_decomposition(i, s))
            acc[j] += c * b;
    }
    SlotDecomposition out;
    for (const auto &[j, c] : acc)
        if (sgn(c) != 0)
            out.emplace_back(j, c);
    return out;
}

namespace
{

// Multilinear expansion: every slot entry s is replaced by the combination
// slot_map(s), left to right.
template <typename SlotMap>
LinComb expand_slots(const std::string &basis, const Index &idx, const Rational &scale, SlotMap &&slot_map)
{
    std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, scale}};
    for (int s : idx.entries()) {
        const SlotDecomposition &slot = slot_map(s);
        std::vector<std::pair<std::vector<int>, Rational>> next;
        next.reserve(partial.size() * slot.size());
        for (const auto &[entries, c] : partial) {
            for (const auto &[j, lambda] : slot) {
                auto e = entries;
                e.push_back(j);
                next.emplace_back(std::move(e), c * lambda);
            }
        }
        partial = std::move(next);
    }
    LinComb out(basis);
    for (auto &[entries, c] : partial)
        out.add_term(Index(std::move(entries)), c);
    return out;
}

} // namespace

LinComb zq_to_brackets(const PolyFamily &family, const Index &idx)
{
    idx.check_admissible(family);
    std::map<int, SlotDecomposition> slots;
    auto slot_map = [&](int s) -> const SlotDecomposition & {
        auto it = slots.find(s);
        if (it == slots.end()) {
            if (s < 2)
                throw NotRepresentableError("entry 1 has no bracket form with entries >= 2");
            it = slots.emplace(s, slot_decompose_general(family.poly(s), s)).first;
        }
        return it->second;
    };
    return expand_slots("eulerian", idx, Rational(1), slot_map);
}

LinComb zq_to_brackets(const PolyFamily &family, const LinComb &c)
{
    if (c.basis() != family.name())
        throw DomainError("combination in basis '" + c.basis() + "' converted with family '" + family.name() + "'");
    LinComb out("eulerian");
    out.add_constant(c.constant());
    for (const auto &[idx, coeff] : c.terms())
        out += zq_to_brackets(family, idx) * coeff;
    return out;
}

LinComb oz_length_one(int k)
{
    if (k < 2)
        throw DomainError("Okounkov length-one closed form needs k >= 2");
    LinComb out("eulerian");
    const int m = k / 2;
    const std::vector<Rational> first = b_coeffs(k, m);
    std::vector<Rational> second(first.size());
    if (k % 2 == 1)
        second = b_coeffs(k, m + 1);
    for (int j = 2; j <= k; ++j)
        out.add_term(Index{j}, first[static_cast<std::size_t>(j - 2)] + second[static_cast<std::size_t>(j - 2)]);
    return out;
}

LinComb brackets_to_family(const PolyFamily &family, const LinComb &brackets)
{
    if (brackets.basis() != "eulerian")
        throw DomainError("brackets_to_family expects the bracket basis, got '" + brackets.basis() + "'");

    // inverse[m] = [m] written as sum_j d_{m,j} Z(j), j <= m.
    std::map<int, SlotDecomposition> inverse;
    auto slot_map = [&](int m) -> const SlotDecomposition & {
        if (auto it = inverse.find(m); it != inverse.end())
            return it->second;
        if (m < 2)
            throw NotRepresentableError("bracket entry 1 is outside MD#: not representable in '" + family.name() + "'");
        for (int s = 2; s <= m; ++s) {
            if (inverse.contains(s))
                continue;
            if (!family.supports(s))
                throw NotRepresentableError("family '" + family.name() + "' has no Q_" + std::to_string(s));
            // Z(s) = sum_{j<=s} c_j [j], so [s] = (Z(s) - sum_{j<s} c_j [j]) / c_s.
            const SlotDecomposition forward = slot_decompose_general(family.poly(s), s);
            Rational lead = 0;
            std::map<int, Rational> acc;
            acc[s] = 1;
            for (const auto &[j, c] : forward) {
                if (j == s) {
                    lead = c;
                    continue;
                }
                for (const auto &[z, d] : inverse.at(j))
                    acc[z] -= c * d;
            }
            if (sgn(lead) == 0)
                throw NotRepresentableError("Q_" + std::to_string(s) + " has no [" + std::to_string(s) + "] component");
            SlotDecomposition row;
            for (const auto &[z, d] : acc)
                if (sgn(d) != 0)
                    row.emplace_back(z, d / lead);
            inverse.emplace(s, std::move(row));
        }
        return inverse.at(m);
    };

    LinComb out(family.name());
    out.add_constant(brackets.constant());
    for (const auto &[idx, coeff] : brackets.terms())
        out += expand_slots(family.name(), idx, coeff, slot_map);
    return out;
}

LinComb brackets_to_oz(const LinComb &brackets)
{
    return brackets_to_family(family_okounkov(), brackets);
}

} // namespace qmzv
