#include <qmzv/expansion.hpp>

#include <algorithm>
#include <future>
#include <mutex>
#include <vector>

#include <qmzv/errors.hpp>

#include "family_state.hpp"

namespace qmzv
{

namespace
{

// Coefficients of Q_s(x) / (1 - x)^s up to x^precision.
QSeries slot_kernel(const PolyFamily &family, int s, std::size_t precision)
{
    return poly_eval_at_qpow(family.poly(s), 1, precision) *
           geometric_pow(1, static_cast<std::size_t>(s), precision);
}

// target += kernel(q^n) * inner, where kernel is a series in x = q^n. Only
// exponents >= inner_low of `inner` can be nonzero.
void accumulate_slot_product(std::vector<Rational> &target, const QSeries &kernel, std::size_t n,
                             const std::vector<Rational> *inner, std::size_t inner_low, Rational &tmp)
{
    const std::size_t precision = target.size() - 1;
    for (std::size_t m = 1; n * m <= precision; ++m) {
        const Rational &k = kernel[m];
        if (sgn(k) == 0)
            continue;
        const std::size_t shift = n * m;
        if (inner == nullptr) {
            target[shift] += k;
            continue;
        }
        for (std::size_t e = inner_low; e + shift <= precision; ++e) {
            const Rational &c = (*inner)[e];
            if (sgn(c) == 0)
                continue;
            mpq_mul(tmp.get_mpq_t(), k.get_mpq_t(), c.get_mpq_t());
            mpq_add(target[shift + e].get_mpq_t(), target[shift + e].get_mpq_t(), tmp.get_mpq_t());
        }
    }
}

} // namespace

QSeries zq_expand_outer_range(const PolyFamily &family, const Index &idx, std::size_t precision,
                              std::size_t first, std::size_t last)
{
    idx.check_admissible(family);
    QSeries result(precision);
    if (idx.empty()) {
        if (first <= 1)
            result[0] = 1;
        return result;
    }

    const std::size_t length = idx.length();
    std::vector<QSeries> kernels;
    kernels.reserve(length);
    for (int s : idx.entries())
        kernels.push_back(slot_kernel(family, s, precision));

    // running[j] = sum_{m < n} G_j(m) for the inner levels j >= 1, where
    // G_j(n) = kernel_j(q^n) * running[j+1] and the innermost level has no factor.
    std::vector<std::vector<Rational>> running(length, std::vector<Rational>(precision + 1));
    std::vector<std::vector<Rational>> current(length, std::vector<Rational>(precision + 1));
    // The q-adic valuation of running[j] is at least the smallest n_j + ... + n_l,
    // i.e. (l - j)(l - j + 1)/2.
    auto min_order = [&](std::size_t level) {
        const std::size_t depth = length - level;
        return depth * (depth + 1) / 2;
    };

    Rational tmp;
    const std::size_t stop = std::min(last, precision);
    for (std::size_t n = 1; n <= stop; ++n) {
        // Level j needs n >= l - j and n + (l-j-1)(l-j)/2 <= precision.
        for (std::size_t level = 0; level < length; ++level) {
            auto &g = current[level];
            std::fill(g.begin(), g.end(), Rational(0));
            const std::size_t depth = length - level - 1;
            if (n < depth + 1 || n + depth * (depth + 1) / 2 > precision)
                continue;
            if (level == 0 && n < first)
                continue;
            const bool innermost = level + 1 == length;
            accumulate_slot_product(g, kernels[level], n, innermost ? nullptr : &running[level + 1],
                                    innermost ? 0 : min_order(level + 1), tmp);
        }
        for (std::size_t e = 0; e <= precision; ++e)
            if (sgn(current[0][e]) != 0)
                result[e] += current[0][e];
        for (std::size_t level = 1; level < length; ++level)
            for (std::size_t e = 0; e <= precision; ++e)
                if (sgn(current[level][e]) != 0)
                    running[level][e] += current[level][e];
    }
    return result;
}

QSeries zq_expand(const PolyFamily &family, const Index &idx, std::size_t precision)
{
    idx.check_admissible(family);
    auto &state = family.state();
    {
        std::lock_guard lock(state.mutex);
        if (auto it = state.expansions.find({idx, precision}); it != state.expansions.end())
            return it->second;
    }
    QSeries result = zq_expand_outer_range(family, idx, precision, 1, precision);
    if (!idx.empty() && sgn(result[0]) != 0)
        throw Error("internal: nonempty index expanded with nonzero constant term");

    std::lock_guard lock(state.mutex);
    if (state.expansions.size() >= detail::FamilyState::kExpansionCacheLimit)
        state.expansions.clear();
    state.expansions.emplace(std::make_pair(idx, precision), result);
    return result;
}

QSeries zq_expand_chunked(const PolyFamily &family, const Index &idx, std::size_t precision,
                          std::size_t blocks, std::size_t threads)
{
    idx.check_admissible(family);
    blocks = std::max<std::size_t>(1, std::min(blocks, std::max<std::size_t>(precision, 1)));
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    const std::size_t span = std::max<std::size_t>(precision, 1);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t first = 1 + b * span / blocks;
        const std::size_t last = (b + 1) * span / blocks;
        ranges.emplace_back(first, last);
    }

    std::vector<QSeries> parts(blocks, QSeries(precision));
    if (threads <= 1) {
        for (std::size_t b = 0; b < blocks; ++b)
            parts[b] = zq_expand_outer_range(family, idx, precision, ranges[b].first, ranges[b].second);
    } else {
        std::vector<std::future<void>> workers;
        const std::size_t count = std::min(threads, blocks);
        for (std::size_t w = 0; w < count; ++w) {
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t b = w; b < blocks; b += count)
                    parts[b] = zq_expand_outer_range(family, idx, precision, ranges[b].first, ranges[b].second);
            }));
        }
        for (auto &f : workers)
            f.get();
    }

    QSeries total(precision);
    for (const auto &p : parts)
        total += p;
    return total;
}

QSeries bracket_expand(const Index &idx, std::size_t precision)
{
    return zq_expand(family_eulerian(), idx, precision);
}

QSeries multiple_divisor_oracle(const Index &idx, std::size_t precision)
{
    QSeries result(precision);
    if (idx.empty()) {
        result[0] = 1;
        return result;
    }
    const std::size_t length = idx.length();
    std::vector<Integer> sums(precision + 1);

    // Enumerate u_1 > u_2 > ... > u_l > 0 and v_j >= 1 with sum u_j v_j <= precision.
    // The remaining slots j+1..l need at least (l-j-1)(l-j)/2 from the budget.
    auto reserve = [&](std::size_t slot) {
        const std::size_t rest = length - slot - 1;
        return rest * (rest + 1) / 2;
    };
    auto rec = [&](auto &&self, std::size_t slot, std::size_t upper, std::size_t used, const Integer &weight) -> void {
        if (slot == length) {
            sums[used] += weight;
            return;
        }
        const std::size_t need = reserve(slot);
        const std::size_t min_u = length - slot;
        for (std::size_t u = min_u; u < upper; ++u) {
            if (used + u + need > precision)
                break;
            for (std::size_t v = 1; used + u * v + need <= precision; ++v) {
                Integer w;
                mpz_ui_pow_ui(w.get_mpz_t(), v, static_cast<unsigned long>(idx[slot] - 1));
                self(self, slot + 1, u, used + u * v, weight * w);
            }
        }
    };
    rec(rec, 0, precision + 1, 0, Integer(1));

    Integer denom = 1;
    for (int s : idx.entries())
        denom *= factorial(static_cast<unsigned long>(s - 1));
    for (std::size_t n = 0; n <= precision; ++n)
        result[n] = make_rational(sums[n], denom);
    return result;
}

QSeries lincomb_expand(const PolyFamily &family, const LinComb &c, std::size_t precision)
{
    if (c.basis() != family.name())
        throw DomainError("combination in basis '" + c.basis() + "' expanded with family '" + family.name() + "'");
    QSeries result = QSeries::constant(precision, c.constant());
    for (const auto &[idx, coeff] : c.terms())
        result.add_scaled(zq_expand(family, idx, precision), coeff);
    return result;
}

QSeries lincomb_expand(const LinComb &c, std::size_t precision)
{
    return lincomb_expand(family_by_name(c.basis()), c, precision);
}

LinComb eisenstein(int k)
{
    LinComb g("eulerian", Index{k});
    switch (k) {
    case 2:
        g.add_constant(make_rational(-1, 24));
        break;
    case 4:
        g.add_constant(make_rational(1, 1440));
        break;
    case 6:
        g.add_constant(make_rational(-1, 60480));
        break;
    default:
        throw DomainError("Eisenstein series available for k = 2, 4, 6 only");
    }
    return g;
}

} // namespace qmzv
