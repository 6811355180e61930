#include <qmzv/lincomb.hpp>

#include <algorithm>
#include <vector>

namespace qmzv
{

LinComb::LinComb(std::string basis)
    : basis_(std::move(basis))
{
}

LinComb::LinComb(std::string basis, const Index &idx, Rational coeff)
    : basis_(std::move(basis))
{
    add_term(idx, coeff);
}

Rational LinComb::coeff(const Index &idx) const
{
    if (idx.empty())
        return constant_;
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LinComb::add_term(const Index &idx, const Rational &coeff)
{
    if (idx.empty()) {
        constant_ += coeff;
        return;
    }
    if (sgn(coeff) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(idx, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

LinComb &LinComb::operator+=(const LinComb &other)
{
    constant_ += other.constant_;
    for (const auto &[idx, c] : other.terms_)
        add_term(idx, c);
    return *this;
}

LinComb &LinComb::operator-=(const LinComb &other)
{
    constant_ -= other.constant_;
    for (const auto &[idx, c] : other.terms_)
        add_term(idx, -c);
    return *this;
}

LinComb &LinComb::operator*=(const Rational &scalar)
{
    constant_ *= scalar;
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[idx, c] : terms_)
        c *= scalar;
    return *this;
}

LinComb LinComb::prefixed(int entry) const
{
    LinComb r(basis_);
    r.add_term(Index{entry}, constant_);
    for (const auto &[idx, c] : terms_)
        r.add_term(idx.prepended(entry), c);
    return r;
}

LinComb LinComb::rebased(std::string basis) const
{
    LinComb r = *this;
    r.basis_ = std::move(basis);
    return r;
}

int LinComb::max_weight() const
{
    int w = 0;
    for (const auto &[idx, c] : terms_)
        w = std::max(w, idx.weight());
    return w;
}

bool LinComb::contains_entry(int entry) const
{
    for (const auto &[idx, c] : terms_)
        if (std::find(idx.entries().begin(), idx.entries().end(), entry) != idx.entries().end())
            return true;
    return false;
}

std::string basis_element(const std::string &basis, const Index &idx)
{
    if (basis == "eulerian")
        return "[" + idx.to_string() + "]";
    return "Z(" + idx.to_string() + ")";
}

std::string LinComb::to_string() const
{
    std::vector<std::pair<Index, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto &a, const auto &b) {
        if (a.first.weight() != b.first.weight())
            return a.first.weight() > b.first.weight();
        if (a.first.length() != b.first.length())
            return a.first.length() < b.first.length();
        return a.first < b.first;
    });

    std::string out;
    if (sgn(constant_) != 0)
        out = qmzv::to_string(constant_);
    for (const auto &[idx, c] : ordered) {
        const Rational mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        if (mag != 1)
            out += qmzv::to_string(mag) + " ";
        out += basis_element(basis_, idx);
    }
    return out.empty() ? "0" : out;
}

} // namespace qmzv
