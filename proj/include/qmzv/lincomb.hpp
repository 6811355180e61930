#ifndef QMZV_LINCOMB_HPP
#define QMZV_LINCOMB_HPP

#include <map>
#include <string>

#include <qmzv/index.hpp>
#include <qmzv/rational.hpp>

namespace qmzv
{

// Formal rational combination  constant + sum c_I * Z(I)  over one basis
// (a family name). The empty index is folded into the constant, and no stored
// term has a zero coefficient.
class LinComb
{
public:
    using TermMap = std::map<Index, Rational, CanonicalIndexLess>;

    explicit LinComb(std::string basis = "eulerian");
    LinComb(std::string basis, const Index &idx, Rational coeff = 1);

    const std::string &basis() const noexcept { return basis_; }
    const Rational &constant() const noexcept { return constant_; }
    const TermMap &terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty() && sgn(constant_) == 0; }

    // Coefficient of idx (the constant when idx is empty).
    Rational coeff(const Index &idx) const;

    void add_term(const Index &idx, const Rational &coeff);
    void add_constant(const Rational &value) { constant_ += value; }

    LinComb &operator+=(const LinComb &other);
    LinComb &operator-=(const LinComb &other);
    LinComb &operator*=(const Rational &scalar);

    friend LinComb operator+(LinComb a, const LinComb &b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb &b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational &s) { return a *= s; }
    friend LinComb operator*(const Rational &s, LinComb a) { return a *= s; }

    // x:(c), prefix entry to every index; the constant becomes the term (entry).
    LinComb prefixed(int entry) const;

    // Same coefficients, relabeled basis.
    LinComb rebased(std::string basis) const;

    int max_weight() const;
    bool contains_entry(int entry) const;

    friend bool operator==(const LinComb &, const LinComb &) = default;

    // "1/1440 + [4]", "3 Z(4) - Z(2,2) + Z(2)": constant first, then terms by
    // descending weight, ascending length, lexicographic.
    std::string to_string() const;

private:
    std::string basis_;
    Rational constant_;
    TermMap terms_;
};

// Display of a single basis element, e.g. "[2,3]" or "Z(2,3)".
std::string basis_element(const std::string &basis, const Index &idx);

} // namespace qmzv

#endif
