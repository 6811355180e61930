#ifndef QMZV_INDEX_HPP
#define QMZV_INDEX_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qmzv
{

class PolyFamily;

// Multi-index (s_1, ..., s_l) of positive integers. The empty index is the
// unit Z(empty) = 1.
class Index
{
public:
    Index() = default;
    Index(std::initializer_list<int> entries);
    explicit Index(std::vector<int> entries);

    const std::vector<int> &entries() const noexcept { return entries_; }
    std::size_t length() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int weight() const noexcept;
    int operator[](std::size_t i) const { return entries_[i]; }

    // (first, rest...) helpers for the recursive product.
    int head() const { return entries_.front(); }
    Index tail() const;
    Index prepended(int entry) const;

    // Throws UnsupportedIndexError naming the first entry outside the support.
    void check_admissible(const PolyFamily &family) const;
    bool admissible(const PolyFamily &family) const;

    // "2,3" (empty string for the empty index).
    std::string to_string() const;

    friend bool operator==(const Index &, const Index &) = default;
    // Plain lexicographic order on entries.
    friend auto operator<=>(const Index &a, const Index &b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<int> entries_;
};

// Comma-separated positive integers, whitespace tolerated; "" is the empty index.
// Throws ParseError.
Index parse_index(std::string_view text);

// Canonical presentation order: weight, then length, then lexicographic.
struct CanonicalIndexLess
{
    bool operator()(const Index &a, const Index &b) const;
};

// Weight descending, then length ascending, then lexicographic descending.
// Used when a representation should keep high-weight terms and drop
// dependent low-weight ones.
struct PreferredIndexLess
{
    bool operator()(const Index &a, const Index &b) const;
};

// Every index of weight 1..max_weight whose entries lie in the family support,
// in canonical order.
std::vector<Index> admissible_indices(const PolyFamily &family, int max_weight);

} // namespace qmzv

#endif
