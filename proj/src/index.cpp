#include <qmzv/index.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>

#include <qmzv/errors.hpp>
#include <qmzv/families.hpp>

namespace qmzv
{

Index::Index(std::initializer_list<int> entries)
    : Index(std::vector<int>(entries))
{
}

Index::Index(std::vector<int> entries)
    : entries_(std::move(entries))
{
    for (int e : entries_)
        if (e < 1)
            throw DomainError("index entries must be positive, got " + std::to_string(e));
}

int Index::weight() const noexcept
{
    int w = 0;
    for (int e : entries_)
        w += e;
    return w;
}

Index Index::tail() const
{
    Index r;
    r.entries_.assign(entries_.begin() + 1, entries_.end());
    return r;
}

Index Index::prepended(int entry) const
{
    Index r;
    r.entries_.reserve(entries_.size() + 1);
    r.entries_.push_back(entry);
    r.entries_.insert(r.entries_.end(), entries_.begin(), entries_.end());
    return r;
}

void Index::check_admissible(const PolyFamily &family) const
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!family.supports(entries_[i]))
            throw UnsupportedIndexError(family.name(), i, entries_[i]);
}

bool Index::admissible(const PolyFamily &family) const
{
    return std::all_of(entries_.begin(), entries_.end(), [&](int e) { return family.supports(e); });
}

std::string Index::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(entries_[i]);
    }
    return out;
}

Index parse_index(std::string_view text)
{
    std::vector<int> entries;
    std::string token;
    bool any = false;
    auto flush = [&](bool final) {
        std::string_view t = token;
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
            t.remove_prefix(1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
            t.remove_suffix(1);
        if (t.empty()) {
            if (final && !any)
                return;
            throw ParseError("empty entry in index \"" + std::string(text) + "\"");
        }
        if (!std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            t.size() > 9)
            throw ParseError("malformed index entry \"" + std::string(t) + "\"");
        const int v = std::stoi(std::string(t));
        if (v < 1)
            throw ParseError("index entries must be positive, got " + std::string(t));
        entries.push_back(v);
        token.clear();
    };
    for (char c : text) {
        if (c == ',') {
            any = true;
            flush(false);
        } else {
            token += c;
        }
    }
    flush(true);
    return Index(std::move(entries));
}

bool CanonicalIndexLess::operator()(const Index &a, const Index &b) const
{
    if (a.weight() != b.weight())
        return a.weight() < b.weight();
    if (a.length() != b.length())
        return a.length() < b.length();
    return a < b;
}

bool PreferredIndexLess::operator()(const Index &a, const Index &b) const
{
    if (a.weight() != b.weight())
        return a.weight() > b.weight();
    if (a.length() != b.length())
        return a.length() < b.length();
    return b < a;
}

std::vector<Index> admissible_indices(const PolyFamily &family, int max_weight)
{
    std::vector<Index> out;
    const std::vector<int> parts = family.support_range(1, max_weight);
    std::vector<int> current;
    std::function<void(int)> rec = [&](int remaining) {
        if (!current.empty())
            out.emplace_back(current);
        for (int p : parts) {
            if (p > remaining)
                break;
            current.push_back(p);
            rec(remaining - p);
            current.pop_back();
        }
    };
    rec(max_weight);
    std::sort(out.begin(), out.end(), CanonicalIndexLess{});
    return out;
}

} // namespace qmzv
