#pragma once

#include "combi/objects/permutation.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace combi::objects {

struct DecoratedEntry {
    int value = 0;
    bool hat = false;
    bool circle = false;
    friend bool operator==(const DecoratedEntry&, const DecoratedEntry&) = default;
};

/// A permutation with hat and circle decorations, grown from {1, 1^} by
/// inserting n into a word of P_{n-1}: at the end only n or n^ (never
/// circled); immediately before an entry, n or (n) when that entry is
/// unhatted and n^ or (n^) when it is hatted.
struct DecoratedPermutation {
    std::vector<DecoratedEntry> entries;
    int size() const { return static_cast<int>(entries.size()); }
    friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;
};

struct DecoratedStats {
    int asc = 0;  ///< includes the conventional leading ascent from w_0 = 0
    int hat = 0;
    std::vector<int> hat_values;  ///< phi(Hat(w)), ascending
};

/// Accepts w iff repeatedly removing the maximum value succeeds down to an
/// uncircled entry 1: a maximum in last position must be uncircled, any other
/// maximum must share the hat flag of its successor.
bool validate(const DecoratedPermutation& w);

/// Strips decorations.
Permutation underlying(const DecoratedPermutation& w);
DecoratedStats stats(const DecoratedPermutation& w);
int asc(const DecoratedPermutation& w);
int hat(const DecoratedPermutation& w);

std::string encode(const DecoratedPermutation& w);
DecoratedPermutation parse_decorated(std::string_view text);

namespace detail {

template <class F>
void decorated_rec(DecoratedPermutation& w, int m, int n, F& f) {
    if (m > n) {
        f(std::as_const(w));
        return;
    }
    auto& e = w.entries;
    for (std::size_t j = 0; j <= e.size(); ++j) {
        const bool at_end = j == e.size();
        const bool hats[2] = {false, true};
        for (int variant = 0; variant < 2; ++variant) {
            DecoratedEntry entry{m, at_end ? hats[variant] : e[j].hat, at_end ? false : variant == 1};
            e.insert(e.begin() + static_cast<std::ptrdiff_t>(j), entry);
            decorated_rec(w, m + 1, n, f);
            e.erase(e.begin() + static_cast<std::ptrdiff_t>(j));
        }
    }
}

}  // namespace detail

/// Visits the 2^n n! decorated permutations of P_n.
template <class F>
void for_each_decorated(int n, F&& f) {
    if (n < 1) return;
    DecoratedPermutation w;
    w.entries.reserve(static_cast<std::size_t>(n));
    for (bool h : {false, true}) {
        w.entries = {DecoratedEntry{1, h, false}};
        detail::decorated_rec(w, 2, n, f);
    }
}

}  // namespace combi::objects
