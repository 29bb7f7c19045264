#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace combi::objects {

/// A Stirling permutation: a word on {1,1,...,n,n} in which every value
/// between the two copies of i exceeds i.
struct StirlingWord {
    std::vector<int> word;
    int order() const { return static_cast<int>(word.size()) / 2; }
    friend bool operator==(const StirlingWord&, const StirlingWord&) = default;
};

/// A Stirling permutation of the second kind in standard cycle form: each
/// cycle starts with its minimum, cycles ordered by minimum, and the
/// reduction of every cycle is a Stirling permutation.
struct CycleStirling {
    std::vector<std::vector<int>> cycles;
    int order() const;
    friend bool operator==(const CycleStirling&, const CycleStirling&) = default;
};

struct StirlingStats {
    int descents = 0;
    int ap = 0;
    int desi = 0;
    friend bool operator==(const StirlingStats&, const StirlingStats&) = default;
};

struct CycleStirlingStats {
    int cplat = 0;
    int casc = 0;
    int cap = 0;
    int cyc = 0;
    int fix = 0;
    friend bool operator==(const CycleStirlingStats&, const CycleStirlingStats&) = default;
};

/// Replaces the i-th smallest distinct value by i.
std::vector<int> reduce(const std::vector<int>& word);

bool is_stirling_word(const std::vector<int>& word);
bool validate(const StirlingWord& w);
bool validate(const CycleStirling& s);

StirlingStats stats(const StirlingWord& w);
CycleStirlingStats stats(const CycleStirling& s);

std::string encode(const StirlingWord& w);
std::string encode(const CycleStirling& s);
StirlingWord parse_stirling_word(std::string_view text);
CycleStirling parse_cycle_stirling(std::string_view text);

namespace detail {

template <class F>
void stirling_rec(StirlingWord& w, int m, int n, F& f) {
    if (m > n) {
        f(std::as_const(w));
        return;
    }
    for (std::size_t slot = 0; slot <= w.word.size(); ++slot) {
        w.word.insert(w.word.begin() + static_cast<std::ptrdiff_t>(slot), {m, m});
        stirling_rec(w, m + 1, n, f);
        w.word.erase(w.word.begin() + static_cast<std::ptrdiff_t>(slot),
                     w.word.begin() + static_cast<std::ptrdiff_t>(slot) + 2);
    }
}

template <class F>
void cycle_stirling_rec(CycleStirling& s, int m, int n, F& f) {
    if (m > n) {
        f(std::as_const(s));
        return;
    }
    for (std::size_t c = 0; c < s.cycles.size(); ++c) {
        for (std::size_t pos = 1; pos <= s.cycles[c].size(); ++pos) {
            auto& cyc = s.cycles[c];
            cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(pos), {m, m});
            cycle_stirling_rec(s, m + 1, n, f);
            auto& again = s.cycles[c];
            again.erase(again.begin() + static_cast<std::ptrdiff_t>(pos),
                        again.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
        }
    }
    s.cycles.push_back({m, m});
    cycle_stirling_rec(s, m + 1, n, f);
    s.cycles.pop_back();
}

}  // namespace detail

/// Visits the (2n-1)!! Stirling permutations of order n, built by inserting
/// the pair "m m" into each of the 2m-1 gaps of every word of order m-1.
template <class F>
void for_each_stirling_word(int n, F&& f) {
    StirlingWord w;
    w.word.reserve(static_cast<std::size_t>(2 * n));
    detail::stirling_rec(w, 1, n, f);
}

/// Visits the (2n-1)!! Stirling permutations of the second kind of order n:
/// the pair "m m" goes right after any of the 2m-2 entries of an object of
/// order m-1, or opens the new cycle (m m).
template <class F>
void for_each_cycle_stirling(int n, F&& f) {
    CycleStirling s;
    detail::cycle_stirling_rec(s, 1, n, f);
}

}  // namespace combi::objects
