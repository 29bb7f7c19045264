#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace combi::objects {

/// A perfect matching of [2n] as a list of blocks (i, j), i < j.
/// Standard form lists blocks by increasing first coordinate.
struct PerfectMatching {
    std::vector<std::pair<int, int>> blocks;
    int size() const { return static_cast<int>(blocks.size()); }
    friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
};

struct MatchingStats {
    int el = 0;  ///< blocks whose larger entry is even ("marked")
    int ol = 0;  ///< blocks whose larger entry is odd ("unmarked")
    friend bool operator==(const MatchingStats&, const MatchingStats&) = default;
};

inline bool is_marked(const std::pair<int, int>& block) { return block.second % 2 == 0; }

/// Standard form, endpoints distinct and covering [2n].
bool validate(const PerfectMatching& m);
void standardize(PerfectMatching& m);
MatchingStats stats(const PerfectMatching& m);

std::string encode(const PerfectMatching& m);
PerfectMatching parse_matching(std::string_view text);

namespace detail {

template <class F>
void matchings_rec(std::vector<int>& partner, int free_left, PerfectMatching& m, F& f) {
    if (free_left == 0) {
        m.blocks.clear();
        for (int i = 1; i < static_cast<int>(partner.size()); ++i)
            if (partner[i] > i) m.blocks.emplace_back(i, partner[i]);
        f(std::as_const(m));
        return;
    }
    int u = 1;
    while (partner[u] != 0) ++u;
    for (int v = u + 1; v < static_cast<int>(partner.size()); ++v) {
        if (partner[v] != 0) continue;
        partner[u] = v;
        partner[v] = u;
        matchings_rec(partner, free_left - 2, m, f);
        partner[u] = partner[v] = 0;
    }
}

}  // namespace detail

/// Visits the (2n-1)!! matchings of [2n] in lexicographic order of standard form.
template <class F>
void for_each_matching(int n, F&& f) {
    std::vector<int> partner(static_cast<std::size_t>(2 * n) + 1, 0);
    PerfectMatching m;
    m.blocks.reserve(static_cast<std::size_t>(n));
    detail::matchings_rec(partner, 2 * n, m, f);
}

/// Largest n accepted by count_paired_excedance_involutions.
inline constexpr int kMaxPairedInvolutionN = 4;

/// Fixed-point-free involutions of S_{4n} in which, for every i in [2n], the
/// indices 2i-1 and 2i are both excedances or both anti-excedances.
/// Throws CapacityError above kMaxPairedInvolutionN.
long long count_paired_excedance_involutions(int n);

}  // namespace combi::objects
