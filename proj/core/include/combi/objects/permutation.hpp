#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace combi::objects {

/// One-line notation over [n].
struct Permutation {
    std::vector<int> word;
    int size() const { return static_cast<int>(word.size()); }
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Signed one-line notation; a negative entry -i is the barred element.
/// The virtual leading entry 0 is never stored.
struct SignedPermutation {
    std::vector<int> word;
    int size() const { return static_cast<int>(word.size()); }
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

struct PermutationStats {
    int des_a = 0;
    int asc = 0;
    int exc = 0;
    int anti_exc = 0;
    int rlmin = 0;
    friend bool operator==(const PermutationStats&, const PermutationStats&) = default;
};

struct SignedStats {
    int des_b = 0;
    int rlmin = 0;
    int bar = 0;
    std::vector<int> bar_set;   ///< magnitudes of Bar(pi), ascending
    std::vector<int> nbar_set;  ///< magnitudes of NBar(pi), ascending
    std::vector<std::vector<int>> blocks;
};

bool validate(const Permutation& p);
bool validate(const SignedPermutation& p);

int des_a(const Permutation& p);
/// Plain ascent count, no leading convention.
int asc(const Permutation& p);
int exc(const Permutation& p);
int anti_exc(const Permutation& p);
int rlmin(const Permutation& p);
bool is_derangement(const Permutation& p);
PermutationStats stats(const Permutation& p);

/// Descents over i in {0..n-1} with pi(0) = 0.
int des_b(const SignedPermutation& p);
/// rlmin_mask[i] is true when |pi(i)| < |pi(j)| for all j > i.
std::vector<bool> rlmin_mask(const SignedPermutation& p);
/// in_bar[i] is true when entry i lies in a block ending with a negative
/// right-to-left minimum.
std::vector<bool> bar_mask(const SignedPermutation& p);
int bar(const SignedPermutation& p);
SignedStats stats(const SignedPermutation& p);

std::string encode(const Permutation& p);
std::string encode(const SignedPermutation& p);
Permutation parse_permutation(std::string_view text);
SignedPermutation parse_signed_permutation(std::string_view text);

/// Visits S_n in lexicographic order; n = 0 visits the empty permutation.
template <class F>
void for_each_permutation(int n, F&& f) {
    Permutation p;
    p.word.resize(static_cast<std::size_t>(n));
    std::iota(p.word.begin(), p.word.end(), 1);
    do {
        f(std::as_const(p));
    } while (std::next_permutation(p.word.begin(), p.word.end()));
}

/// Visits B_n: each permutation of S_n with every sign pattern.
template <class F>
void for_each_signed_permutation(int n, F&& f) {
    SignedPermutation s;
    s.word.resize(static_cast<std::size_t>(n));
    for_each_permutation(n, [&](const Permutation& p) {
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            for (int i = 0; i < n; ++i) s.word[i] = (mask >> i & 1U) ? -p.word[i] : p.word[i];
            f(std::as_const(s));
        }
    });
}

}  // namespace combi::objects
