#include "combi/objects/permutation.hpp"

#include "combi/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace combi::objects {

namespace {

bool covers_range(std::vector<int> magnitudes) {
    std::sort(magnitudes.begin(), magnitudes.end());
    for (std::size_t i = 0; i < magnitudes.size(); ++i)
        if (magnitudes[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<int> parse_ints(std::string_view text, const char* what) {
    std::istringstream in{std::string(text)};
    std::vector<int> out;
    std::string token;
    while (in >> token) {
        char* end = nullptr;
        const long v = std::strtol(token.c_str(), &end, 10);
        if (end == token.c_str() || *end != '\0')
            throw ParseError(std::string("malformed ") + what + " entry '" + token + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

bool validate(const Permutation& p) { return covers_range(p.word); }

bool validate(const SignedPermutation& p) {
    std::vector<int> mags;
    mags.reserve(p.word.size());
    for (int v : p.word) mags.push_back(std::abs(v));
    return covers_range(std::move(mags));
}

int des_a(const Permutation& p) {
    int d = 0;
    for (std::size_t i = 0; i + 1 < p.word.size(); ++i) d += p.word[i] > p.word[i + 1];
    return d;
}

int asc(const Permutation& p) {
    int a = 0;
    for (std::size_t i = 0; i + 1 < p.word.size(); ++i) a += p.word[i] < p.word[i + 1];
    return a;
}

int exc(const Permutation& p) {
    int e = 0;
    for (std::size_t i = 0; i < p.word.size(); ++i) e += p.word[i] > static_cast<int>(i) + 1;
    return e;
}

int anti_exc(const Permutation& p) {
    int e = 0;
    for (std::size_t i = 0; i < p.word.size(); ++i) e += p.word[i] < static_cast<int>(i) + 1;
    return e;
}

int rlmin(const Permutation& p) {
    int count = 0;
    int best = p.size() + 1;
    for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) {
        if (*it < best) {
            best = *it;
            ++count;
        }
    }
    return count;
}

bool is_derangement(const Permutation& p) {
    for (std::size_t i = 0; i < p.word.size(); ++i)
        if (p.word[i] == static_cast<int>(i) + 1) return false;
    return true;
}

PermutationStats stats(const Permutation& p) {
    return {des_a(p), asc(p), exc(p), anti_exc(p), rlmin(p)};
}

int des_b(const SignedPermutation& p) {
    int d = 0;
    int prev = 0;
    for (int v : p.word) {
        d += prev > v;
        prev = v;
    }
    return d;
}

std::vector<bool> rlmin_mask(const SignedPermutation& p) {
    std::vector<bool> mask(p.word.size(), false);
    int best = p.size() + 1;
    for (std::size_t i = p.word.size(); i-- > 0;) {
        const int m = std::abs(p.word[i]);
        if (m < best) {
            best = m;
            mask[i] = true;
        }
    }
    return mask;
}

std::vector<bool> bar_mask(const SignedPermutation& p) {
    const auto ends = rlmin_mask(p);
    std::vector<bool> in_bar(p.word.size(), false);
    std::size_t start = 0;
    for (std::size_t i = 0; i < p.word.size(); ++i) {
        if (!ends[i]) continue;
        if (p.word[i] < 0)
            for (std::size_t j = start; j <= i; ++j) in_bar[j] = true;
        start = i + 1;
    }
    return in_bar;
}

int bar(const SignedPermutation& p) {
    const auto m = bar_mask(p);
    return static_cast<int>(std::count(m.begin(), m.end(), true));
}

SignedStats stats(const SignedPermutation& p) {
    SignedStats s;
    s.des_b = des_b(p);
    const auto ends = rlmin_mask(p);
    const auto in_bar = bar_mask(p);
    std::vector<int> current;
    for (std::size_t i = 0; i < p.word.size(); ++i) {
        current.push_back(p.word[i]);
        if (ends[i]) {
            ++s.rlmin;
            s.blocks.push_back(std::move(current));
            current.clear();
        }
        (in_bar[i] ? s.bar_set : s.nbar_set).push_back(std::abs(p.word[i]));
    }
    std::sort(s.bar_set.begin(), s.bar_set.end());
    std::sort(s.nbar_set.begin(), s.nbar_set.end());
    s.bar = static_cast<int>(s.bar_set.size());
    return s;
}

std::string encode(const Permutation& p) { return join(p.word); }
std::string encode(const SignedPermutation& p) { return join(p.word); }

Permutation parse_permutation(std::string_view text) { return {parse_ints(text, "permutation")}; }

SignedPermutation parse_signed_permutation(std::string_view text) {
    return {parse_ints(text, "signed permutation")};
}

}  // namespace combi::objects
