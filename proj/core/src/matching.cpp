#include "combi/objects/matching.hpp"

#include "combi/errors.hpp"

#include <algorithm>
#include <cctype>

namespace combi::objects {

bool validate(const PerfectMatching& m) {
    const int n = m.size();
    std::vector<bool> seen(static_cast<std::size_t>(2 * n) + 1, false);
    int prev_first = 0;
    for (const auto& [i, j] : m.blocks) {
        if (i >= j || i <= prev_first || i < 1 || j > 2 * n) return false;
        if (seen[i] || seen[j]) return false;
        seen[i] = seen[j] = true;
        prev_first = i;
    }
    return true;
}

void standardize(PerfectMatching& m) {
    for (auto& b : m.blocks)
        if (b.first > b.second) std::swap(b.first, b.second);
    std::sort(m.blocks.begin(), m.blocks.end());
}

MatchingStats stats(const PerfectMatching& m) {
    MatchingStats s;
    for (const auto& b : m.blocks) (is_marked(b) ? s.el : s.ol) += 1;
    return s;
}

std::string encode(const PerfectMatching& m) {
    std::string out;
    for (const auto& [i, j] : m.blocks) out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return out;
}

PerfectMatching parse_matching(std::string_view text) {
    PerfectMatching m;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("matching: expected an integer at offset " + std::to_string(start));
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("matching: expected '") + c + "' at offset " + std::to_string(pos));
        ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        expect('(');
        const int a = read_int();
        expect(',');
        const int b = read_int();
        expect(')');
        m.blocks.emplace_back(a, b);
        skip_ws();
    }
    return m;
}

namespace {

struct PairedSearch {
    std::vector<int> partner;
    long long count = 0;

    static int sibling(int i) { return (i % 2 == 1) ? i + 1 : i - 1; }

    bool consistent(int i) const {
        const int s = sibling(i);
        if (partner[s] == 0) return true;
        return (partner[i] > i) == (partner[s] > s);
    }

    void run(int free_left) {
        if (free_left == 0) {
            ++count;
            return;
        }
        int u = 1;
        while (partner[u] != 0) ++u;
        for (int v = u + 1; v < static_cast<int>(partner.size()); ++v) {
            if (partner[v] != 0) continue;
            partner[u] = v;
            partner[v] = u;
            if (consistent(u) && consistent(v)) run(free_left - 2);
            partner[u] = partner[v] = 0;
        }
    }
};

}  // namespace

long long count_paired_excedance_involutions(int n) {
    if (n < 0) throw std::out_of_range("count_paired_excedance_involutions(): negative n");
    if (n > kMaxPairedInvolutionN)
        throw CapacityError("count_paired_excedance_involutions(): n = " + std::to_string(n) +
                            " exceeds exhaustive bound " + std::to_string(kMaxPairedInvolutionN));
    PairedSearch search;
    search.partner.assign(static_cast<std::size_t>(4 * n) + 1, 0);
    search.run(4 * n);
    return search.count;
}

}  // namespace combi::objects
