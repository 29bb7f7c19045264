#include "combi/bijections.hpp"

#include "combi/errors.hpp"
#include "combi/objects/tallies.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace combi::bijections {

namespace {

using objects::is_marked;
using Block = std::pair<int, int>;

struct Replay {
    PerfectMatching first;
    PerfectMatching second;
    std::set<int> index_set;
};

enum class Category { ascent_top, descent_bottom };

// Splits the p-th block (1-based, standard order) whose markedness equals
// `marked` into (a, lo),(b, hi), or (a, hi),(b, lo) when `swap` is set.
void split_block(PerfectMatching& m, bool marked, int p, int lo, int hi, bool swap) {
    int seen = 0;
    for (std::size_t i = 0; i < m.blocks.size(); ++i) {
        if (is_marked(m.blocks[i]) != marked) continue;
        if (++seen != p) continue;
        const auto [a, b] = m.blocks[i];
        m.blocks[i] = {a, swap ? hi : lo};
        m.blocks.emplace_back(b, swap ? lo : hi);
        objects::standardize(m);
        return;
    }
    throw std::logic_error("insertion replay: no block number " + std::to_string(p) + " of the requested kind");
}

void append_block(PerfectMatching& m, int lo, int hi) {
    m.blocks.emplace_back(lo, hi);
    objects::standardize(m);
}

MatchingTriple finish(Replay&& r) {
    return MatchingTriple{std::move(r.first), std::move(r.second), std::move(r.index_set)};
}

}  // namespace

bool validate(const MatchingTriple& t) {
    if (!objects::validate(t.first) || !objects::validate(t.second)) return false;
    if (t.k() != t.first.size()) return false;
    const int n = t.n();
    for (int i : t.index_set)
        if (i < 1 || i > n) return false;
    return true;
}

std::string encode(const MatchingTriple& t) {
    std::string out = "[" + objects::encode(t.first) + "] [" + objects::encode(t.second) + "] {";
    bool first = true;
    for (int i : t.index_set) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

MatchingTriple parse_triple(std::string_view text) {
    auto section = [&](std::size_t& pos, char open, char close) -> std::string_view {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size() || text[pos] != open)
            throw ParseError(std::string("triple: expected '") + open + "' at offset " + std::to_string(pos));
        const std::size_t end = text.find(close, pos);
        if (end == std::string_view::npos) throw ParseError(std::string("triple: missing '") + close + "'");
        const auto inner = text.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        return inner;
    };
    std::size_t pos = 0;
    MatchingTriple t;
    t.first = objects::parse_matching(section(pos, '[', ']'));
    t.second = objects::parse_matching(section(pos, '[', ']'));
    std::string set_text(section(pos, '{', '}'));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("triple: trailing text at offset " + std::to_string(pos));
    for (char& c : set_text)
        if (c == ',') c = ' ';
    std::size_t i = 0;
    while (i < set_text.size()) {
        if (std::isspace(static_cast<unsigned char>(set_text[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < set_text.size() && std::isdigit(static_cast<unsigned char>(set_text[i]))) ++i;
        if (start == i) throw ParseError("triple: malformed index set");
        t.index_set.insert(std::stoi(set_text.substr(start, i - start)));
    }
    if (!validate(t)) throw ParseError("triple: not a valid matching triple");
    return t;
}

MatchingTriple phi_map(const DecoratedPermutation& w) {
    if (!objects::validate(w)) throw std::invalid_argument("phi_map(): invalid decorated permutation");
    const int n = w.size();
    Replay r;
    std::vector<objects::DecoratedEntry> v;  // the word restricted to values < m
    v.reserve(static_cast<std::size_t>(n));
    int k = 0;
    for (int m = 1; m <= n; ++m) {
        // Position of m among the entries of value <= m, and its successor there.
        std::size_t slot = 0;
        const objects::DecoratedEntry* inserted = nullptr;
        const objects::DecoratedEntry* successor = nullptr;
        for (const auto& e : w.entries) {
            if (e.value > m) continue;
            if (e.value == m) {
                inserted = &e;
            } else if (inserted == nullptr) {
                ++slot;
            } else if (successor == nullptr) {
                successor = &e;
            }
        }
        const int s2_lo = 2 * m - 2 * k - 1;
        const int s1_lo = 2 * k + 1;
        if (successor == nullptr) {
            if (inserted->hat) {
                append_block(r.first, s1_lo, s1_lo + 1);
                r.index_set.insert(m);
            } else {
                append_block(r.second, s2_lo, s2_lo + 1);
            }
        } else {
            auto category_at = [&](std::size_t i) {
                const int before = i == 0 ? 0 : v[i - 1].value;
                return before < v[i].value ? Category::ascent_top : Category::descent_bottom;
            };
            const Category cat = category_at(slot);
            const bool hatted = v[slot].hat;
            int p = 0;
            for (std::size_t i = 0; i <= slot; ++i)
                if (v[i].hat == hatted && category_at(i) == cat) ++p;
            const bool marked = cat == Category::ascent_top;
            if (hatted) {
                split_block(r.first, marked, p, s1_lo, s1_lo + 1, inserted->circle);
                r.index_set.insert(m);
            } else {
                split_block(r.second, marked, p, s2_lo, s2_lo + 1, inserted->circle);
            }
        }
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(slot), *inserted);
        if (inserted->hat) ++k;
    }
    return finish(std::move(r));
}

MatchingTriple psi_map(const SignedPermutation& pi) {
    if (!objects::validate(pi)) throw std::invalid_argument("psi_map(): invalid signed permutation");
    const int n = pi.size();
    Replay r;
    SignedPermutation v;
    v.word.reserve(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
        std::size_t slot = 0;
        int inserted = 0;
        bool has_successor = false;
        for (int e : pi.word) {
            if (std::abs(e) > m) continue;
            if (std::abs(e) == m) {
                inserted = e;
            } else if (inserted == 0) {
                ++slot;
            } else {
                has_successor = true;
                break;
            }
        }
        const auto in_bar = objects::bar_mask(v);
        int k = 0;
        for (bool b : in_bar) k += b ? 1 : 0;
        const int t2_lo = 2 * m - 2 * k - 1;
        const int t1_lo = 2 * k + 1;
        const bool negative = inserted < 0;
        if (!has_successor) {
            if (negative) {
                append_block(r.first, t1_lo, t1_lo + 1);
                r.index_set.insert(m);
            } else {
                append_block(r.second, t2_lo, t2_lo + 1);
            }
        } else {
            auto category_at = [&](std::size_t i) {
                const int before = i == 0 ? 0 : v.word[i - 1];
                return before < v.word[i] ? Category::ascent_top : Category::descent_bottom;
            };
            const Category cat = category_at(slot);
            const bool barred = in_bar[slot];
            int p = 0;
            for (std::size_t i = 0; i <= slot; ++i)
                if (in_bar[i] == barred && category_at(i) == cat) ++p;
            if (barred) {
                split_block(r.first, cat == Category::descent_bottom, p, t1_lo, t1_lo + 1, negative);
                r.index_set.insert(m);
            } else {
                split_block(r.second, cat == Category::ascent_top, p, t2_lo, t2_lo + 1, negative);
            }
        }
        v.word.insert(v.word.begin() + static_cast<std::ptrdiff_t>(slot), inserted);
    }
    return finish(std::move(r));
}

Integer image_size(int n, int k) {
    if (k < 0 || k > n) return 0;
    return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
           odd_double_factorial(static_cast<unsigned>(k)) * odd_double_factorial(static_cast<unsigned>(n - k));
}

namespace {

// Packs a triple with n <= 8 into 64 bits: the larger endpoint of every block
// (5 bits each, first matching then second) and the index set as a bitmask.
std::uint64_t compact_key(const MatchingTriple& t) {
    std::uint64_t key = 0;
    for (const auto* m : {&t.first, &t.second})
        for (const auto& b : m->blocks) key = (key << 5U) | static_cast<std::uint64_t>(b.second);
    std::uint64_t mask = 0;
    for (int i : t.index_set) mask |= std::uint64_t{1} << static_cast<unsigned>(i - 1);
    return (key << 8U) | mask;
}

struct Harness {
    int n;
    BijectionReport report;
    std::unordered_set<std::uint64_t> images;
    std::vector<long long> image_count;
    std::vector<objects::Tally> weights;

    explicit Harness(int size)
        : n(size), image_count(static_cast<std::size_t>(size) + 1, 0), weights(static_cast<std::size_t>(size) + 1) {
        report.n = size;
    }

    void record(const std::string& object, const MatchingTriple& image, int k, const std::set<int>& expected_set,
                int domain_weight, int image_weight) {
        ++report.domain_size;
        weights[static_cast<std::size_t>(k)].add(algebra::Var::x, domain_weight);
        auto fail = [&](bool& flag) {
            flag = false;
            if (!report.counterexample) report.counterexample.emplace(object, encode(image));
        };
        if (!validate(image) || image.n() != n || image.k() != k || image.index_set != expected_set) {
            fail(report.image_complete);
            return;
        }
        if (domain_weight != image_weight) fail(report.weight_preserving);
        if (!images.insert(compact_key(image)).second) {
            fail(report.injective);
            return;
        }
        ++image_count[static_cast<std::size_t>(k)];
    }

    BijectionReport finish() {
        for (int k = 0; k <= n; ++k) {
            if (image_size(n, k) != Integer(static_cast<long>(image_count[static_cast<std::size_t>(k)]))) {
                report.image_complete = false;
                if (!report.counterexample)
                    report.counterexample.emplace("k = " + std::to_string(k),
                                                  std::to_string(image_count[static_cast<std::size_t>(k)]) +
                                                      " distinct images, expected " + image_size(n, k).get_str());
            }
        }
        for (const auto& t : weights) report.weight_by_k.push_back(t.polynomial());
        return std::move(report);
    }
};

}  // namespace

BijectionReport verify_bijection(MapId map, int n) {
    if (n < 1) throw std::out_of_range("verify_bijection(): n must be at least 1");
    if (n > kMaxBijectionN)
        throw CapacityError("verify_bijection(): n = " + std::to_string(n) + " exceeds exhaustive bound " +
                            std::to_string(kMaxBijectionN));
    Harness h(n);
    if (map == MapId::phi) {
        objects::for_each_decorated(n, [&](const DecoratedPermutation& w) {
            const auto image = phi_map(w);
            const auto s = objects::stats(w);
            const std::set<int> expected(s.hat_values.begin(), s.hat_values.end());
            h.record(objects::encode(w), image, s.hat, expected, s.asc,
                     objects::stats(image.first).el + objects::stats(image.second).el);
        });
    } else {
        objects::for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            const auto image = psi_map(pi);
            const auto s = objects::stats(pi);
            const std::set<int> expected(s.bar_set.begin(), s.bar_set.end());
            h.record(objects::encode(pi), image, s.bar, expected, s.des_b,
                     objects::stats(image.first).el + objects::stats(image.second).ol);
        });
    }
    return h.finish();
}

}  // namespace combi::bijections
