#include "combi/objects/stirling.hpp"

#include "combi/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace combi::objects {

int CycleStirling::order() const {
    std::size_t total = 0;
    for (const auto& c : cycles) total += c.size();
    return static_cast<int>(total / 2);
}

std::vector<int> reduce(const std::vector<int>& word) {
    std::vector<int> values = word;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> out;
    out.reserve(word.size());
    for (int v : word)
        out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin()) + 1);
    return out;
}

bool is_stirling_word(const std::vector<int>& word) {
    if (word.size() % 2 != 0) return false;
    const int n = static_cast<int>(word.size()) / 2;
    std::vector<int> first(static_cast<std::size_t>(n) + 1, -1), count(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int v = word[i];
        if (v < 1 || v > n) return false;
        if (++count[v] > 2) return false;
        if (first[v] < 0) {
            first[v] = static_cast<int>(i);
        } else {
            for (std::size_t j = static_cast<std::size_t>(first[v]) + 1; j < i; ++j)
                if (word[j] <= v) return false;
        }
    }
    return true;
}

bool validate(const StirlingWord& w) { return is_stirling_word(w.word); }

bool validate(const CycleStirling& s) {
    const int n = s.order();
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1), count(static_cast<std::size_t>(n) + 1, 0);
    int prev_min = 0;
    for (std::size_t c = 0; c < s.cycles.size(); ++c) {
        const auto& cyc = s.cycles[c];
        if (cyc.empty()) return false;
        const int lo = *std::min_element(cyc.begin(), cyc.end());
        if (cyc.front() != lo || lo <= prev_min) return false;
        prev_min = lo;
        for (int v : cyc) {
            if (v < 1 || v > n) return false;
            if (owner[v] >= 0 && owner[v] != static_cast<int>(c)) return false;
            owner[v] = static_cast<int>(c);
            if (++count[v] > 2) return false;
        }
        if (!is_stirling_word(reduce(cyc))) return false;
    }
    for (int v = 1; v <= n; ++v)
        if (count[v] != 2) return false;
    return true;
}

StirlingStats stats(const StirlingWord& w) {
    StirlingStats s;
    const auto& a = w.word;
    const std::size_t len = a.size();
    const int n = static_cast<int>(len) / 2;
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    int distinct = 0, doubled = 0, lo = n + 1;
    for (std::size_t i = 0; i < len; ++i) {
        const int prev = i == 0 ? 0 : a[i - 1];
        const int next = i + 1 < len ? a[i + 1] : 0;
        if (i + 1 < len && prev < a[i] && a[i] == next) ++s.ap;

        const int v = a[i];
        if (count[v]++ == 0) ++distinct;
        else ++doubled;
        lo = std::min(lo, v);
        if (a[i] > next) ++s.descents;
        // A closed prefix followed by a value below all of it ends a descent interval.
        if (distinct == doubled && next < lo) ++s.desi;
    }
    return s;
}

CycleStirlingStats stats(const CycleStirling& s) {
    CycleStirlingStats out;
    out.cyc = static_cast<int>(s.cycles.size());
    for (const auto& c : s.cycles) {
        if (c.size() == 2) ++out.fix;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            if (c[i] == c[i + 1]) ++out.cplat;
            if (c[i] < c[i + 1]) ++out.casc;
            if (i >= 1 && c[i - 1] < c[i] && c[i] == c[i + 1]) ++out.cap;
        }
    }
    return out;
}

std::string encode(const StirlingWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.word.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.word[i]);
    }
    return out;
}

std::string encode(const CycleStirling& s) {
    std::string out;
    for (const auto& c : s.cycles) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::istringstream in{std::string(text)};
    std::vector<int> out;
    std::string token;
    while (in >> token) {
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](char ch) {
                return std::isdigit(static_cast<unsigned char>(ch));
            }))
            throw ParseError(std::string("malformed ") + what + " entry '" + token + "'");
        out.push_back(std::stoi(token));
    }
    return out;
}

}  // namespace

StirlingWord parse_stirling_word(std::string_view text) { return {parse_int_list(text, "Stirling word")}; }

CycleStirling parse_cycle_stirling(std::string_view text) {
    CycleStirling s;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(') throw ParseError("cycle Stirling: expected '(' at offset " + std::to_string(pos));
        const std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos) throw ParseError("cycle Stirling: unterminated cycle");
        s.cycles.push_back(parse_int_list(text.substr(pos + 1, close - pos - 1), "cycle"));
        pos = close + 1;
    }
    return s;
}

}  // namespace combi::objects
