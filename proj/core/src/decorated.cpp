#include "combi/objects/decorated.hpp"

#include "combi/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace combi::objects {

bool validate(const DecoratedPermutation& w) {
    if (w.entries.empty()) return false;
    if (!validate(underlying(w))) return false;
    std::vector<DecoratedEntry> e = w.entries;
    while (e.size() > 1) {
        const auto it = std::max_element(e.begin(), e.end(),
                                         [](const auto& l, const auto& r) { return l.value < r.value; });
        if (it + 1 == e.end()) {
            if (it->circle) return false;
        } else if (it->hat != (it + 1)->hat) {
            return false;
        }
        e.erase(it);
    }
    return e.front().value == 1 && !e.front().circle;
}

Permutation underlying(const DecoratedPermutation& w) {
    Permutation p;
    p.word.reserve(w.entries.size());
    for (const auto& e : w.entries) p.word.push_back(e.value);
    return p;
}

int asc(const DecoratedPermutation& w) {
    int a = 0;
    int prev = 0;
    for (const auto& e : w.entries) {
        a += prev < e.value;
        prev = e.value;
    }
    return a;
}

int hat(const DecoratedPermutation& w) {
    return static_cast<int>(std::count_if(w.entries.begin(), w.entries.end(), [](const auto& e) { return e.hat; }));
}

DecoratedStats stats(const DecoratedPermutation& w) {
    DecoratedStats s;
    s.asc = asc(w);
    for (const auto& e : w.entries)
        if (e.hat) s.hat_values.push_back(e.value);
    std::sort(s.hat_values.begin(), s.hat_values.end());
    s.hat = static_cast<int>(s.hat_values.size());
    return s;
}

std::string encode(const DecoratedPermutation& w) {
    std::string out;
    for (std::size_t i = 0; i < w.entries.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.entries[i].value);
        if (w.entries[i].hat) out += 'h';
        if (w.entries[i].circle) out += 'c';
    }
    return out;
}

DecoratedPermutation parse_decorated(std::string_view text) {
    DecoratedPermutation w;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        std::size_t pos = 0;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos == 0) throw ParseError("decorated permutation: malformed entry '" + token + "'");
        DecoratedEntry e{std::stoi(token.substr(0, pos)), false, false};
        for (; pos < token.size(); ++pos) {
            const char flag = token[pos];
            if (flag == 'h' && !e.hat) e.hat = true;
            else if (flag == 'c' && !e.circle) e.circle = true;
            else throw ParseError("decorated permutation: malformed entry '" + token + "'");
        }
        w.entries.push_back(e);
    }
    return w;
}

}  // namespace combi::objects
