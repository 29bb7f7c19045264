#include "combi/objects/inversion.hpp"

#include "combi/errors.hpp"

#include <sstream>

namespace combi::objects {

bool validate(const InversionSequence& e) {
    if (e.bounds.size() != e.values.size()) return false;
    for (std::size_t i = 0; i < e.bounds.size(); ++i)
        if (e.bounds[i] <= 0 || e.values[i] < 0 || e.values[i] >= e.bounds[i]) return false;
    return true;
}

int asc(const InversionSequence& e) {
    int a = (!e.values.empty() && e.values[0] > 0) ? 1 : 0;
    for (std::size_t i = 0; i + 1 < e.values.size(); ++i) {
        const long lhs = static_cast<long>(e.values[i]) * e.bounds[i + 1];
        const long rhs = static_cast<long>(e.values[i + 1]) * e.bounds[i];
        a += lhs < rhs;
    }
    return a;
}

std::string encode(const InversionSequence& e) {
    std::string out;
    for (std::size_t i = 0; i < e.values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(e.values[i]);
    }
    out += out.empty() ? "| s =" : " | s =";
    for (int b : e.bounds) out += " " + std::to_string(b);
    return out;
}

namespace {

std::vector<int> read_ints(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) throw ParseError("inversion sequence: malformed entry '" + token + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

InversionSequence parse_inversion_sequence(std::string_view text) {
    const std::string s(text);
    const auto bar = s.find('|');
    if (bar == std::string::npos) throw ParseError("inversion sequence: missing '| s = ...' bound list");
    const auto eq = s.find('=', bar);
    if (eq == std::string::npos || s.substr(bar + 1, eq - bar - 1).find('s') == std::string::npos)
        throw ParseError("inversion sequence: expected 's =' after '|'");
    InversionSequence e{read_ints(s.substr(eq + 1)), read_ints(s.substr(0, bar))};
    if (e.bounds.size() != e.values.size())
        throw ParseError("inversion sequence: value and bound lists differ in length");
    return e;
}

std::vector<int> identity_bounds(int n) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i) s.push_back(i);
    return s;
}

std::vector<int> even_bounds(int n) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i) s.push_back(2 * i);
    return s;
}

std::vector<int> odd_bounds(int n) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i) s.push_back(2 * i - 1);
    return s;
}

}  // namespace combi::objects
