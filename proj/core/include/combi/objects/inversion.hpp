#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace combi::objects {

/// An s-inversion sequence: 0 <= values[i] < bounds[i].
struct InversionSequence {
    std::vector<int> bounds;
    std::vector<int> values;
    friend bool operator==(const InversionSequence&, const InversionSequence&) = default;
};

bool validate(const InversionSequence& e);

/// #{i : e_i/s_i < e_{i+1}/s_{i+1}} plus one when e_1 > 0; ratios compared exactly.
int asc(const InversionSequence& e);

std::string encode(const InversionSequence& e);
/// Parses "e_1 ... e_n | s = s_1 ... s_n".
InversionSequence parse_inversion_sequence(std::string_view text);

std::vector<int> identity_bounds(int n);  ///< (1, 2, ..., n)
std::vector<int> even_bounds(int n);      ///< (2, 4, ..., 2n)
std::vector<int> odd_bounds(int n);       ///< (1, 3, ..., 2n-1)

/// Visits every sequence of I_n^(s) in lexicographic order.
template <class F>
void for_each_inversion_sequence(const std::vector<int>& bounds, F&& f) {
    InversionSequence e{bounds, std::vector<int>(bounds.size(), 0)};
    for (int b : bounds)
        if (b <= 0) return;
    while (true) {
        f(std::as_const(e));
        std::size_t i = bounds.size();
        while (i > 0) {
            --i;
            if (++e.values[i] < bounds[i]) break;
            e.values[i] = 0;
            if (i == 0) return;
        }
        if (bounds.empty()) return;
    }
}

}  // namespace combi::objects
