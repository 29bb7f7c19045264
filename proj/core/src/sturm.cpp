#include "combi/algebra/sturm.hpp"

#include <stdexcept>
#include <vector>

namespace combi::algebra {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Scales by 1/|lc|: keeps signs, bounds coefficient growth.
void normalize(Dense& p) {
    if (p.empty()) return;
    const Rational lc = abs(p.back());
    for (auto& c : p) c /= lc;
}

Dense remainder(Dense num, const Dense& den) {
    const std::size_t dd = den.size() - 1;
    while (num.size() >= den.size()) {
        const Rational factor = num.back() / den.back();
        const std::size_t shift = num.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) num[shift + i] -= factor * den[i];
        num.pop_back();
        trim(num);
    }
    return num;
}

int sign(const Rational& v) { return sgn(v); }

int variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

SturmReport sturm_real_roots(const QPoly& poly) {
    if (poly.is_zero()) throw std::domain_error("sturm_real_roots(): zero polynomial");
    Dense p = poly.dense(Var::x);
    trim(p);

    SturmReport report;
    report.degree = static_cast<int>(p.size()) - 1;
    if (report.degree == 0) return report;

    Dense dp(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * static_cast<long>(i);

    std::vector<Dense> chain{p, dp};
    normalize(chain[0]);
    normalize(chain[1]);
    while (true) {
        Dense r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        normalize(r);
        chain.push_back(std::move(r));
    }

    std::vector<int> at_neg_inf, at_pos_inf;
    for (const auto& q : chain) {
        const int lead = sign(q.back());
        const bool odd = (q.size() - 1) % 2 == 1;
        at_pos_inf.push_back(lead);
        at_neg_inf.push_back(odd ? -lead : lead);
    }
    report.distinct_real_roots = variations(at_neg_inf) - variations(at_pos_inf);
    report.is_squarefree = chain.back().size() == 1;
    return report;
}

SturmReport sturm_real_roots(const ZPoly& p) { return sturm_real_roots(to_rational(p)); }

}  // namespace combi::algebra
