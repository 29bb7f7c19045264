#pragma once

#include "combi/algebra/poly.hpp"

namespace combi::algebra {

struct SturmReport {
    int degree = 0;
    int distinct_real_roots = 0;
    bool is_squarefree = true;

    /// Every root is real and simple.
    bool all_roots_real_simple() const { return is_squarefree && distinct_real_roots == degree; }
};

/// Counts distinct real roots of a nonzero univariate polynomial in x via sign
/// variations of its Sturm chain at -inf and +inf. Squarefreeness is read off
/// the chain's last element, which is gcd(p, p') up to a constant.
SturmReport sturm_real_roots(const ZPoly& p);
SturmReport sturm_real_roots(const QPoly& p);

}  // namespace combi::algebra
