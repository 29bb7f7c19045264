#include "combi/algebra/number.hpp"

namespace combi {

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer odd_double_factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 1; i <= n; ++i) r *= 2 * i - 1;
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    if (k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace combi
