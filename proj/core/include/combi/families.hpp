#pragma once

// Polynomial families and integer sequences computed from their recurrences
// and exponential generating functions.

#include "combi/algebra/poly.hpp"
#include "combi/algebra/series.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace combi::families {

using algebra::QPoly;
using algebra::TruncatedSeries;
using algebra::ZPoly;

/// Integer coefficients of every recurrence, one field per coefficient.
/// The defaults are the recurrences themselves; perturbing a field yields a
/// mutant used to test that the verification suite notices.
struct Recurrences {
    // N(n+1,k) = (same_k*k + same_c) N(n,k) + (prev_n*n + prev_k*k + prev_c) N(n,k-1)
    long n_same_k = 2, n_same_c = 0, n_prev_n = 2, n_prev_k = -2, n_prev_c = 3;
    // C(n,k) = same_k*k C(n-1,k) + (prev_n*n + prev_k*k) C(n-1,k-1)
    long c_same_k = 1, c_prev_n = 2, c_prev_k = -1;
    // <n,k> = (same_k*k + same_c) <n-1,k> + (prev_n*n + prev_k*k) <n-1,k-1>
    long e_same_k = 1, e_same_c = 1, e_prev_n = 1, e_prev_k = -1;
    // A_{n+1} = (const + nx*n*x) A_n + (dx*x + dx2*x^2) A_n'
    long a_const = 1, a_nx = 1, a_dx = 1, a_dx2 = -1;
    // Q_{n+1} = (q*q + nx*n*x) Q_n + (dx*x + dx2*x^2) dQ_n/dx
    long q_q = 1, q_nx = 2, q_dx = 2, q_dx2 = -2;
    // P_{n+1} = (nx*n*x + qy*q*y) P_n + (dx*x + dx2*x^2) dP/dx + (dy*x + dyy*x*y) dP/dy
    long p_nx = 2, p_qy = 1, p_dx = 2, p_dx2 = -2, p_dy = 2, p_dyy = -2;
    // P_{n+1} = qy*q*y P_n + qx*q*x sum_k C(n,k) P_k base^(n-k) A_(n-k)
    long pc_qy = 1, pc_qx = 1, pc_base = 2;
    // R_{n+1} = nx*n*x R_n + (dx*x + dx2*x^2) dR_n/dx + prev*n*x*q R_{n-1}
    long r_nx = 2, r_dx = 2, r_dx2 = -2, r_prev = 2;
    // q_{n+1} = a*n q_n + b*n q_{n-1}
    long qn_a = 2, qn_b = 2;
    // L_{n+1} = (q*q + n*n) L_n
    long l_q = 1, l_n = 2;
    // S_{n+1}(i,j,k) = fix S_n(i-1,j-1,k) + b(j+1) S_n(i,j+1,k-1) + c*k S_n(i,j,k)
    //                  + d(n-j-k+1) S_n(i,j,k-1)
    long s_fix = 1, s_b = 2, s_c = 2, s_d = 2;

    std::vector<std::pair<std::string_view, long*>> fields();
};

/// Rows indexed by n from 0; row n lists the coefficients for k = 0, 1, ...
struct TriangleTable {
    std::string name;
    std::vector<std::vector<Integer>> rows;

    ZPoly polynomial(int n, algebra::Var v = algebra::Var::x) const;
    Integer row_sum(int n) const;
};

TriangleTable n_triangle(int n_max, const Recurrences& r = {});
TriangleTable c_triangle(int n_max, const Recurrences& r = {});
TriangleTable eulerian_triangle(int n_max, const Recurrences& r = {});

ZPoly n_poly(int n, const Recurrences& r = {});
/// x^n N_n(1/x)
ZPoly m_poly(int n, const Recurrences& r = {});
ZPoly eulerian_a(int n, const Recurrences& r = {});
/// Type B Eulerian polynomial by (2,4,...,2n)-inversion sequences.
ZPoly eulerian_b(int n);
ZPoly c_poly(int n, const Recurrences& r = {});
ZPoly q_poly(int n, bool with_q = true, const Recurrences& r = {});

enum class PRoute { recurrence, convolution, table, series, enumeration };
inline constexpr int kMaxEnumerationN = 8;

/// P_n(x,y,q) along one route; throws CapacityError when the route cannot
/// reach n (series beyond the order, enumeration beyond kMaxEnumerationN).
ZPoly p_poly(int n, PRoute route, const Recurrences& r = {}, int series_order = algebra::kDefaultSeriesOrder);

ZPoly r_poly(int n, bool with_q = true, const Recurrences& r = {});
/// C(n,k) q^k R_{n-k}(x,q): derangement part with exactly k fixed points.
ZPoly r_nk(int n, int k, const Recurrences& r = {});
std::vector<Integer> qn_sequence(int n_max, const Recurrences& r = {});
ZPoly l_poly(int n, const Recurrences& r = {});
/// Single-cycle cap polynomial by enumeration (n >= 1).
ZPoly y_poly(int n);
/// Derangement excedance polynomial from its generating function.
ZPoly d_poly(int n);

/// q(q+2)...(q+2n-2)
ZPoly rising_q(int n);
/// 2^n x(x+1)...(x+n-1)
ZPoly signed_rlmin_closed_form(int n);

/// h_0 .. h_{count-1} from the expansion of sqrt(2/(e^{2z}+e^{-2z})).
std::vector<Integer> h_sequence(int count);

/// Upper bound for series orders, COMBI_MAX_ORDER when set.
int max_series_order();

/// Named generating functions: M, N, A, Q, P, d, S, sec, qn, stirling2.
/// Throws CapacityError when order exceeds max_series_order().
TruncatedSeries series_family(std::string_view id, int order);
std::vector<std::string_view> series_ids();
std::map<std::string, TruncatedSeries, std::less<>> series_families(int order);

}  // namespace combi::families
