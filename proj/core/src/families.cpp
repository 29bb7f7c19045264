#include "combi/families.hpp"

#include "combi/errors.hpp"
#include "combi/objects/inversion.hpp"
#include "combi/objects/tallies.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

namespace combi::families {

using algebra::Exponents;
using algebra::index;
using algebra::Var;
using algebra::var;

std::vector<std::pair<std::string_view, long*>> Recurrences::fields() {
    return {
        {"N.same_k", &n_same_k}, {"N.same_c", &n_same_c}, {"N.prev_n", &n_prev_n},  {"N.prev_k", &n_prev_k},
        {"N.prev_c", &n_prev_c}, {"C.same_k", &c_same_k}, {"C.prev_n", &c_prev_n},  {"C.prev_k", &c_prev_k},
        {"E.same_k", &e_same_k}, {"E.same_c", &e_same_c}, {"E.prev_n", &e_prev_n},  {"E.prev_k", &e_prev_k},
        {"A.const", &a_const},   {"A.nx", &a_nx},         {"A.dx", &a_dx},          {"A.dx2", &a_dx2},
        {"Q.q", &q_q},           {"Q.nx", &q_nx},         {"Q.dx", &q_dx},          {"Q.dx2", &q_dx2},
        {"P.nx", &p_nx},         {"P.qy", &p_qy},         {"P.dx", &p_dx},          {"P.dx2", &p_dx2},
        {"P.dy", &p_dy},         {"P.dyy", &p_dyy},       {"Pconv.qy", &pc_qy},     {"Pconv.qx", &pc_qx},
        {"Pconv.base", &pc_base}, {"R.nx", &r_nx},        {"R.dx", &r_dx},          {"R.dx2", &r_dx2},
        {"R.prev", &r_prev},     {"qn.a", &qn_a},         {"qn.b", &qn_b},          {"L.q", &l_q},
        {"L.n", &l_n},           {"S.fix", &s_fix},       {"S.b", &s_b},            {"S.c", &s_c},
        {"S.d", &s_d},
    };
}

ZPoly TriangleTable::polynomial(int n, Var v) const {
    const auto& row = rows.at(static_cast<std::size_t>(n));
    return ZPoly::from_dense(v, row);
}

Integer TriangleTable::row_sum(int n) const {
    Integer s = 0;
    for (const auto& c : rows.at(static_cast<std::size_t>(n))) s += c;
    return s;
}

namespace {

Integer at(const std::vector<Integer>& row, long k) {
    if (k < 0 || k >= static_cast<long>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
}

void trim(std::vector<Integer>& row) {
    while (row.size() > 1 && row.back() == 0) row.pop_back();
}

void require_nonnegative(int n, const char* what) {
    if (n < 0) throw std::out_of_range(std::string(what) + ": n must be nonnegative");
}

ZPoly zx(long c0, long c1, long c2 = 0) {
    return ZPoly(c0) + ZPoly(c1) * var(Var::x) + ZPoly(c2) * var(Var::x, 2);
}

}  // namespace

TriangleTable n_triangle(int n_max, const Recurrences& r) {
    require_nonnegative(n_max, "n_triangle");
    TriangleTable t{"N", {{1}}};
    if (n_max >= 1) t.rows.push_back({0, 1});
    for (long n = 1; n < n_max; ++n) {
        const auto& prev = t.rows.back();
        std::vector<Integer> row(static_cast<std::size_t>(n) + 2);
        for (long k = 0; k <= n + 1; ++k)
            row[static_cast<std::size_t>(k)] = (r.n_same_k * k + r.n_same_c) * at(prev, k) +
                                               (r.n_prev_n * n + r.n_prev_k * k + r.n_prev_c) * at(prev, k - 1);
        trim(row);
        t.rows.push_back(std::move(row));
    }
    return t;
}

TriangleTable c_triangle(int n_max, const Recurrences& r) {
    require_nonnegative(n_max, "c_triangle");
    TriangleTable t{"C", {{1}}};
    if (n_max >= 1) t.rows.push_back({0, 1});
    for (long n = 2; n <= n_max; ++n) {
        const auto& prev = t.rows.back();
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k <= n; ++k)
            row[static_cast<std::size_t>(k)] =
                (r.c_same_k * k) * at(prev, k) + (r.c_prev_n * n + r.c_prev_k * k) * at(prev, k - 1);
        trim(row);
        t.rows.push_back(std::move(row));
    }
    return t;
}

TriangleTable eulerian_triangle(int n_max, const Recurrences& r) {
    require_nonnegative(n_max, "eulerian_triangle");
    TriangleTable t{"Eulerian", {{1}}};
    for (long n = 1; n <= n_max; ++n) {
        const auto& prev = t.rows.back();
        std::vector<Integer> row(static_cast<std::size_t>(n));
        for (long k = 0; k < n; ++k)
            row[static_cast<std::size_t>(k)] = (r.e_same_k * k + r.e_same_c) * at(prev, k) +
                                               (r.e_prev_n * n + r.e_prev_k * k) * at(prev, k - 1);
        trim(row);
        t.rows.push_back(std::move(row));
    }
    return t;
}

ZPoly n_poly(int n, const Recurrences& r) { return n_triangle(n, r).polynomial(n); }

ZPoly m_poly(int n, const Recurrences& r) { return algebra::poly_reverse(n_poly(n, r), n); }

ZPoly eulerian_a(int n, const Recurrences& r) {
    require_nonnegative(n, "eulerian_a");
    ZPoly a(1L);
    const ZPoly dx = zx(0, r.a_dx, r.a_dx2);
    for (long m = 0; m < n; ++m) a = zx(r.a_const, r.a_nx * m) * a + dx * a.derivative(Var::x);
    return a;
}

ZPoly eulerian_b(int n) {
    require_nonnegative(n, "eulerian_b");
    if (n > kMaxEnumerationN)
        throw CapacityError("eulerian_b(): enumeration bound is n <= " + std::to_string(kMaxEnumerationN));
    return objects::inversion_asc_polynomial(objects::even_bounds(n));
}

ZPoly c_poly(int n, const Recurrences& r) { return c_triangle(n, r).polynomial(n); }

ZPoly q_poly(int n, bool with_q, const Recurrences& r) {
    require_nonnegative(n, "q_poly");
    ZPoly qp(1L);
    const ZPoly dx = zx(0, r.q_dx, r.q_dx2);
    for (long m = 0; m < n; ++m)
        qp = (ZPoly(r.q_q) * var(Var::q) + ZPoly(r.q_nx * m) * var(Var::x)) * qp + dx * qp.derivative(Var::x);
    return with_q ? qp : qp.evaluate(Var::q, 1);
}

namespace {

ZPoly p_by_recurrence(int n, const Recurrences& r) {
    ZPoly p(1L);
    const ZPoly dx = zx(0, r.p_dx, r.p_dx2);
    const ZPoly dy = ZPoly(r.p_dy) * var(Var::x) + ZPoly(r.p_dyy) * var(Var::x) * var(Var::y);
    for (long m = 0; m < n; ++m)
        p = (ZPoly(r.p_nx * m) * var(Var::x) + ZPoly(r.p_qy) * var(Var::q) * var(Var::y)) * p +
            dx * p.derivative(Var::x) + dy * p.derivative(Var::y);
    return p;
}

ZPoly p_by_convolution(int n, const Recurrences& r) {
    std::vector<ZPoly> p{ZPoly(1L)};
    std::vector<ZPoly> a;
    for (int m = 0; m <= n; ++m) a.push_back(eulerian_a(m, r));
    const ZPoly qy = ZPoly(r.pc_qy) * var(Var::q) * var(Var::y);
    const ZPoly qx = ZPoly(r.pc_qx) * var(Var::q) * var(Var::x);
    for (int m = 0; m < n; ++m) {
        ZPoly sum;
        Integer power = 1;
        for (int k = m - 1; k >= 0; --k) {
            power *= r.pc_base;
            sum += p[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(m - k)] *
                   ZPoly(Integer(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)) * power));
        }
        p.push_back(qy * p.back() + qx * sum);
    }
    return p.back();
}

// Terms q^i y^j x^k of the running polynomial carry the counts S_n(i, j, k).
ZPoly p_by_table(int n, const Recurrences& r) {
    ZPoly s(1L);
    for (long m = 0; m < n; ++m) {
        ZPoly next;
        for (const auto& [e, c] : s.terms()) {
            const long i = e[index(Var::q)];
            const long j = e[index(Var::y)];
            const long k = e[index(Var::x)];
            auto put = [&](long ti, long tj, long tk, const Integer& factor) {
                Exponents f{};
                f[index(Var::q)] = static_cast<int>(ti);
                f[index(Var::y)] = static_cast<int>(tj);
                f[index(Var::x)] = static_cast<int>(tk);
                next.add_term(f, Integer(c * factor));
            };
            put(i + 1, j + 1, k, r.s_fix);
            if (j > 0) put(i, j - 1, k + 1, Integer(r.s_b * j));
            put(i, j, k, Integer(r.s_c * k));
            put(i, j, k + 1, Integer(r.s_d * (m - j - (k + 1) + 1)));
        }
        s = std::move(next);
    }
    return s;
}

}  // namespace

ZPoly p_poly(int n, PRoute route, const Recurrences& r, int series_order) {
    require_nonnegative(n, "p_poly");
    switch (route) {
        case PRoute::recurrence: return p_by_recurrence(n, r);
        case PRoute::convolution: return p_by_convolution(n, r);
        case PRoute::table: return p_by_table(n, r);
        case PRoute::series:
            if (n > series_order)
                throw CapacityError("p_poly(): n = " + std::to_string(n) + " exceeds series order " +
                                    std::to_string(series_order));
            return algebra::to_integer(algebra::egf_coefficient(series_family("P", series_order), n));
        case PRoute::enumeration:
            if (n > kMaxEnumerationN)
                throw CapacityError("p_poly(): enumeration bound is n <= " + std::to_string(kMaxEnumerationN));
            return objects::cycle_cap_fix_cyc_polynomial(n);
    }
    throw std::logic_error("unhandled route");
}

ZPoly r_poly(int n, bool with_q, const Recurrences& r) {
    require_nonnegative(n, "r_poly");
    ZPoly prev(1L);
    ZPoly cur;
    if (n == 0) return prev;
    const ZPoly dx = zx(0, r.r_dx, r.r_dx2);
    for (long m = 1; m < n; ++m) {
        ZPoly next = ZPoly(r.r_nx * m) * var(Var::x) * cur + dx * cur.derivative(Var::x) +
                     ZPoly(r.r_prev * m) * var(Var::x) * var(Var::q) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return with_q ? cur : cur.evaluate(Var::q, 1);
}

ZPoly r_nk(int n, int k, const Recurrences& r) {
    if (k < 0 || k > n) return {};
    return ZPoly(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) * var(Var::q, k) * r_poly(n - k, true, r);
}

std::vector<Integer> qn_sequence(int n_max, const Recurrences& r) {
    require_nonnegative(n_max, "qn_sequence");
    std::vector<Integer> q{1, 0};
    for (long n = 1; static_cast<long>(q.size()) <= n_max; ++n)
        q.push_back(Integer(r.qn_a * n) * q[static_cast<std::size_t>(n)] +
                    Integer(r.qn_b * n) * q[static_cast<std::size_t>(n - 1)]);
    q.resize(static_cast<std::size_t>(n_max) + 1);
    return q;
}

ZPoly l_poly(int n, const Recurrences& r) {
    require_nonnegative(n, "l_poly");
    ZPoly l(1L);
    for (long m = 0; m < n; ++m) l = (ZPoly(r.l_q) * var(Var::q) + ZPoly(r.l_n * m)) * l;
    return l;
}

ZPoly y_poly(int n) {
    if (n < 1) throw std::out_of_range("y_poly(): n must be at least 1");
    if (n > kMaxEnumerationN)
        throw CapacityError("y_poly(): enumeration bound is n <= " + std::to_string(kMaxEnumerationN));
    return objects::one_cycle_cap_polynomial(n);
}

ZPoly d_poly(int n) {
    require_nonnegative(n, "d_poly");
    return algebra::to_integer(algebra::egf_coefficient(series_family("d", std::max(n, 1)), n));
}

ZPoly rising_q(int n) {
    ZPoly p(1L);
    for (int i = 0; i < n; ++i) p *= var(Var::q) + ZPoly(2L * i);
    return p;
}

ZPoly signed_rlmin_closed_form(int n) {
    ZPoly p(Integer(Integer(1) << static_cast<unsigned>(n)));
    for (int i = 0; i < n; ++i) p *= var(Var::x) + ZPoly(static_cast<long>(i));
    return p;
}

namespace {

constexpr int kBuiltinMaxOrder = 12;

QPoly qx(long c0, long c1) { return algebra::to_rational(zx(c0, c1)); }

TruncatedSeries exp_linear(const QPoly& c, int order) {
    return algebra::series_exp(TruncatedSeries::linear(c, order));
}

TruncatedSeries sec_root(int order) {
    const auto cosh_double = exp_linear(QPoly(2L), order) + exp_linear(QPoly(-2L), order);
    return algebra::series_sqrt(algebra::series_divide(TruncatedSeries::constant(QPoly(2L), order), cosh_double));
}

TruncatedSeries inverse_sqrt_1m2z(int order) {
    const auto base = TruncatedSeries::constant(QPoly(1L), order) + TruncatedSeries::linear(QPoly(-2L), order);
    return algebra::series_divide(TruncatedSeries::constant(QPoly(1L), order), algebra::series_sqrt(base));
}

TruncatedSeries build_m(int order) {
    // sqrt((x-1) / (x - e^{2z(x-1)}))
    const auto num = TruncatedSeries::constant(qx(-1, 1), order);
    const auto den = TruncatedSeries::constant(qx(0, 1), order) - exp_linear(qx(-2, 2), order);
    return algebra::series_sqrt(algebra::series_divide(num, den));
}

}  // namespace

int max_series_order() {
    if (const char* env = std::getenv("COMBI_MAX_ORDER")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > kBuiltinMaxOrder && v <= 64) return static_cast<int>(v);
    }
    return kBuiltinMaxOrder;
}

std::vector<std::string_view> series_ids() { return {"M", "N", "A", "Q", "P", "d", "S", "sec", "qn", "stirling2"}; }

TruncatedSeries series_family(std::string_view id, int order) {
    if (order < 0) throw std::out_of_range("series_family(): negative order");
    if (order > max_series_order())
        throw CapacityError("series_family(): order " + std::to_string(order) + " exceeds maximum " +
                            std::to_string(max_series_order()) + " (raise COMBI_MAX_ORDER)");
    using algebra::series_divide;
    using algebra::series_sqrt;
    const auto one = TruncatedSeries::constant(QPoly(1L), order);
    if (id == "M") return build_m(order);
    if (id == "N") {
        // sqrt((1-x) / (1 - x e^{2z(1-x)}))
        const auto num = TruncatedSeries::constant(qx(1, -1), order);
        const auto den = one - exp_linear(qx(2, -2), order).scaled(qx(0, 1));
        return series_sqrt(series_divide(num, den));
    }
    if (id == "A") {
        // (1-x) / (1 - x e^{z(1-x)})
        const auto num = TruncatedSeries::constant(qx(1, -1), order);
        const auto den = one - exp_linear(qx(1, -1), order).scaled(qx(0, 1));
        return series_divide(num, den);
    }
    if (id == "Q") return algebra::series_pow_symbolic(build_m(order), Var::q);
    if (id == "P") {
        const QPoly shift = algebra::to_rational(var(Var::q) * (var(Var::y) - ZPoly(1L)));
        return exp_linear(shift, order) * series_family("Q", order);
    }
    if (id == "d") {
        // (1-x) / (e^{xz} - x e^z)
        const auto num = TruncatedSeries::constant(qx(1, -1), order);
        const auto den = exp_linear(qx(0, 1), order) - exp_linear(QPoly(1L), order).scaled(qx(0, 1));
        return series_divide(num, den);
    }
    if (id == "S") {
        // sqrt((x-1) / (x e^{2z} - e^{2xz}))
        const auto num = TruncatedSeries::constant(qx(-1, 1), order);
        const auto den = exp_linear(QPoly(2L), order).scaled(qx(0, 1)) - exp_linear(qx(0, 2), order);
        return series_sqrt(series_divide(num, den));
    }
    if (id == "sec") return sec_root(order);
    if (id == "qn") return exp_linear(QPoly(-1L), order) * inverse_sqrt_1m2z(order);
    if (id == "stirling2") return inverse_sqrt_1m2z(order);
    throw UsageError("unknown series id '" + std::string(id) + "'");
}

std::map<std::string, TruncatedSeries, std::less<>> series_families(int order) {
    std::map<std::string, TruncatedSeries, std::less<>> out;
    for (auto id : series_ids()) out.emplace(std::string(id), series_family(id, order));
    return out;
}

std::vector<Integer> h_sequence(int count) {
    if (count < 0) throw std::out_of_range("h_sequence(): negative count");
    if (count == 0) return {};
    const auto s = sec_root(2 * (count - 1));
    std::vector<Integer> h;
    for (int i = 0; i < count; ++i) {
        const QPoly c = algebra::egf_coefficient(s, 2 * i);
        Integer v = algebra::to_integer(c).constant_term();
        h.push_back(i % 2 == 0 ? v : Integer(-v));
    }
    return h;
}

}  // namespace combi::families
