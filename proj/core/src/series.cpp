#include "combi/algebra/series.hpp"

#include <stdexcept>
#include <string>

namespace combi::algebra {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series orders differ: " + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
}

bool is_one(const QPoly& p) { return p == QPoly(1L); }

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<QPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::constant(const QPoly& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::linear(const QPoly& c, int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = c;
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    require_same_order(lhs, rhs);
    TruncatedSeries r(lhs.order_);
    for (int i = 0; i <= lhs.order_; ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= lhs.order_; ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const QPoly& factor) const {
    TruncatedSeries r(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * factor;
    return r;
}

TruncatedSeries TruncatedSeries::rescale_z(const Rational& factor) const {
    TruncatedSeries r(order_);
    Rational power = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        r.coeffs_[i] = coeffs_[i].scaled(power);
        power *= factor;
    }
    return r;
}

TruncatedSeries TruncatedSeries::evaluate(Var v, const Rational& value) const {
    TruncatedSeries r(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i].evaluate(v, value);
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("truncated(): cannot raise the order");
    return TruncatedSeries(new_order, std::vector<QPoly>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

// exp: f' = s' f, so n f_n = sum_{k=1}^{n} k s_k f_{n-k}.
TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s[0].is_zero()) throw std::domain_error("series_exp(): nonzero constant term");
    const int order = s.order();
    TruncatedSeries f(order);
    f[0] = QPoly(1L);
    for (int n = 1; n <= order; ++n) {
        QPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (s[k].is_zero()) continue;
            acc += s[k].scaled(Rational(k)) * f[n - k];
        }
        f[n] = acc.scaled(Rational(1, n));
    }
    return f;
}

// log: with s_0 = 1, n g_n = n s_n - sum_{k=1}^{n-1} k g_k s_{n-k}.
TruncatedSeries series_log(const TruncatedSeries& s) {
    if (!is_one(s[0])) throw std::domain_error("series_log(): constant term is not 1");
    const int order = s.order();
    TruncatedSeries g(order);
    for (int n = 1; n <= order; ++n) {
        QPoly acc = s[n].scaled(Rational(n));
        for (int k = 1; k < n; ++k) {
            if (g[k].is_zero() || s[n - k].is_zero()) continue;
            acc -= g[k].scaled(Rational(k)) * s[n - k];
        }
        g[n] = acc.scaled(Rational(1, n));
    }
    return g;
}

// f^2 = s with f_0 = 1: 2 f_n = s_n - sum_{k=1}^{n-1} f_k f_{n-k}.
TruncatedSeries series_sqrt(const TruncatedSeries& s) {
    if (!is_one(s[0])) throw std::domain_error("series_sqrt(): constant term is not 1");
    const int order = s.order();
    TruncatedSeries f(order);
    f[0] = QPoly(1L);
    for (int n = 1; n <= order; ++n) {
        QPoly acc = s[n];
        for (int k = 1; k < n; ++k) acc -= f[k] * f[n - k];
        f[n] = acc.scaled(Rational(1, 2));
    }
    return f;
}

TruncatedSeries series_pow_symbolic(const TruncatedSeries& s, Var exponent_var) {
    if (!is_one(s[0])) throw std::domain_error("series_pow_symbolic(): constant term is not 1");
    for (const auto& c : s.coefficients())
        if (c.uses(exponent_var))
            throw std::domain_error("series_pow_symbolic(): exponent variable already occurs in the series");
    return series_exp(series_log(s).scaled(QPoly::variable(exponent_var)));
}

TruncatedSeries series_divide(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    if (b[0].is_zero()) throw std::domain_error("series_divide(): divisor has zero constant term");
    const int order = a.order();
    TruncatedSeries c(order);
    for (int n = 0; n <= order; ++n) {
        QPoly acc = a[n];
        for (int k = 0; k < n; ++k) {
            if (c[k].is_zero() || b[n - k].is_zero()) continue;
            acc -= c[k] * b[n - k];
        }
        c[n] = divide_exact(acc, b[0]);
    }
    return c;
}

QPoly egf_coefficient(const TruncatedSeries& s, int n) {
    if (n < 0 || n > s.order())
        throw std::out_of_range("egf_coefficient(): index " + std::to_string(n) + " outside [0, " +
                                std::to_string(s.order()) + "]");
    return s[static_cast<std::size_t>(n)].scaled(Rational(factorial(static_cast<unsigned>(n))));
}

}  // namespace combi::algebra
