#pragma once

// Power series in z truncated at a fixed order, with polynomial coefficients
// over the rationals. Index i holds the ordinary coefficient of z^i.

#include "combi/algebra/poly.hpp"

#include <vector>

namespace combi::algebra {

inline constexpr int kDefaultSeriesOrder = 10;

class TruncatedSeries {
public:
    /// The zero series retaining powers z^0 .. z^order.
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<QPoly> coeffs);

    static TruncatedSeries constant(const QPoly& c, int order);
    /// c * z
    static TruncatedSeries linear(const QPoly& c, int order);

    int order() const { return order_; }
    const std::vector<QPoly>& coefficients() const { return coeffs_; }
    const QPoly& operator[](std::size_t i) const { return coeffs_.at(i); }
    QPoly& operator[](std::size_t i) { return coeffs_.at(i); }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    TruncatedSeries scaled(const QPoly& factor) const;
    /// z -> factor * z
    TruncatedSeries rescale_z(const Rational& factor) const;
    /// Evaluates a coefficient variable at a scalar in every coefficient.
    TruncatedSeries evaluate(Var v, const Rational& value) const;
    /// Keeps z^0 .. z^new_order (new_order <= order).
    TruncatedSeries truncated(int new_order) const;

private:
    int order_;
    std::vector<QPoly> coeffs_;
};

/// exp(s); requires a zero constant coefficient.
TruncatedSeries series_exp(const TruncatedSeries& s);
/// log(s); requires constant coefficient 1.
TruncatedSeries series_log(const TruncatedSeries& s);
/// The square root with constant coefficient 1; requires s(0) = 1.
TruncatedSeries series_sqrt(const TruncatedSeries& s);
/// exp(exponent_var * log(s)); requires s(0) = 1 and exponent_var absent from s.
TruncatedSeries series_pow_symbolic(const TruncatedSeries& s, Var exponent_var);
/// a / b, where every quotient coefficient must be an exact polynomial. The
/// constant coefficient of b need not be a unit (e.g. 1 - x).
TruncatedSeries series_divide(const TruncatedSeries& a, const TruncatedSeries& b);

/// n! times the coefficient of z^n.
QPoly egf_coefficient(const TruncatedSeries& s, int n);

}  // namespace combi::algebra
