#pragma once

#include <ogf/rational.hpp>

#include <iosfwd>
#include <vector>

namespace ogf {

/// Truncated formal power series with exact rational coefficients.
///
/// A Series of order N holds the coefficients of x^0..x^N; every operation
/// is exact modulo x^(N+1) and there is no floating point anywhere.
/// Instances are immutable after construction and safe to share across
/// threads.
class Series {
public:
    /// Builds a series from the given coefficients, zero-padded up to
    /// `order`. Rejects order < 0 and more than order+1 coefficients.
    Series(std::vector<Rational> coeffs, int order);

    static Series zero(int order);
    static Series one(int order);
    /// The identity series x.
    static Series x(int order);

    int order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^n; throws std::out_of_range for n outside 0..order.
    const Rational& coeff(int n) const;

    bool is_zero() const;

    /// Copy truncated (or zero-padded) to the given order.
    Series resized(int new_order) const;

private:
    int order_;
    std::vector<Rational> coeffs_;
};

bool operator==(const Series& a, const Series& b);
bool operator!=(const Series& a, const Series& b);

// Binary operations re-truncate mixed orders to the smaller order.
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);  // Cauchy product
Series operator*(const Rational& c, const Series& a);

/// a^k modulo x^(order+1); k = 0 yields the constant series 1.
Series pow_trunc(const Series& a, int exponent);

/// Termwise derivative; the order drops by one. Requires order >= 1.
Series derivative(const Series& a);

/// Antiderivative with constant term 0: coefficient of x^n is
/// a(n-1)/n for n >= 1. The order grows by one.
Series integrate0(const Series& a);

/// Multiplicative inverse modulo x^(order+1). Requires a(0) != 0.
Series reciprocal(const Series& a);

/// outer(inner(x)) modulo truncation, by Horner accumulation.
/// Requires inner(0) = 0; works at min(outer.order, inner.order).
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse: the series W with compose(a, W) = x, found by
/// solving the triangular coefficient system directly. Requires
/// a(0) = 0 and a(1) != 0.
Series revert(const Series& a);

/// x * a(x); the order grows by one.
Series mul_x(const Series& a);

/// a(x) / x; requires a(0) = 0, the order drops by one.
Series div_x(const Series& a);

std::string to_string(const Series& a);
std::ostream& operator<<(std::ostream& os, const Series& a);

}  // namespace ogf
