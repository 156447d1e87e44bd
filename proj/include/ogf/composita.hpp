#pragma once

#include <ogf/series.hpp>

#include <iosfwd>
#include <vector>

namespace ogf {

/// Lower-triangular table of the coefficients [x^n] g(x)^k of the powers of
/// a series g with g(0) = 0. Entry (n, k) is defined for 1 <= k <= n <= order.
///
/// Consequences of the definition that hold for every instance built from a
/// series: entry(n, 1) = g(n) (first column recovers the series) and
/// entry(n, n) = g(1)^n (diagonal power law).
class Composita {
public:
    /// Takes ownership of the rows; row n-1 must hold exactly n entries.
    explicit Composita(std::vector<std::vector<Rational>> rows);

    /// The table of g(x) = x: entry(n, k) = 1 iff n = k.
    static Composita identity(int order);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    const Rational& entry(int n, int k) const;
    const std::vector<Rational>& row(int n) const;
    const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }

private:
    std::vector<std::vector<Rational>> rows_;
};

bool operator==(const Composita& a, const Composita& b);
bool operator!=(const Composita& a, const Composita& b);

/// Builds the table for g (g(0) = 0, order >= 1) by the convolution
/// recurrence entry(n,1) = g(n), entry(n,k) = sum_i g(i) entry(n-i, k-1),
/// never by enumerating integer compositions.
Composita composita_of(const Series& g);

/// Table of the composition f(g(x)) from the tables of f and g:
/// entry(n,k) = sum_{m=k..n} outer(m,k) * inner(n,m). Orders must match.
Composita compose_compositae(const Composita& outer, const Composita& inner);

/// Table of x * (1/h(x)) for a series h with h(0) != 0, via the
/// power-series reciprocal. The result has h.order() + 1 rows.
Composita reciprocal_composita(const Series& h);

/// The same transform computed directly on a triangle: given the table of
/// x*B(x) with b(0) = 1, evaluates
///   entry(n,k) = sum_{m=1..n-k} C(k+m-1, k-1)
///                  sum_{j=1..m} (-1)^j C(m, j) bx(n-k+j, j)
/// for n > k (diagonal entries are 1), producing the table of x*H(x) where
/// H(x)*B(x) = 1. Row n reads input rows up to 2(n-1), so the result has
/// bx.order()/2 + 1 rows.
Composita reciprocal_composita(const Composita& bx);

/// Triangle route extended to any nonzero b(0) = bx.entry(1,1): rescales to
/// a unit diagonal with the c^k law, applies the double sum, scales back.
Composita reciprocal_composita_normalized(const Composita& bx);

/// Table of the compositional inverse of a_series (a(0) = 0, a(1) != 0):
/// entry(n,k) = (k/n) * R(2n-k, n) where R = reciprocal_composita of the
/// series a(x)/x. Producing n_target rows reads row 2*n_target - 1, so `a`
/// must have at least that many rows.
Composita inverse_composita(const Composita& a, const Series& a_series, int n_target);

/// Table of c*g from the table of g: entry(n,k) -> c^k * entry(n,k).
/// Requires c != 0.
Composita scale_composita(const Rational& c, const Composita& g);

/// The entries (2n-1, n) down the middle of the triangle, for
/// 1 <= n <= ceil(order/2).
std::vector<Rational> central_diagonal(const Composita& g);

/// Series whose coefficient n-1 is entry(n, 1).
Series first_column(const Composita& g);

std::string to_string(const Composita& g);
std::ostream& operator<<(std::ostream& os, const Composita& g);

}  // namespace ogf
