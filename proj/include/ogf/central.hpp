#pragma once

#include <ogf/composita.hpp>

namespace ogf {

/// Result of the forward central transform for a series h with h(0) != 0.
struct ForwardResult {
    /// Table of x*h(x), built to 2*n_target - 1 rows so every central entry
    /// (2n-1, n) for n <= n_target is present.
    Composita triangle;
    /// Solution of A(x) = x*h(A(x)), order n_target.
    Series a_series;
    /// Generating function of the central coefficients: A'(x), order
    /// n_target - 1. Coefficient m equals triangle.entry(2m+1, m+1).
    Series central_gf;
};

/// Result of the inverse problem: the unique h whose triangle has the given
/// central coefficients.
struct InverseResult {
    /// Reconstructed h(0..n_target-1), h(0) = f(0).
    Series h_series;
    /// Table of x*h(x) with n_target rows; its first column is h_series and
    /// its central diagonal reproduces f as far as the rows reach.
    Composita triangle;
    /// The antiderivative of f (coefficient n is f(n-1)/n), order n_target.
    Series a_series;
};

struct Residual {
    bool satisfied;
    Series residual;  // a - x*h(a), identically zero when satisfied
};

/// Solves A(x) = x*h(A(x)) for h(0) != 0 via Lagrange inversion:
/// a(n) = (1/n) * [x^n] (x*h)^n-th power table entry (2n-1, n). Needs h
/// through x^(n_target-1); the table is built internally to 2*n_target - 1
/// rows.
Series solve_functional_equation(const Series& h, int n_target);

/// Forward central transform: F(x) = A'(x) = sum_n entry(2n-1, n) x^(n-1).
ForwardResult central_forward(const Series& h, int n_target);

/// Inverse central transform. Given f with f(0) != 0 and coefficients
/// through x^(n_target-1), reconstructs the unique h:
///   A = integrate0(f);  W = A^(-1) via the reciprocal-table route;
///   h = 1/(W/x);  triangle = table of x*h.
/// With check_round_trip set, re-runs the forward transform on the result
/// and throws std::logic_error unless it reproduces f exactly.
InverseResult central_inverse(const Series& f, int n_target, bool check_round_trip = false);

/// Residual a - x*h(a) modulo x^(a.order()+1), treating h as exact (zero
/// coefficients beyond its order). Requires a(0) = 0.
Residual verify_functional_equation(const Series& a, const Series& h);

}  // namespace ogf
