#include <ogf/central.hpp>

#include <stdexcept>

namespace ogf {

namespace {

void check_forward_input(const Series& h, int n_target) {
    if (n_target < 1) throw std::invalid_argument("target order must be >= 1");
    if (h.coeff(0) == 0) throw std::invalid_argument("Lagrange inversion requires h(0) != 0");
    if (h.order() < n_target - 1)
        throw std::invalid_argument("need h through x^" + std::to_string(n_target - 1) +
                                    "; have order " + std::to_string(h.order()));
}

// a(n) = entry(2n-1, n) / n for n = 1..n_target.
Series diagonal_solution(const Composita& triangle, int n_target) {
    std::vector<Rational> a(static_cast<size_t>(n_target) + 1, Rational(0));
    for (int n = 1; n <= n_target; ++n)
        a[static_cast<size_t>(n)] = triangle.entry(2 * n - 1, n) / n;
    return Series(std::move(a), n_target);
}

}  // namespace

Series solve_functional_equation(const Series& h, int n_target) {
    check_forward_input(h, n_target);
    const Composita triangle = composita_of(mul_x(h.resized(2 * n_target - 2)));
    return diagonal_solution(triangle, n_target);
}

ForwardResult central_forward(const Series& h, int n_target) {
    check_forward_input(h, n_target);
    // 2*n_target - 1 rows keep every sampled entry (2n-1, n) in range; the
    // sampled entries depend only on h(0..n-1), so the zero padding beyond
    // h.order() never leaks into the result.
    Composita triangle = composita_of(mul_x(h.resized(2 * n_target - 2)));
    Series a = diagonal_solution(triangle, n_target);
    Series f = derivative(a);
    return ForwardResult{std::move(triangle), std::move(a), std::move(f)};
}

InverseResult central_inverse(const Series& f, int n_target, bool check_round_trip) {
    if (n_target < 1) throw std::invalid_argument("target order must be >= 1");
    if (f.coeff(0) == 0) throw std::invalid_argument("central inversion requires f(0) != 0");
    if (f.order() < n_target - 1)
        throw std::invalid_argument("need f through x^" + std::to_string(n_target - 1) +
                                    "; have order " + std::to_string(f.order()));

    Series a = integrate0(f.resized(n_target - 1));  // a(n) = f(n-1)/n, a(0) = 0
    const Series a_shifted = div_x(a);               // constant term f(0) != 0

    // W = A^(-1) solves W = x * (1/a_shifted)(W); sample the reciprocal
    // table at (2n-1, n) exactly as in the forward direction.
    const Composita recip = reciprocal_composita(a_shifted.resized(2 * n_target - 2));
    const Series w = diagonal_solution(recip, n_target);

    Series h = reciprocal(div_x(w));                 // h(0) = f(0)
    Composita triangle = composita_of(mul_x(h));

    if (check_round_trip) {
        const ForwardResult fwd = central_forward(h, n_target);
        if (fwd.central_gf != f.resized(n_target - 1))
            throw std::logic_error("round-trip verification failed: forward transform of the "
                                   "reconstructed series does not reproduce the input");
    }
    return InverseResult{std::move(h), std::move(triangle), std::move(a)};
}

Residual verify_functional_equation(const Series& a, const Series& h) {
    if (a.coeff(0) != 0)
        throw std::invalid_argument("functional-equation check requires a(0) = 0");
    const int n = a.order();
    const Series rhs = mul_x(compose(h.resized(n), a)).resized(n);
    Series residual = a - rhs;
    const bool ok = residual.is_zero();
    return Residual{ok, std::move(residual)};
}

}  // namespace ogf
