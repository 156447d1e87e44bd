#include <ogf/series.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ogf {

Series::Series(std::vector<Rational> coeffs, int order) : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    if (static_cast<int>(coeffs_.size()) > order + 1)
        throw std::invalid_argument("more coefficients than order " + std::to_string(order) + " allows");
    coeffs_.resize(static_cast<size_t>(order) + 1, Rational(0));
}

Series Series::zero(int order) { return Series({}, order); }

Series Series::one(int order) { return Series({Rational(1)}, order); }

Series Series::x(int order) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1 for x");
    return Series({Rational(0), Rational(1)}, order);
}

const Rational& Series::coeff(int n) const {
    if (n < 0 || n > order_)
        throw std::out_of_range("coefficient index " + std::to_string(n) + " outside order " +
                                std::to_string(order_));
    return coeffs_[static_cast<size_t>(n)];
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Series Series::resized(int new_order) const {
    if (new_order < 0) throw std::invalid_argument("series order must be non-negative");
    std::vector<Rational> c(coeffs_.begin(),
                            coeffs_.begin() + std::min<size_t>(coeffs_.size(), static_cast<size_t>(new_order) + 1));
    return Series(std::move(c), new_order);
}

bool operator==(const Series& a, const Series& b) {
    return a.order() == b.order() && a.coeffs() == b.coeffs();
}

bool operator!=(const Series& a, const Series& b) { return !(a == b); }

Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
    return Series(std::move(c), n);
}

Series operator-(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a.coeff(i) - b.coeff(i);
    return Series(std::move(c), n);
}

Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j) == 0) continue;
            c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return Series(std::move(c), n);
}

Series operator*(const Rational& c, const Series& a) {
    std::vector<Rational> r(a.coeffs());
    for (auto& v : r) v *= c;
    return Series(std::move(r), a.order());
}

Series pow_trunc(const Series& a, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative series exponent");
    Series result = Series::one(a.order());
    Series base = a;
    int k = exponent;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Series derivative(const Series& a) {
    if (a.order() < 1) throw std::invalid_argument("derivative requires order >= 1");
    std::vector<Rational> c(static_cast<size_t>(a.order()));
    for (int n = 1; n <= a.order(); ++n) c[static_cast<size_t>(n - 1)] = Rational(n) * a.coeff(n);
    return Series(std::move(c), a.order() - 1);
}

Series integrate0(const Series& a) {
    std::vector<Rational> c(static_cast<size_t>(a.order()) + 2, Rational(0));
    for (int n = 0; n <= a.order(); ++n) c[static_cast<size_t>(n + 1)] = a.coeff(n) / (n + 1);
    return Series(std::move(c), a.order() + 1);
}

Series reciprocal(const Series& a) {
    if (a.coeff(0) == 0) throw std::invalid_argument("not invertible as a power series");
    const int n = a.order();
    const Rational inv0 = Rational(1) / a.coeff(0);
    std::vector<Rational> b(static_cast<size_t>(n) + 1, Rational(0));
    b[0] = inv0;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int i = 1; i <= m; ++i) acc += a.coeff(i) * b[static_cast<size_t>(m - i)];
        b[static_cast<size_t>(m)] = -inv0 * acc;
    }
    return Series(std::move(b), n);
}

Series compose(const Series& outer, const Series& inner) {
    if (inner.coeff(0) != 0) throw std::invalid_argument("composition requires inner(0) = 0");
    const int n = std::min(outer.order(), inner.order());
    const Series in = inner.resized(n);
    Series acc = Series({outer.coeff(std::min(n, outer.order()))}, n);
    // Horner: acc <- acc*inner + outer[m]
    for (int m = n - 1; m >= 0; --m) acc = acc * in + Series({outer.coeff(m)}, n);
    return acc;
}

Series revert(const Series& a) {
    if (a.order() < 1 || a.coeff(0) != 0 || a.coeff(1) == 0)
        throw std::invalid_argument("no compositional inverse");
    const int n = a.order();
    const Rational inv1 = Rational(1) / a.coeff(1);
    std::vector<Rational> w(static_cast<size_t>(n) + 1, Rational(0));
    w[1] = inv1;
    for (int m = 2; m <= n; ++m) {
        // With w(m) still zero, [x^m] a(W) differs from the target by a(1)*w(m).
        std::vector<Rational> head(w.begin(), w.begin() + m);
        const Series partial(std::move(head), m);
        const Rational overshoot = compose(a.resized(m), partial).coeff(m);
        w[static_cast<size_t>(m)] = -inv1 * overshoot;
    }
    return Series(std::move(w), n);
}

Series mul_x(const Series& a) {
    std::vector<Rational> c(static_cast<size_t>(a.order()) + 2, Rational(0));
    for (int i = 0; i <= a.order(); ++i) c[static_cast<size_t>(i + 1)] = a.coeff(i);
    return Series(std::move(c), a.order() + 1);
}

Series div_x(const Series& a) {
    if (a.order() < 1) throw std::invalid_argument("cannot divide an order-0 series by x");
    if (a.coeff(0) != 0) throw std::invalid_argument("division by x requires a(0) = 0");
    std::vector<Rational> c(a.coeffs().begin() + 1, a.coeffs().end());
    return Series(std::move(c), a.order() - 1);
}

std::string to_string(const Series& a) {
    std::string out = "[";
    for (int i = 0; i <= a.order(); ++i) {
        if (i) out += ", ";
        out += to_string(a.coeff(i));
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Series& a) { return os << to_string(a); }

}  // namespace ogf
