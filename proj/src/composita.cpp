#include <ogf/composita.hpp>

#include <ogf/builtins.hpp>

#include <ostream>
#include <stdexcept>
#include <utility>

namespace ogf {

Composita::Composita(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("composita needs at least one row");
    for (size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].size() != i + 1)
            throw std::invalid_argument("row " + std::to_string(i + 1) + " must hold " +
                                        std::to_string(i + 1) + " entries");
}

Composita Composita::identity(int order) {
    if (order < 1) throw std::invalid_argument("composita order must be >= 1");
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(order));
    for (int n = 1; n <= order; ++n) {
        rows[static_cast<size_t>(n - 1)].assign(static_cast<size_t>(n), Rational(0));
        rows[static_cast<size_t>(n - 1)].back() = 1;
    }
    return Composita(std::move(rows));
}

const Rational& Composita::entry(int n, int k) const {
    if (n < 1 || n > order() || k < 1 || k > n)
        throw std::out_of_range("entry (" + std::to_string(n) + ", " + std::to_string(k) +
                                ") outside triangle of order " + std::to_string(order()));
    return rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)];
}

const std::vector<Rational>& Composita::row(int n) const {
    if (n < 1 || n > order())
        throw std::out_of_range("row " + std::to_string(n) + " outside triangle of order " +
                                std::to_string(order()));
    return rows_[static_cast<size_t>(n - 1)];
}

bool operator==(const Composita& a, const Composita& b) { return a.rows() == b.rows(); }
bool operator!=(const Composita& a, const Composita& b) { return !(a == b); }

Composita composita_of(const Series& g) {
    if (g.order() < 1) throw std::invalid_argument("composita requires order >= 1");
    if (g.coeff(0) != 0) throw std::invalid_argument("composita requires g(0)=0");
    const int N = g.order();
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) {
        auto& row = rows[static_cast<size_t>(n - 1)];
        row.assign(static_cast<size_t>(n), Rational(0));
        row[0] = g.coeff(n);
        for (int k = 2; k <= n; ++k) {
            Rational acc = 0;
            for (int i = 1; i <= n - k + 1; ++i) {
                if (g.coeff(i) == 0) continue;
                acc += g.coeff(i) * rows[static_cast<size_t>(n - i - 1)][static_cast<size_t>(k - 2)];
            }
            row[static_cast<size_t>(k - 1)] = acc;
        }
    }
    return Composita(std::move(rows));
}

Composita compose_compositae(const Composita& outer, const Composita& inner) {
    if (outer.order() != inner.order())
        throw std::invalid_argument("composita order mismatch: " + std::to_string(outer.order()) +
                                    " vs " + std::to_string(inner.order()));
    const int N = outer.order();
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) {
        auto& row = rows[static_cast<size_t>(n - 1)];
        row.assign(static_cast<size_t>(n), Rational(0));
        for (int k = 1; k <= n; ++k) {
            Rational acc = 0;
            for (int m = k; m <= n; ++m) acc += outer.entry(m, k) * inner.entry(n, m);
            row[static_cast<size_t>(k - 1)] = acc;
        }
    }
    return Composita(std::move(rows));
}

Composita reciprocal_composita(const Series& h) {
    if (h.coeff(0) == 0)
        throw std::invalid_argument("reciprocal composita requires h(0) != 0");
    return composita_of(mul_x(reciprocal(h)));
}

Composita reciprocal_composita(const Composita& bx) {
    const int in_order = bx.order();
    for (int n = 1; n <= in_order; ++n)
        if (bx.entry(n, n) != 1)
            throw std::invalid_argument(
                "reciprocal composita requires a unit diagonal (b(0) = 1); rescale first");
    const int out_order = in_order / 2 + 1;
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(out_order));
    for (int n = 1; n <= out_order; ++n) {
        auto& row = rows[static_cast<size_t>(n - 1)];
        row.assign(static_cast<size_t>(n), Rational(0));
        row.back() = 1;
        for (int k = 1; k < n; ++k) {
            Rational acc = 0;
            for (int m = 1; m <= n - k; ++m) {
                Rational inner_sum = 0;
                for (int j = 1; j <= m; ++j) {
                    const Rational term = binom(m, j) * bx.entry(n - k + j, j);
                    if (j & 1)
                        inner_sum -= term;
                    else
                        inner_sum += term;
                }
                acc += binom(k + m - 1, k - 1) * inner_sum;
            }
            row[static_cast<size_t>(k - 1)] = acc;
        }
    }
    return Composita(std::move(rows));
}

Composita reciprocal_composita_normalized(const Composita& bx) {
    const Rational c = bx.entry(1, 1);
    if (c == 0)
        throw std::invalid_argument("reciprocal composita requires b(0) != 0");
    if (c == 1) return reciprocal_composita(bx);
    const Rational inv = Rational(1) / c;
    return scale_composita(inv, reciprocal_composita(scale_composita(inv, bx)));
}

Composita inverse_composita(const Composita& a, const Series& a_series, int n_target) {
    if (n_target < 1) throw std::invalid_argument("target order must be >= 1");
    if (a_series.order() < 1 || a_series.coeff(0) != 0 || a_series.coeff(1) == 0)
        throw std::invalid_argument("no compositional inverse");
    const int required = 2 * n_target - 1;
    if (a.order() < required)
        throw std::invalid_argument("inverse composita to order " + std::to_string(n_target) +
                                    " needs " + std::to_string(required) + " source rows; have " +
                                    std::to_string(a.order()));
    if (a.entry(1, 1) != a_series.coeff(1))
        throw std::invalid_argument("composita does not match the series");

    // a(x)/x from the first column; entries (2n-k, n) of R depend only on
    // the first n-k+1 of these coefficients.
    std::vector<Rational> shifted(static_cast<size_t>(required));
    for (int n = 1; n <= required; ++n) shifted[static_cast<size_t>(n - 1)] = a.entry(n, 1);
    const Composita recip = reciprocal_composita(Series(std::move(shifted), required - 1));

    std::vector<std::vector<Rational>> rows(static_cast<size_t>(n_target));
    for (int n = 1; n <= n_target; ++n) {
        auto& row = rows[static_cast<size_t>(n - 1)];
        row.assign(static_cast<size_t>(n), Rational(0));
        for (int k = 1; k <= n; ++k)
            row[static_cast<size_t>(k - 1)] = Rational(k, n) * recip.entry(2 * n - k, n);
    }
    return Composita(std::move(rows));
}

Composita scale_composita(const Rational& c, const Composita& g) {
    if (c == 0) throw std::invalid_argument("scale factor must be nonzero");
    std::vector<std::vector<Rational>> rows = g.rows();
    for (auto& row : rows) {
        Rational power = 1;
        for (auto& value : row) {
            power *= c;
            value *= power;
        }
    }
    return Composita(std::move(rows));
}

std::vector<Rational> central_diagonal(const Composita& g) {
    std::vector<Rational> out;
    for (int n = 1; 2 * n - 1 <= g.order(); ++n) out.push_back(g.entry(2 * n - 1, n));
    return out;
}

Series first_column(const Composita& g) {
    std::vector<Rational> c(static_cast<size_t>(g.order()));
    for (int n = 1; n <= g.order(); ++n) c[static_cast<size_t>(n - 1)] = g.entry(n, 1);
    return Series(std::move(c), g.order() - 1);
}

std::string to_string(const Composita& g) {
    std::string out;
    for (int n = 1; n <= g.order(); ++n) {
        if (n > 1) out += "; ";
        for (int k = 1; k <= n; ++k) {
            if (k > 1) out += " ";
            out += to_string(g.entry(n, k));
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Composita& g) { return os << to_string(g); }

}  // namespace ogf
