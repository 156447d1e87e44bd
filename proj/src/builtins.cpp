#include <ogf/builtins.hpp>

#include <functional>
#include <stdexcept>

namespace ogf {

namespace {

Integer binom_int(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) at this point
    }
    return r;
}

Integer stirling2_int(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    // (1/k!) sum_j (-1)^(k-j) C(k,j) j^n, with 0^0 = 1.
    Integer sum = 0;
    for (int j = 0; j <= k; ++j) {
        Integer term = binom_int(k, j);
        if (j == 0)
            term *= (n == 0) ? 1 : 0;
        else
            term *= boost::multiprecision::pow(Integer(j), static_cast<unsigned>(n));
        if ((k - j) & 1)
            sum -= term;
        else
            sum += term;
    }
    return sum / factorial(k);
}

Integer stirling1_signed_int(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
    std::vector<Integer> prev(static_cast<size_t>(n) + 1, Integer(0)), cur(prev);
    prev[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Integer v = j > 0 ? prev[static_cast<size_t>(j - 1)] : Integer(0);
            v -= (i - 1) * prev[static_cast<size_t>(j)];
            cur[static_cast<size_t>(j)] = v;
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<size_t>(k)];
}

const Rational& param(const BuiltinSpec& spec, size_t i) { return spec.params[i]; }

void require_arity(const BuiltinSpec& spec, int arity) {
    if (static_cast<int>(spec.params.size()) != arity)
        throw std::invalid_argument("builtin '" + spec.name + "' expects " + std::to_string(arity) +
                                    " parameter(s), got " + std::to_string(spec.params.size()));
}

Series series_from(int order, const std::function<Rational(int)>& coefficient) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) c[static_cast<size_t>(n)] = coefficient(n);
    return Series(std::move(c), order);
}

// x*cot(x) as cos(x) / (sin(x)/x); both factors have rational Taylor
// coefficients, so the quotient is exact.
Series xcotx_series(int order) {
    std::vector<Rational> cos_c(static_cast<size_t>(order) + 1, Rational(0));
    std::vector<Rational> sinc_c(static_cast<size_t>(order) + 1, Rational(0));
    for (int m = 0; 2 * m <= order; ++m) {
        const Rational sign = (m & 1) ? Rational(-1) : Rational(1);
        cos_c[static_cast<size_t>(2 * m)] = sign / Rational(factorial(2 * m));
        sinc_c[static_cast<size_t>(2 * m)] = sign / Rational(factorial(2 * m + 1));
    }
    return Series(std::move(cos_c), order) * reciprocal(Series(std::move(sinc_c), order));
}

Composita composita_from(int order, const std::function<Rational(int, int)>& entry_fn) {
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(order));
    for (int n = 1; n <= order; ++n) {
        rows[static_cast<size_t>(n - 1)].resize(static_cast<size_t>(n));
        for (int k = 1; k <= n; ++k)
            rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] = entry_fn(n, k);
    }
    return Composita(std::move(rows));
}

// Triangle of x * (1-x)/(1-2x): expansion of x^k (1-x)^k (1-2x)^(-k).
Rational a105306_entry(int n, int k) {
    Rational acc = 0;
    for (int i = 0; i <= n - k; ++i) {
        Rational term = Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(i))) *
                        binom(k + i - 1, k - 1) * binom(k, n - k - i);
        if ((n - k - i) & 1) term = -term;
        acc += term;
    }
    return acc;
}

// Triangle of x^2 cot(x), via Stirling numbers of both kinds. Entries with
// n-k odd vanish; the first-kind numbers enter with their signs.
Rational xcotx_entry(int n, int k) {
    if ((n - k) & 1) return Rational(0);
    Rational acc = 0;
    for (int l = 0; l <= k; ++l) {
        const int d = n - 2 * k + l;
        if (d < 0) continue;
        Rational inner = 0;
        for (int m = 0; m <= d; ++m) {
            Rational t = Rational(factorial(m)) * stirling1_signed(l + m, l) * stirling2(d, m);
            inner += t / Rational(factorial(l + m) * factorial(d));
        }
        acc += Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(l)) * factorial(l)) *
               binom(k, l) * inner;
    }
    Rational result = rational_pow(Rational(2), n - 2 * k) * acc;
    if (((n - k) / 2) & 1) result = -result;
    return result;
}

Rational catalan_entry(int n, int k) { return Rational(k, n) * binom(2 * n - k - 1, n - 1); }

}  // namespace

const std::vector<BuiltinInfo>& builtin_catalog() {
    static const std::vector<BuiltinInfo> catalog = {
        {"geometric_h", 2, "b/(1-a*x)"},
        {"pascal_h", 0, "1/(1-x)"},
        {"linquad", 2, "a*x + b*x^2"},
        {"log1p", 0, "ln(1+x)"},
        {"expm1", 0, "exp(x) - 1"},
        {"catalan_c", 0, "(1-sqrt(1-4x))/2 = x + x^2 + 2x^3 + 5x^4 + ..."},
        {"catalan_gf", 0, "Catalan numbers 1, 1, 2, 5, 14, ..."},
        {"xcotx", 0, "x*cot(x)"},
        {"a105306_h", 0, "(1-x)/(1-2x)"},
    };
    return catalog;
}

bool is_builtin(const std::string& name) {
    for (const auto& info : builtin_catalog())
        if (name == info.name) return true;
    return false;
}

Series builtin_series(const BuiltinSpec& spec) {
    if (spec.order < 0) throw std::invalid_argument("series order must be non-negative");
    const int order = spec.order;
    if (spec.name == "geometric_h" || spec.name == "pascal_h") {
        Rational a = 1, b = 1;
        if (spec.name == "geometric_h") {
            require_arity(spec, 2);
            a = param(spec, 0);
            b = param(spec, 1);
        } else {
            require_arity(spec, 0);
        }
        std::vector<Rational> c(static_cast<size_t>(order) + 1);
        Rational power = b;
        for (int n = 0; n <= order; ++n) {
            c[static_cast<size_t>(n)] = power;
            power *= a;
        }
        return Series(std::move(c), order);
    }
    if (spec.name == "linquad") {
        require_arity(spec, 2);
        const Rational a = param(spec, 0), b = param(spec, 1);
        return series_from(order, [&](int n) {
            if (n == 1) return a;
            if (n == 2) return b;
            return Rational(0);
        });
    }
    if (spec.name == "log1p") {
        require_arity(spec, 0);
        return series_from(order, [](int n) {
            if (n == 0) return Rational(0);
            return (n & 1) ? Rational(1, n) : Rational(-1, n);
        });
    }
    if (spec.name == "expm1") {
        require_arity(spec, 0);
        return series_from(order, [](int n) {
            return n == 0 ? Rational(0) : Rational(Integer(1), factorial(n));
        });
    }
    if (spec.name == "catalan_c") {
        require_arity(spec, 0);
        return series_from(order, [](int n) {
            return n == 0 ? Rational(0) : catalan_entry(n, 1);
        });
    }
    if (spec.name == "catalan_gf") {
        require_arity(spec, 0);
        return series_from(order, [](int n) {
            return Rational(binom_int(2LL * n, n), Integer(n + 1));
        });
    }
    if (spec.name == "xcotx") {
        require_arity(spec, 0);
        return xcotx_series(order);
    }
    if (spec.name == "a105306_h") {
        require_arity(spec, 0);
        return series_from(order, [](int n) {
            if (n == 0) return Rational(1);
            return Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(n - 1)));
        });
    }
    throw std::invalid_argument("unknown builtin '" + spec.name + "'");
}

Composita builtin_composita(const BuiltinSpec& spec) {
    if (spec.order < 1) throw std::invalid_argument("composita order must be >= 1");
    const int order = spec.order;
    if (spec.name == "geometric_h" || spec.name == "pascal_h") {
        Rational a = 1, b = 1;
        if (spec.name == "geometric_h") {
            require_arity(spec, 2);
            a = param(spec, 0);
            b = param(spec, 1);
        } else {
            require_arity(spec, 0);
        }
        return composita_from(order, [&](int n, int k) {
            const Rational coeff = binom(n - 1, k - 1);
            if (coeff == 0) return Rational(0);
            return coeff * rational_pow(a, n - k) * rational_pow(b, k);
        });
    }
    if (spec.name == "linquad") {
        require_arity(spec, 2);
        const Rational a = param(spec, 0), b = param(spec, 1);
        return composita_from(order, [&](int n, int k) {
            const Rational coeff = binom(k, n - k);
            if (coeff == 0) return Rational(0);
            return coeff * rational_pow(a, 2 * k - n) * rational_pow(b, n - k);
        });
    }
    if (spec.name == "log1p") {
        require_arity(spec, 0);
        return composita_from(order, [](int n, int k) {
            return Rational(factorial(k), factorial(n)) * stirling1_signed(n, k);
        });
    }
    if (spec.name == "expm1") {
        require_arity(spec, 0);
        return composita_from(order, [](int n, int k) {
            return Rational(factorial(k), factorial(n)) * stirling2(n, k);
        });
    }
    if (spec.name == "catalan_c" || spec.name == "catalan_gf") {
        require_arity(spec, 0);
        return composita_from(order, catalan_entry);
    }
    if (spec.name == "xcotx") {
        require_arity(spec, 0);
        return composita_from(order, xcotx_entry);
    }
    if (spec.name == "a105306_h") {
        require_arity(spec, 0);
        return composita_from(order, a105306_entry);
    }
    throw std::invalid_argument("unknown builtin '" + spec.name + "'");
}

Rational binom(long long n, long long k) { return Rational(binom_int(n, k)); }

Rational stirling2(int n, int k) { return Rational(stirling2_int(n, k)); }

Rational stirling1_signed(int n, int k) { return Rational(stirling1_signed_int(n, k)); }

Rational stirling1_unsigned(int n, int k) {
    Integer v = stirling1_signed_int(n, k);
    return Rational(v < 0 ? -v : v);
}

}  // namespace ogf
