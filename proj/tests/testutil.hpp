#pragma once

#include <ogf/composita.hpp>
#include <ogf/series.hpp>

#include <initializer_list>
#include <random>
#include <vector>

namespace testutil {

inline ogf::Rational R(const char* text) { return ogf::parse_rational(text); }

/// Series from integer coefficients, zero-padded to the order.
inline ogf::Series S(std::initializer_list<long> coeffs, int order) {
    std::vector<ogf::Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return ogf::Series(std::move(c), order);
}

/// Series from rational literals.
inline ogf::Series SQ(std::initializer_list<const char*> coeffs, int order) {
    std::vector<ogf::Rational> c;
    for (const char* v : coeffs) c.push_back(R(v));
    return ogf::Series(std::move(c), order);
}

inline ogf::Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return ogf::Rational(num(rng), den(rng));
}

inline ogf::Rational random_nonzero_rational(std::mt19937& rng) {
    for (;;) {
        ogf::Rational r = random_rational(rng);
        if (r != 0) return r;
    }
}

inline ogf::Series random_series(std::mt19937& rng, int order) {
    std::vector<ogf::Rational> c(static_cast<size_t>(order) + 1);
    for (auto& v : c) v = random_rational(rng);
    return ogf::Series(std::move(c), order);
}

/// Random series with a prescribed constant term.
inline ogf::Series random_series_with_c0(std::mt19937& rng, int order, const ogf::Rational& c0) {
    std::vector<ogf::Rational> c(static_cast<size_t>(order) + 1);
    c[0] = c0;
    for (size_t i = 1; i < c.size(); ++i) c[i] = random_rational(rng);
    return ogf::Series(std::move(c), order);
}

/// g^k by explicit repeated multiplication; the brute-force oracle for
/// every power-related identity.
inline ogf::Series naive_power(const ogf::Series& g, int k) {
    ogf::Series p = ogf::Series::one(g.order());
    for (int i = 0; i < k; ++i) p = p * g;
    return p;
}

/// First `order` rows of a triangle.
inline ogf::Composita truncate_rows(const ogf::Composita& c, int order) {
    std::vector<std::vector<ogf::Rational>> rows(c.rows().begin(), c.rows().begin() + order);
    return ogf::Composita(std::move(rows));
}

}  // namespace testutil
