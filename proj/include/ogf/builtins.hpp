#pragma once

#include <ogf/composita.hpp>

#include <string>
#include <vector>

namespace ogf {

/// A named generating function with parameters, expanded at a given order.
struct BuiltinSpec {
    std::string name;
    std::vector<Rational> params;
    int order = 0;
};

struct BuiltinInfo {
    const char* name;
    int arity;
    const char* summary;
};

/// The catalog, in stable listing order. Names and parameter arities are
/// part of the CLI contract.
const std::vector<BuiltinInfo>& builtin_catalog();
bool is_builtin(const std::string& name);

/// Exact truncated expansion of a catalog entry. Throws on unknown names or
/// wrong parameter counts.
Series builtin_series(const BuiltinSpec& spec);

/// Closed-form triangle for a catalog entry, filled from the known formula
/// rather than from the engine (spec.order = number of rows). For entries
/// whose series has a nonzero constant term the triangle is that of
/// x * series; otherwise of the series itself.
///
/// ln(1+x) note: [ln(1+x)]^k has alternating-sign coefficients, so the
/// triangle stores (k!/n!) * signed Stirling numbers of the first kind;
/// the unsigned values are available via stirling1_unsigned.
Composita builtin_composita(const BuiltinSpec& spec);

/// Binomial coefficient; zero when k < 0, n < 0 or k > n.
Rational binom(long long n, long long k);

/// Stirling numbers of the second kind, by the alternating binomial sum
/// (1/k!) * sum_j (-1)^(k-j) C(k,j) j^n.
Rational stirling2(int n, int k);

/// Stirling numbers of the first kind. The signed values are the ones
/// appearing in [ln(1+x)]^k = k! sum_n s(n,k) x^n / n!.
Rational stirling1_signed(int n, int k);
Rational stirling1_unsigned(int n, int k);

}  // namespace ogf
