#pragma once

#include <ogf/series.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ogf {

/// Textual description of a series, as accepted on the command line:
///   builtin:NAME           builtin:NAME(p1,p2,...)
///   coeffs:[r0,r1,...]
/// with rational entries written as integers or "p/q".
struct SeriesSpec {
    enum class Kind { Builtin, Coeffs };
    Kind kind = Kind::Coeffs;
    std::string name;               // builtin only
    std::vector<Rational> params;   // builtin only
    std::vector<Rational> coeffs;   // coeffs only
};

/// Parses a spec string. Errors are std::invalid_argument and carry the
/// 1-based column of the offending character.
SeriesSpec parse_series_spec(std::string_view text);

/// Canonical rendering; parse_series_spec(to_string(s)) reproduces s.
std::string to_string(const SeriesSpec& spec);

/// Materializes the spec at the given truncation order. Explicit coefficient
/// lists are zero-padded or truncated to fit; builtin names and arities are
/// validated here.
Series resolve_series(const SeriesSpec& spec, int order);

}  // namespace ogf
