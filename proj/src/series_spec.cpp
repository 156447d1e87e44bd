#include <ogf/series_spec.hpp>

#include <ogf/builtins.hpp>

#include <cctype>
#include <stdexcept>

namespace ogf {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("series spec: " + what + " at column " + std::to_string(pos + 1));
    }

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    void skip_ws() {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool eat_keyword(std::string_view kw) {
        if (text.substr(pos, kw.size()) == kw) {
            pos += kw.size();
            return true;
        }
        return false;
    }

    std::string parse_ident() {
        const size_t start = pos;
        if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail("expected a builtin name");
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos;
        return std::string(text.substr(start, pos - start));
    }

    Rational parse_rational_token() {
        const size_t start = pos;
        if (peek() == '+' || peek() == '-') ++pos;
        const size_t digits_start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == digits_start) {
            pos = start;
            fail("expected a rational value");
        }
        if (eat('/')) {
            const size_t den_start = pos;
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
            if (pos == den_start) fail("expected a denominator");
        }
        try {
            return parse_rational(text.substr(start, pos - start));
        } catch (const std::invalid_argument& e) {
            pos = start;
            fail(e.what());
        }
    }

    std::vector<Rational> parse_list(char close) {
        std::vector<Rational> values;
        skip_ws();
        if (eat(close)) return values;
        while (true) {
            skip_ws();
            values.push_back(parse_rational_token());
            skip_ws();
            if (eat(close)) return values;
            expect(',');
        }
    }
};

}  // namespace

SeriesSpec parse_series_spec(std::string_view text) {
    Cursor cur{text};
    cur.skip_ws();
    SeriesSpec spec;
    if (cur.eat_keyword("builtin:")) {
        spec.kind = SeriesSpec::Kind::Builtin;
        spec.name = cur.parse_ident();
        cur.skip_ws();
        if (cur.eat('(')) spec.params = cur.parse_list(')');
    } else if (cur.eat_keyword("coeffs:")) {
        spec.kind = SeriesSpec::Kind::Coeffs;
        cur.skip_ws();
        cur.expect('[');
        spec.coeffs = cur.parse_list(']');
    } else {
        cur.fail("expected 'builtin:' or 'coeffs:'");
    }
    cur.skip_ws();
    if (!cur.done()) cur.fail("unexpected trailing characters");
    return spec;
}

std::string to_string(const SeriesSpec& spec) {
    std::string out;
    if (spec.kind == SeriesSpec::Kind::Builtin) {
        out = "builtin:" + spec.name;
        if (!spec.params.empty()) {
            out += '(';
            for (size_t i = 0; i < spec.params.size(); ++i) {
                if (i) out += ',';
                out += to_string(spec.params[i]);
            }
            out += ')';
        }
    } else {
        out = "coeffs:[";
        for (size_t i = 0; i < spec.coeffs.size(); ++i) {
            if (i) out += ',';
            out += to_string(spec.coeffs[i]);
        }
        out += ']';
    }
    return out;
}

Series resolve_series(const SeriesSpec& spec, int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    if (spec.kind == SeriesSpec::Kind::Builtin)
        return builtin_series(BuiltinSpec{spec.name, spec.params, order});
    std::vector<Rational> coeffs = spec.coeffs;
    if (static_cast<int>(coeffs.size()) > order + 1) coeffs.resize(static_cast<size_t>(order) + 1);
    return Series(std::move(coeffs), order);
}

}  // namespace ogf
