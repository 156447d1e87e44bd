#include <ogf/builtins.hpp>
#include <ogf/central.hpp>
#include <ogf/render.hpp>
#include <ogf/sequence_file.hpp>
#include <ogf/series_spec.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace ogf;

struct OutputSink {
    std::string path;  // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty())
            std::cout << text;
        else
            write_text_atomic(path, text);
    }
};

Format format_or_throw(const std::string& name) {
    const auto fmt = parse_format(name);
    if (!fmt) throw std::invalid_argument("unknown format '" + name + "'");
    return *fmt;
}

// Series for the triangle: an input with a nonzero constant term is taken as
// H(x) and shifted to x*H(x); one with a zero constant term is used directly.
Series triangle_series(const SeriesSpec& spec, int order, const std::string& role) {
    if (role == "g") {
        const Series g = resolve_series(spec, order);
        if (g.coeff(0) != 0) throw std::invalid_argument("composita requires g(0)=0");
        return g;
    }
    if (role == "h") return mul_x(resolve_series(spec, order - 1));
    const Series probe = resolve_series(spec, std::max(order - 1, 0));
    if (probe.coeff(0) != 0) return mul_x(probe);
    return resolve_series(spec, order);
}

int run_composita(const std::string& spec_text, int order, const std::string& format_name,
                  const std::string& role, const OutputSink& sink) {
    const SeriesSpec spec = parse_series_spec(spec_text);
    const Series g = triangle_series(spec, order, role);
    if (g.is_zero()) throw std::invalid_argument("composita requires g(0)=0 and a nonzero series");
    sink.emit(render_triangle(composita_of(g), format_or_throw(format_name)));
    return 0;
}

int run_solve_fe(const std::string& spec_text, int order, const std::string& format_name,
                 const OutputSink& sink) {
    const SeriesSpec spec = parse_series_spec(spec_text);
    const Series h = resolve_series(spec, order - 1);
    const Series a = solve_functional_equation(h, order);
    std::vector<Rational> values(a.coeffs().begin() + 1, a.coeffs().end());
    sink.emit(render_sequence(values, 0, format_or_throw(format_name)));
    return 0;
}

int run_forward(const std::string& spec_text, int order, const std::string& format_name,
                bool with_a, bool with_triangle, bool check, const OutputSink& sink) {
    const SeriesSpec spec = parse_series_spec(spec_text);
    // materialize up to the triangle's full depth so every printed row is
    // genuine; the central coefficients themselves need only order-1 terms
    const Series h = resolve_series(spec, 2 * order - 2);
    const ForwardResult result = central_forward(h, order);
    if (check) {
        const Residual r = verify_functional_equation(result.a_series, h);
        if (!r.satisfied)
            throw std::logic_error("functional-equation residual is nonzero: " + to_string(r.residual));
    }
    const Format format = format_or_throw(format_name);
    std::string out;
    if (with_a || with_triangle) {
        if (format != Format::Plain)
            throw std::invalid_argument("--with-a/--with-triangle are only available with --format plain");
        out = render_sequence(result.central_gf.coeffs(), 0, Format::Plain);
        if (with_a) out += "A: " + render_sequence(result.a_series.coeffs(), 0, Format::Plain);
        if (with_triangle) out += render_triangle(result.triangle, Format::Plain);
    } else {
        out = render_sequence(result.central_gf.coeffs(), 0, format);
    }
    sink.emit(out);
    return 0;
}

int run_invert(const std::string& spec_text, int order, const std::string& format_name,
               bool with_triangle, bool check, const OutputSink& sink) {
    const SeriesSpec spec = parse_series_spec(spec_text);
    const Series f = resolve_series(spec, order - 1);
    const InverseResult result = central_inverse(f, order, check);
    const Format format = format_or_throw(format_name);
    std::string out;
    if (with_triangle) {
        if (format != Format::Plain)
            throw std::invalid_argument("--with-triangle is only available with --format plain");
        out = render_sequence(result.h_series.coeffs(), 0, Format::Plain);
        out += render_triangle(result.triangle, Format::Plain);
    } else {
        out = render_sequence(result.h_series.coeffs(), 0, format);
    }
    sink.emit(out);
    return 0;
}

std::vector<Rational> computed_sequence(const std::string& mode, const SeriesSpec& spec, int order) {
    if (mode == "forward") {
        const Series h = resolve_series(spec, order - 1);
        return central_forward(h, order).central_gf.coeffs();
    }
    if (mode == "solve-fe") {
        const Series h = resolve_series(spec, order - 1);
        const Series a = solve_functional_equation(h, order);
        return {a.coeffs().begin() + 1, a.coeffs().end()};
    }
    if (mode == "invert") {
        const Series f = resolve_series(spec, order - 1);
        return central_inverse(f, order).h_series.coeffs();
    }
    throw std::invalid_argument("unknown compare mode '" + mode + "'");
}

int run_compare(const std::string& mode, const std::string& spec_text, const std::string& fixture_path,
                int order, long long count) {
    const SeriesSpec spec = parse_series_spec(spec_text);
    const std::vector<Rational> computed = computed_sequence(mode, spec, order);
    const SequenceFile fixture = read_bfile(fixture_path);
    if (count <= 0) count = static_cast<long long>(computed.size());
    const CompareReport report = compare_sequence(computed, fixture, count);
    std::cout << format_report(report, fixture) << "\n";
    return report.match ? 0 : 1;
}

int run_builtins_list() {
    for (const auto& info : builtin_catalog()) {
        std::string head = info.name;
        if (info.arity > 0) head += "/" + std::to_string(info.arity);
        std::cout << head;
        for (size_t pad = head.size(); pad < 16; ++pad) std::cout << ' ';
        std::cout << info.summary << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating-function triangles and central-coefficient transforms"};
    app.require_subcommand(1);

    std::string spec_text, format_name = "plain", out_path, role = "auto", mode, fixture_path;
    int order = 0;
    long long count = 0;
    bool with_a = false, with_triangle = false, check = false;

    auto* composita_cmd = app.add_subcommand("composita", "print the triangle of a series");
    composita_cmd->add_option("spec", spec_text, "series spec, e.g. builtin:pascal_h or coeffs:[0,1,1]")
        ->required();
    composita_cmd->add_option("-n,--order", order, "number of rows")->required()->check(CLI::Range(1, 1000000));
    composita_cmd->add_option("--format", format_name, "plain|csv|json")->capture_default_str();
    composita_cmd->add_option("--as", role, "auto|g|h: use the series directly (g) or shifted to x*H (h)")
        ->check(CLI::IsMember({"auto", "g", "h"}))
        ->capture_default_str();
    composita_cmd->add_option("--out", out_path, "write output to this path (atomic)");

    auto* solve_cmd = app.add_subcommand("solve-fe", "solve A(x) = x*H(A(x)) for A");
    solve_cmd->add_option("spec", spec_text, "series spec for H, H(0) != 0")->required();
    solve_cmd->add_option("-n,--order", order, "number of coefficients a(1..n)")
        ->required()
        ->check(CLI::Range(1, 1000000));
    solve_cmd->add_option("--format", format_name, "plain|csv|json|bfile")->capture_default_str();
    solve_cmd->add_option("--out", out_path, "write output to this path (atomic)");

    auto* central_cmd = app.add_subcommand("central", "central-coefficient transforms");
    central_cmd->require_subcommand(1);

    auto* forward_cmd = central_cmd->add_subcommand(
        "forward", "central coefficients of the triangle of x*H(x)");
    forward_cmd->add_option("spec", spec_text, "series spec for H, H(0) != 0")->required();
    forward_cmd->add_option("-n,--order", order, "number of central coefficients")
        ->required()
        ->check(CLI::Range(1, 1000000));
    forward_cmd->add_option("--format", format_name, "plain|csv|json|bfile")->capture_default_str();
    forward_cmd->add_flag("--with-a", with_a, "also print the functional-equation solution A");
    forward_cmd->add_flag("--with-triangle", with_triangle, "also print the triangle");
    forward_cmd->add_flag("--check", check, "verify A = x*H(A) before printing");
    forward_cmd->add_option("--out", out_path, "write output to this path (atomic)");

    auto* invert_cmd = central_cmd->add_subcommand(
        "invert", "reconstruct H from the central coefficients F");
    invert_cmd->add_option("spec", spec_text, "series spec for F, F(0) != 0")->required();
    invert_cmd->add_option("-n,--order", order, "number of reconstructed coefficients")
        ->required()
        ->check(CLI::Range(1, 1000000));
    invert_cmd->add_option("--format", format_name, "plain|csv|json|bfile")->capture_default_str();
    invert_cmd->add_flag("--with-triangle", with_triangle, "also print the reconstructed triangle");
    invert_cmd->add_flag("--check", check, "re-run the forward transform and compare against F");
    invert_cmd->add_option("--out", out_path, "write output to this path (atomic)");

    auto* compare_cmd = app.add_subcommand("compare", "compare a computed sequence against a b-file");
    compare_cmd->add_option("mode", mode, "forward|solve-fe|invert")
        ->required()
        ->check(CLI::IsMember({"forward", "solve-fe", "invert"}));
    compare_cmd->add_option("spec", spec_text, "series spec")->required();
    compare_cmd->add_option("fixture", fixture_path, "b-file path")->required();
    compare_cmd->add_option("-n,--order", order, "number of terms to compute")
        ->required()
        ->check(CLI::Range(1, 1000000));
    compare_cmd->add_option("--count", count, "terms to compare (default: all computed)");

    auto* builtins_cmd = app.add_subcommand("builtins", "catalog of named series");
    auto* list_cmd = builtins_cmd->add_subcommand("list", "list builtin names and arities");
    builtins_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        const OutputSink sink{out_path};
        if (composita_cmd->parsed()) return run_composita(spec_text, order, format_name, role, sink);
        if (solve_cmd->parsed()) return run_solve_fe(spec_text, order, format_name, sink);
        if (central_cmd->parsed()) {
            if (forward_cmd->parsed())
                return run_forward(spec_text, order, format_name, with_a, with_triangle, check, sink);
            return run_invert(spec_text, order, format_name, with_triangle, check, sink);
        }
        if (compare_cmd->parsed()) return run_compare(mode, spec_text, fixture_path, order, count);
        if (list_cmd->parsed()) return run_builtins_list();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
