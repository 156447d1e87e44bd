#include <ogf/render.hpp>

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace ogf {

namespace {

void require_integers(const std::vector<Rational>& values) {
    for (const auto& v : values)
        if (boost::multiprecision::denominator(v) != 1)
            throw std::invalid_argument("b-file values must be integers; use the csv format for " +
                                        to_string(v));
}

std::string render_triangle_plain(const Composita& t) {
    size_t width = 1;
    for (int n = 1; n <= t.order(); ++n)
        for (int k = 1; k <= n; ++k) width = std::max(width, to_string(t.entry(n, k)).size());
    // An even cell+gap stride keeps the rows exactly centered.
    const size_t gap = (width % 2 == 0) ? 2 : 3;
    std::string out;
    for (int n = 1; n <= t.order(); ++n) {
        std::string line(static_cast<size_t>(t.order() - n) * (width + gap) / 2, ' ');
        for (int k = 1; k <= n; ++k) {
            if (k > 1) line.append(gap, ' ');
            std::string cell = to_string(t.entry(n, k));
            line.append(width - cell.size(), ' ');
            line += cell;
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_triangle_csv(const Composita& t) {
    std::string out;
    for (int n = 1; n <= t.order(); ++n)
        for (int k = 1; k <= n; ++k)
            out += std::to_string(n) + "," + std::to_string(k) + "," + to_string(t.entry(n, k)) + "\n";
    return out;
}

std::string render_triangle_json(const Composita& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 1; n <= t.order(); ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 1; k <= n; ++k) row.push_back(to_string(t.entry(n, k)));
        rows.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["order"] = t.order();
    doc["rows"] = std::move(rows);
    return doc.dump() + "\n";
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "plain") return Format::Plain;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "bfile") return Format::Bfile;
    return std::nullopt;
}

std::string render_triangle(const Composita& triangle, Format format) {
    switch (format) {
        case Format::Plain: return render_triangle_plain(triangle);
        case Format::Csv: return render_triangle_csv(triangle);
        case Format::Json: return render_triangle_json(triangle);
        case Format::Bfile:
            throw std::invalid_argument("triangles cannot be rendered as b-files; use csv or json");
    }
    throw std::logic_error("unreachable");
}

std::string render_sequence(const std::vector<Rational>& values, long long offset, Format format) {
    std::string out;
    switch (format) {
        case Format::Plain:
            for (size_t i = 0; i < values.size(); ++i) {
                if (i) out += ' ';
                out += to_string(values[i]);
            }
            out += '\n';
            return out;
        case Format::Csv:
            for (size_t i = 0; i < values.size(); ++i)
                out += std::to_string(offset + static_cast<long long>(i)) + "," + to_string(values[i]) + "\n";
            return out;
        case Format::Json: {
            nlohmann::json vals = nlohmann::json::array();
            for (const auto& v : values) vals.push_back(to_string(v));
            nlohmann::json doc;
            doc["offset"] = offset;
            doc["values"] = std::move(vals);
            return doc.dump() + "\n";
        }
        case Format::Bfile:
            require_integers(values);
            for (size_t i = 0; i < values.size(); ++i)
                out += std::to_string(offset + static_cast<long long>(i)) + " " + to_string(values[i]) + "\n";
            return out;
    }
    throw std::logic_error("unreachable");
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write to " + tmp.string());
        out << text;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace ogf
