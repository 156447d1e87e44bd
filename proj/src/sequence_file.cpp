#include <ogf/sequence_file.hpp>

#include <ogf/render.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ogf {

SequenceFile read_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open b-file: " + path.string());

    SequenceFile seq;
    bool have_offset = false;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string index_tok;
        if (!(fields >> index_tok)) continue;  // blank line
        if (index_tok.front() == '#') continue;

        std::string value_tok, extra;
        if (!(fields >> value_tok) || (fields >> extra))
            throw std::invalid_argument("malformed b-file line " + std::to_string(line_no) +
                                        ": expected 'index value'");
        long long index = 0;
        try {
            size_t used = 0;
            index = std::stoll(index_tok, &used);
            if (used != index_tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed index on b-file line " + std::to_string(line_no));
        }
        Rational value;
        try {
            value = parse_rational(value_tok);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed value on b-file line " + std::to_string(line_no));
        }

        if (!have_offset) {
            seq.offset = index;
            have_offset = true;
        } else if (index != seq.offset + static_cast<long long>(seq.values.size())) {
            throw std::invalid_argument("non-contiguous index at line " + std::to_string(line_no));
        }
        seq.values.push_back(std::move(value));
    }
    return seq;
}

void write_bfile(const SequenceFile& seq, const std::filesystem::path& path) {
    write_text_atomic(path, render_sequence(seq.values, seq.offset, Format::Bfile));
}

CompareReport compare_sequence(const std::vector<Rational>& computed,
                               const SequenceFile& fixture,
                               long long count) {
    CompareReport report;
    long long limit = count;
    limit = std::min(limit, static_cast<long long>(computed.size()));
    limit = std::min(limit, static_cast<long long>(fixture.values.size()));
    if (limit < 0) limit = 0;
    for (long long i = 0; i < limit; ++i) {
        if (computed[static_cast<size_t>(i)] != fixture.values[static_cast<size_t>(i)]) {
            report.match = false;
            report.terms_checked = i;
            report.mismatch_position = i;
            report.computed = computed[static_cast<size_t>(i)];
            report.expected = fixture.values[static_cast<size_t>(i)];
            return report;
        }
    }
    report.match = true;
    report.terms_checked = limit;
    return report;
}

std::string format_report(const CompareReport& report, const SequenceFile& fixture) {
    if (report.match) return "match: " + std::to_string(report.terms_checked) + " terms";
    return "mismatch at index " + std::to_string(fixture.offset + report.mismatch_position) +
           ": computed " + to_string(report.computed) + ", fixture " + to_string(report.expected);
}

}  // namespace ogf
