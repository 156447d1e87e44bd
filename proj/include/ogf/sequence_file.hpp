#pragma once

#include <ogf/rational.hpp>

#include <filesystem>
#include <vector>

namespace ogf {

/// Integer or rational sequence with a starting index, mirroring the OEIS
/// b-file layout: one "index value" pair per line, '#' comment lines,
/// indices contiguous from the offset.
struct SequenceFile {
    long long offset = 0;
    std::vector<Rational> values;
};

/// Reads a b-file. Malformed or non-contiguous lines raise
/// std::invalid_argument with the line number.
SequenceFile read_bfile(const std::filesystem::path& path);

/// Writes a b-file atomically (temp file + rename). All values must be
/// integers; rationals raise an error suggesting the csv format.
void write_bfile(const SequenceFile& seq, const std::filesystem::path& path);

struct CompareReport {
    bool match = false;
    long long terms_checked = 0;
    long long mismatch_position = -1;  // 0-based position; -1 when matching
    Rational computed;
    Rational expected;
};

/// Compares computed values against a fixture position-by-position over
/// min(count, computed terms, fixture terms).
CompareReport compare_sequence(const std::vector<Rational>& computed,
                               const SequenceFile& fixture,
                               long long count);

/// One-line human rendering: "match: N terms" or the first mismatch with
/// its b-file index.
std::string format_report(const CompareReport& report, const SequenceFile& fixture);

}  // namespace ogf
