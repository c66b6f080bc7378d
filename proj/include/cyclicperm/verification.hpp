#pragma once

// Brute-force vs closed-form comparison tables and their serializations
// (CSV, JSON, plain text, and two-column b-files).

#include "cyclicperm/enumeration.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclicperm {

/// One comparison. `j` is "total", a value of c_2, "tail", a case tag
/// ("i", "ii", "iii:J", "iv:J", "n-1", "n"), "k-free" or "bfile".
struct VerificationRow {
  int n = 0;
  std::optional<int> k;
  std::string j;
  std::uint64_t brute = 0;
  std::optional<std::uint64_t> formula;
  bool match = false;

  friend bool operator==(const VerificationRow&, const VerificationRow&) = default;
};

/// Builds a row; match is formula present and equal to brute.
VerificationRow make_row(int n, std::optional<int> k, std::string j, std::uint64_t brute,
                         std::optional<std::uint64_t> formula);

/// Rows for one report: optional per-j rows (plus "tail" for k = 4), optional
/// case rows, then "total". Formula columns are filled wherever a closed form
/// applies (tau = 1432 only).
std::vector<VerificationRow> report_rows(const CountReport& report, bool per_j, bool cases);

/// For every n in [n_min, n_max] and k in ks: the total row, every refined
/// row with an applicable closed form, and for k >= 5 a "k-free" row counting
/// with the one-line condition dropped. Throws DomainError unless
/// 5 <= n_min <= n_max <= 12 and every k >= 3.
std::vector<VerificationRow> verification_table(int n_min, int n_max,
                                                const std::vector<int>& ks, unsigned threads);

bool all_match(const std::vector<VerificationRow>& rows);

/// Header `n,k,j,brute,formula,match`, one LF-terminated line per row.
std::string to_csv(const std::vector<VerificationRow>& rows);
/// Throws std::invalid_argument on malformed input.
std::vector<VerificationRow> parse_csv(const std::string& text);
/// Array of objects with the CSV field names, two-space indented.
std::string to_json(const std::vector<VerificationRow>& rows);
/// Aligned columns for terminals.
std::string render_text(const std::vector<VerificationRow>& rows);

struct BFileEntry {
  int n = 0;
  std::uint64_t value = 0;
  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Closed-form values a_n(delta_k; 1432) for n in [n_min, n_max], n_min >= 5.
std::vector<BFileEntry> formula_sequence(int k, int n_min, int n_max);
/// Oracle values for the same sequence (n_max <= 12).
std::vector<BFileEntry> brute_sequence(int k, int n_min, int n_max, unsigned threads);

/// `n a(n)` per line.
std::string to_bfile(const std::vector<BFileEntry>& entries);
/// Skips blank lines and lines starting with '#'. Throws std::invalid_argument.
std::vector<BFileEntry> parse_bfile(const std::string& text);

/// Compares b-file values against the oracle for one k; rows use j = "bfile"
/// and put the file value in the formula column. Entries with n outside
/// [2, 12] are skipped.
std::vector<VerificationRow> compare_bfile(const std::vector<BFileEntry>& entries, int k,
                                           unsigned threads);

} // namespace cyclicperm
