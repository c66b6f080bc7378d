#include "cyclicperm/verification.hpp"

#include "cyclicperm/errors.hpp"
#include "cyclicperm/formulas.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace cyclicperm {

VerificationRow make_row(int n, std::optional<int> k, std::string j, std::uint64_t brute,
                         std::optional<std::uint64_t> formula) {
  VerificationRow row{n, k, std::move(j), brute, formula, false};
  row.match = formula.has_value() && *formula == brute;
  return row;
}

namespace {

std::optional<std::uint64_t> refined_formula(const CountReport& r, int j) {
  if (!r.k) {
    return std::nullopt;
  }
  if (*r.k == 3 && r.n >= 5) {
    return delta3_refined_formula(r.n, j).get();
  }
  if (*r.k == 4 && r.n >= 6) {
    if (j == 2) {
      return delta4_refined_formula(r.n, Delta4Slot::j2).get();
    }
    if (j == 3) {
      return delta4_refined_formula(r.n, Delta4Slot::j3).get();
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> total_value(const CountReport& r) {
  if (!r.k) {
    return avoiding_321_2143_total(r.n).get();
  }
  if (r.n < 5) {
    return std::nullopt;
  }
  return total_formula(r.n, *r.k).get();
}

} // namespace

std::vector<VerificationRow> report_rows(const CountReport& report, bool per_j, bool cases) {
  const bool has_formulas = report.tau == pattern_1432();
  const auto maybe = [&](std::optional<std::uint64_t> v) {
    return has_formulas ? v : std::nullopt;
  };
  std::vector<VerificationRow> rows;
  const int n = report.n;

  if (per_j) {
    for (const auto& [j, count] : report.per_j) {
      rows.push_back(make_row(n, report.k, std::to_string(j), count,
                              maybe(refined_formula(report, j))));
    }
    if (report.k == 4) {
      std::uint64_t tail = 0;
      for (const auto& [j, count] : report.per_j) {
        tail += j >= 4 ? count : 0;
      }
      std::optional<std::uint64_t> f;
      if (n >= 6) {
        f = delta4_refined_formula(n, Delta4Slot::tail).get();
      }
      rows.push_back(make_row(n, report.k, "tail", tail, maybe(f)));
    }
  }

  if (cases && report.delta4_cases) {
    using C = Delta4Case;
    for (C c : {C::i, C::ii}) {
      rows.push_back(make_row(n, report.k, std::string(to_string(c)), report.case_total(c),
                              maybe(delta4_case_formula(n, c).get())));
    }
    for (int j = 4; j <= n - 2; ++j) {
      for (C c : {C::iii, C::iv}) {
        rows.push_back(make_row(n, report.k, std::string(to_string(c)) + ":" + std::to_string(j),
                                report.case_count(j, c),
                                maybe(delta4_case_formula(n, c, j).get())));
      }
    }
    for (C c : {C::j_eq_n_minus_1, C::j_eq_n}) {
      rows.push_back(make_row(n, report.k, std::string(to_string(c)), report.case_total(c),
                              maybe(delta4_case_formula(n, c).get())));
    }
  }

  rows.push_back(make_row(n, report.k, "total", report.total, maybe(total_value(report))));
  return rows;
}

std::vector<VerificationRow> verification_table(int n_min, int n_max,
                                                const std::vector<int>& ks, unsigned threads) {
  if (n_min < 5 || n_max < n_min || n_max > kMaxEnumerationSize) {
    throw DomainError("verification range must satisfy 5 <= n_min <= n_max <= 12");
  }
  if (ks.empty()) {
    throw DomainError("at least one k is required");
  }
  for (int k : ks) {
    if (k < 3) {
      throw DomainError("k must be at least 3");
    }
  }
  std::vector<VerificationRow> table;
  for (int k : ks) {
    for (int n = n_min; n <= n_max; ++n) {
      const CountReport report = count_brute_partitioned(ClassQuery::make(n, k), threads);
      for (auto& row : report_rows(report, true, true)) {
        if (row.formula) {
          table.push_back(std::move(row));
        }
      }
      if (k >= 5) {
        const CountReport free =
            count_brute_partitioned(ClassQuery::make(n, std::nullopt), threads);
        table.push_back(make_row(n, k, "k-free", free.total, total_formula(n, k).get()));
      }
    }
  }
  return table;
}

bool all_match(const std::vector<VerificationRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.match; });
}

namespace {

std::string k_text(const std::optional<int>& k) { return k ? std::to_string(*k) : "none"; }

std::string formula_text(const std::optional<std::uint64_t>& f) {
  return f ? std::to_string(*f) : "n/a";
}

template <typename T>
T parse_number(const std::string& field) {
  T v{};
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), last, v);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("not a number: '" + field + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(line);
  while (std::getline(in, item, sep)) {
    out.push_back(item);
  }
  if (!line.empty() && line.back() == sep) {
    out.emplace_back();
  }
  return out;
}

} // namespace

std::string to_csv(const std::vector<VerificationRow>& rows) {
  std::string out = "n,k,j,brute,formula,match\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + k_text(r.k) + ',' + r.j + ',' + std::to_string(r.brute) +
           ',' + formula_text(r.formula) + ',' + (r.match ? "true" : "false") + '\n';
  }
  return out;
}

std::vector<VerificationRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "n,k,j,brute,formula,match") {
    throw std::invalid_argument("missing CSV header");
  }
  std::vector<VerificationRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 6) {
      throw std::invalid_argument("expected 6 fields in '" + line + "'");
    }
    VerificationRow r;
    r.n = parse_number<int>(f[0]);
    if (f[1] != "none") {
      r.k = parse_number<int>(f[1]);
    }
    r.j = f[2];
    r.brute = parse_number<std::uint64_t>(f[3]);
    if (f[4] != "n/a") {
      r.formula = parse_number<std::uint64_t>(f[4]);
    }
    if (f[5] != "true" && f[5] != "false") {
      throw std::invalid_argument("match must be true or false");
    }
    r.match = f[5] == "true";
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string to_json(const std::vector<VerificationRow>& rows) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    obj["n"] = r.n;
    obj["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
    obj["j"] = r.j;
    obj["brute"] = r.brute;
    obj["formula"] = r.formula ? nlohmann::ordered_json(*r.formula) : nlohmann::ordered_json(nullptr);
    obj["match"] = r.match;
    array.push_back(std::move(obj));
  }
  return array.dump(2) + "\n";
}

std::string render_text(const std::vector<VerificationRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "n" << std::setw(6) << "k" << std::setw(8) << "j"
      << std::right << std::setw(12) << "brute" << std::setw(12) << "formula" << "  match\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(4) << r.n << std::setw(6) << k_text(r.k) << std::setw(8) << r.j
        << std::right << std::setw(12) << r.brute << std::setw(12) << formula_text(r.formula)
        << "  " << (r.formula ? (r.match ? "yes" : "NO") : "-") << '\n';
  }
  return out.str();
}

std::vector<BFileEntry> formula_sequence(int k, int n_min, int n_max) {
  if (n_min < 5 || n_max < n_min || n_max > kMaxFormulaSize) {
    throw DomainError("sequence range must satisfy 5 <= n_min <= n_max <= 20");
  }
  std::vector<BFileEntry> out;
  for (int n = n_min; n <= n_max; ++n) {
    out.push_back({n, total_formula(n, k).value()});
  }
  return out;
}

std::vector<BFileEntry> brute_sequence(int k, int n_min, int n_max, unsigned threads) {
  if (k < 3) {
    throw DomainError("k must be at least 3");
  }
  if (n_min < 2 || n_max < n_min || n_max > kMaxEnumerationSize) {
    throw DomainError("oracle range must satisfy 2 <= n_min <= n_max <= 12");
  }
  std::vector<BFileEntry> out;
  for (int n = n_min; n <= n_max; ++n) {
    out.push_back({n, count_brute_partitioned(ClassQuery::make(n, k), threads).total});
  }
  return out;
}

std::string to_bfile(const std::vector<BFileEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += std::to_string(e.n) + ' ' + std::to_string(e.value) + '\n';
  }
  return out;
}

std::vector<BFileEntry> parse_bfile(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<BFileEntry> out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') {
      continue;
    }
    std::istringstream fields(line.substr(start));
    std::string a;
    std::string b;
    std::string extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra)) {
      throw std::invalid_argument("b-file line must hold two fields: '" + line + "'");
    }
    out.push_back({parse_number<int>(a), parse_number<std::uint64_t>(b)});
  }
  return out;
}

std::vector<VerificationRow> compare_bfile(const std::vector<BFileEntry>& entries, int k,
                                           unsigned threads) {
  std::vector<VerificationRow> rows;
  for (const auto& e : entries) {
    if (e.n < 2 || e.n > kMaxEnumerationSize) {
      continue;
    }
    const auto brute = count_brute_partitioned(ClassQuery::make(e.n, k), threads).total;
    rows.push_back(make_row(e.n, k, "bfile", brute, e.value));
  }
  return rows;
}

} // namespace cyclicperm
