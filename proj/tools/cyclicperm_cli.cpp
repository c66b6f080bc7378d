// Command-line front end. Talks to the library only through cyclicperm.h.

#include "cyclicperm/cyclicperm.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct TableDeleter {
  void operator()(cp_table* t) const { cp_table_free(t); }
};
struct ReportDeleter {
  void operator()(cp_report* r) const { cp_report_free(r); }
};
struct FamilyDeleter {
  void operator()(cp_family_list* f) const { cp_family_list_free(f); }
};
struct StringDeleter {
  void operator()(char* s) const { cp_string_free(s); }
};

using TablePtr = std::unique_ptr<cp_table, TableDeleter>;
using ReportPtr = std::unique_ptr<cp_report, ReportDeleter>;
using FamilyPtr = std::unique_ptr<cp_family_list, FamilyDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Domain and argument errors are usage errors; anything else is a failure.
int report_error(cp_status status) {
  std::cerr << "error: " << cp_status_name(status) << ": " << cp_last_error() << '\n';
  switch (status) {
  case CP_ERR_INVALID_ARGUMENT:
  case CP_ERR_NOT_A_PERMUTATION:
  case CP_ERR_NOT_CYCLIC:
  case CP_ERR_DOMAIN:
  case CP_ERR_LIMIT_EXCEEDED:
    return kExitUsage;
  default:
    return kExitMismatch;
  }
}

int parse_k(const std::string& text) {
  if (text == "none") {
    return CP_K_NONE;
  }
  try {
    std::size_t used = 0;
    const int k = std::stoi(text, &used);
    if (used == text.size() && k >= 3) {
      return k;
    }
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("-k", "expected an integer >= 3 or 'none', got '" + text + "'");
}

cp_format parse_format(const std::string& text) {
  if (text == "csv") return CP_FORMAT_CSV;
  if (text == "json") return CP_FORMAT_JSON;
  return CP_FORMAT_TEXT;
}

int print_table(const cp_table* table, cp_format format) {
  char* raw = nullptr;
  if (auto s = cp_table_render(table, format, &raw); s != CP_OK) {
    return report_error(s);
  }
  StringPtr text(raw);
  std::fputs(text.get(), stdout);
  return kExitOk;
}

std::string join(const int* xs, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    out += (i ? "," : "") + std::to_string(xs[i]);
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic permutations avoiding a decreasing pattern in one-line notation and "
               "1432 in every cycle form"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads for exhaustive counts (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  // count
  auto* count = app.add_subcommand("count", "exhaustive count for one (n, k, tau)");
  int count_n = 0;
  std::string count_k;
  std::string count_tau = "1432";
  bool per_j = false;
  bool cases = false;
  std::string count_format = "text";
  count->add_option("-n", count_n, "permutation size (2..12)")->required();
  count->add_option("-k", count_k, "decreasing pattern length (>= 3) or 'none'")->required();
  count->add_option("--tau", count_tau, "length-4 pattern avoided by every cycle form");
  count->add_flag("--per-j", per_j, "break the count down by j = c_2");
  count->add_flag("--cases", cases, "case breakdown for j >= 4 (k = 4, tau = 1432, n >= 6)");
  count->add_option("--format", count_format)->check(CLI::IsMember({"text", "csv", "json"}));
  count->add_option("--threads", threads)->check(CLI::NonNegativeNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "compare oracle counts with the closed forms");
  int n_min = 5;
  int n_max = 10;
  std::vector<int> ks{3, 4, 5};
  std::string verify_format = "text";
  std::string bfile_path;
  verify->add_option("--n-min", n_min)->required();
  verify->add_option("--n-max", n_max)->required();
  verify->add_option("--k", ks, "comma separated list of k >= 3")->delimiter(',')->required();
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--bfile", bfile_path, "also compare a two-column 'n a(n)' file (single k)");
  verify->add_option("--threads", threads)->check(CLI::NonNegativeNumber);

  // equiv
  auto* equiv = app.add_subcommand("equiv", "exhaustive structural equivalence checks");
  std::string check_name;
  int equiv_n_max = 8;
  equiv->add_option("--check", check_name)
      ->required()
      ->check(CLI::IsMember({"rotations", "c2-structure", "delta5", "prop21", "lemma22", "lemma41"}));
  equiv->add_option("--n-max", equiv_n_max)->required();

  // families
  auto* fam = app.add_subcommand("families", "list the explicit member families");
  int fam_n = 0;
  int fam_k = 0;
  bool fam_verify = false;
  fam->add_option("-n", fam_n)->required();
  fam->add_option("-k", fam_k, "3 or 4")->required();
  fam->add_flag("--verify", fam_verify, "re-check membership and fail on any non-member");

  // export
  auto* exp = app.add_subcommand("export", "write verification tables or b-files");
  std::string export_format;
  std::string out_path;
  int export_n_min = 5;
  int export_n_max = 10;
  std::vector<int> export_ks{3, 4, 5};
  std::string source = "formula";
  exp->add_option("--format", export_format)
      ->required()
      ->check(CLI::IsMember({"csv", "json", "bfile"}));
  exp->add_option("--out", out_path)->required();
  exp->add_option("--n-min", export_n_min);
  exp->add_option("--n-max", export_n_max);
  exp->add_option("--k", export_ks, "k list for tables; exactly one k for b-files")
      ->delimiter(',');
  exp->add_option("--source", source, "b-file values from 'formula' or 'oracle'")
      ->check(CLI::IsMember({"formula", "oracle"}));
  exp->add_option("--threads", threads)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*count) {
    int k = 0;
    try {
      k = parse_k(count_k);
    } catch (const CLI::ValidationError& e) {
      std::cerr << e.what() << '\n';
      return kExitUsage;
    }
    if (count_n < 2 || count_n > 12) {
      std::cerr << "error: -n must lie in [2, 12]\n";
      return kExitUsage;
    }
    cp_report* raw = nullptr;
    if (auto s = cp_count(count_n, k, count_tau.c_str(), threads, &raw); s != CP_OK) {
      return report_error(s);
    }
    ReportPtr report(raw);
    cp_table* table_raw = nullptr;
    if (auto s = cp_table_from_report(report.get(), per_j, cases, &table_raw); s != CP_OK) {
      return report_error(s);
    }
    TablePtr table(table_raw);
    const auto format = parse_format(count_format);
    if (format == CP_FORMAT_TEXT) {
      std::cout << "n=" << count_n << " k=" << count_k << " tau=" << count_tau << '\n';
    }
    if (int rc = print_table(table.get(), format); rc != kExitOk) {
      return rc;
    }
    return cp_table_no_mismatch(table.get()) ? kExitOk : kExitMismatch;
  }

  if (*verify) {
    cp_table* raw = nullptr;
    if (auto s = cp_verify(n_min, n_max, ks.data(), ks.size(), threads, &raw); s != CP_OK) {
      return report_error(s);
    }
    TablePtr table(raw);
    const auto format = parse_format(verify_format);
    if (int rc = print_table(table.get(), format); rc != kExitOk) {
      return rc;
    }
    bool ok = cp_table_all_match(table.get()) != 0;
    if (!bfile_path.empty()) {
      if (ks.size() != 1) {
        std::cerr << "error: --bfile needs exactly one k\n";
        return kExitUsage;
      }
      cp_table* braw = nullptr;
      if (auto s = cp_bfile_compare(bfile_path.c_str(), ks.front(), threads, &braw); s != CP_OK) {
        return report_error(s);
      }
      TablePtr btable(braw);
      if (int rc = print_table(btable.get(), format); rc != kExitOk) {
        return rc;
      }
      ok = ok && cp_table_all_match(btable.get()) != 0;
    }
    if (format == CP_FORMAT_TEXT) {
      std::cout << (ok ? "all rows match\n" : "MISMATCH\n");
    }
    return ok ? kExitOk : kExitMismatch;
  }

  if (*equiv) {
    const std::map<std::string, cp_check> checks{
        {"rotations", CP_CHECK_ROTATIONS_VS_321_2143}, {"prop21", CP_CHECK_ROTATIONS_VS_321_2143},
        {"c2-structure", CP_CHECK_C2_STRUCTURE},       {"lemma22", CP_CHECK_C2_STRUCTURE},
        {"delta5", CP_CHECK_DELTA5_REDUNDANT},         {"lemma41", CP_CHECK_DELTA5_REDUNDANT}};
    const cp_check check = checks.at(check_name);
    cp_equivalence_result result{};
    if (auto s = cp_equivalence(check, equiv_n_max, &result); s != CP_OK) {
      return report_error(s);
    }
    std::cout << check_name << ": n=" << result.n_min << ".." << result.n_max
              << " forms=" << result.forms_checked
              << " counterexamples=" << result.counterexamples << '\n';
    if (result.first_counterexample_size > 0) {
      std::cout << "first counterexample: ("
                << join(result.first_counterexample, result.first_counterexample_size) << ")\n";
    }
    return result.counterexamples == 0 ? kExitOk : kExitMismatch;
  }

  if (*fam) {
    cp_family_list* raw = nullptr;
    if (auto s = cp_families(fam_n, fam_k, &raw); s != CP_OK) {
      return report_error(s);
    }
    FamilyPtr list(raw);
    bool all_verified = true;
    for (std::size_t i = 0; i < cp_family_list_size(list.get()); ++i) {
      const char* tag = nullptr;
      const int* params = nullptr;
      std::size_t param_count = 0;
      const int* cycle = nullptr;
      std::size_t cycle_size = 0;
      int verified = 0;
      if (auto s = cp_family_member(list.get(), i, &tag, &params, &param_count, &cycle,
                                    &cycle_size, &verified);
          s != CP_OK) {
        return report_error(s);
      }
      all_verified = all_verified && verified;
      std::cout << tag << " [" << join(params, param_count) << "] (" << join(cycle, cycle_size)
                << ")";
      if (fam_verify) {
        std::cout << (verified ? " member" : " NOT A MEMBER");
      }
      std::cout << '\n';
    }
    return fam_verify && !all_verified ? kExitMismatch : kExitOk;
  }

  if (*exp) {
    if (export_format == "bfile") {
      if (export_ks.size() != 1) {
        std::cerr << "error: b-file export needs exactly one k (--k)\n";
        return kExitUsage;
      }
      if (auto s = cp_bfile_write(export_ks.front(), export_n_min, export_n_max,
                                  source == "oracle", threads, out_path.c_str());
          s != CP_OK) {
        return report_error(s);
      }
      return kExitOk;
    }
    cp_table* raw = nullptr;
    if (auto s = cp_verify(export_n_min, export_n_max, export_ks.data(), export_ks.size(),
                           threads, &raw);
        s != CP_OK) {
      return report_error(s);
    }
    TablePtr table(raw);
    if (auto s = cp_table_write(table.get(), parse_format(export_format), out_path.c_str());
        s != CP_OK) {
      return report_error(s);
    }
    return cp_table_all_match(table.get()) ? kExitOk : kExitMismatch;
  }
  return kExitUsage;
}
