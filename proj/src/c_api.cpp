#include "cyclicperm/cyclicperm.h"

#include "cyclicperm/cyclic_avoidance.hpp"
#include "cyclicperm/enumeration.hpp"
#include "cyclicperm/equivalence.hpp"
#include "cyclicperm/errors.hpp"
#include "cyclicperm/families.hpp"
#include "cyclicperm/formulas.hpp"
#include "cyclicperm/verification.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <thread>

using namespace cyclicperm;

struct cp_report {
  CountReport report;
};

struct cp_table {
  std::vector<VerificationRow> rows;
};

struct cp_family_list {
  std::vector<FamilyMember> members;
  std::vector<std::vector<int>> cycles;
  std::vector<int> verified;
};

namespace {

thread_local std::string last_error;

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

cp_status fail(cp_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating the core exception types into status codes.
template <typename Body>
cp_status guarded(Body&& body) {
  try {
    body();
    return CP_OK;
  } catch (const NotAPermutation& e) {
    return fail(CP_ERR_NOT_A_PERMUTATION, e.what());
  } catch (const NotCyclic& e) {
    return fail(CP_ERR_NOT_CYCLIC, e.what());
  } catch (const DomainError& e) {
    return fail(CP_ERR_DOMAIN, e.what());
  } catch (const LimitExceeded& e) {
    return fail(CP_ERR_LIMIT_EXCEEDED, e.what());
  } catch (const IoError& e) {
    return fail(CP_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CP_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* message) {
  if (!condition) {
    throw std::invalid_argument(message);
  }
}

std::vector<Letter> to_vector(const int* data, size_t n) {
  require(data != nullptr || n == 0, "null array");
  return std::vector<Letter>(data, data + n);
}

std::optional<int> k_of(int k) { return k == CP_K_NONE ? std::nullopt : std::optional<int>(k); }

Pattern tau_of(const char* tau) { return tau ? Pattern::parse(tau) : pattern_1432(); }

unsigned width_of(unsigned threads) {
  if (threads != 0) {
    return threads;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

char* copy_string(const std::string& s) {
  auto* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const std::vector<VerificationRow>& rows, cp_format format) {
  switch (format) {
  case CP_FORMAT_TEXT: return render_text(rows);
  case CP_FORMAT_CSV: return to_csv(rows);
  case CP_FORMAT_JSON: return to_json(rows);
  }
  throw std::invalid_argument("unknown format");
}

void write_file(const char* path, const std::string& text) {
  require(path != nullptr, "null path");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError(std::string("cannot open '") + path + "' for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw IoError(std::string("write to '") + path + "' failed");
  }
}

std::string read_file(const char* path) {
  require(path != nullptr, "null path");
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(std::string("cannot open '") + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<BFileEntry> bfile_entries(int k, int n_min, int n_max, int from_oracle,
                                      unsigned threads) {
  return from_oracle ? brute_sequence(k, n_min, n_max, width_of(threads))
                     : formula_sequence(k, n_min, n_max);
}

} // namespace

extern "C" {

const char* cp_version(void) { return "1.0.0"; }

const char* cp_status_name(cp_status status) {
  switch (status) {
  case CP_OK: return "ok";
  case CP_ERR_INVALID_ARGUMENT: return "invalid argument";
  case CP_ERR_NOT_A_PERMUTATION: return "not a permutation";
  case CP_ERR_NOT_CYCLIC: return "not cyclic";
  case CP_ERR_DOMAIN: return "outside domain";
  case CP_ERR_LIMIT_EXCEEDED: return "limit exceeded";
  case CP_ERR_IO: return "i/o error";
  case CP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cp_last_error(void) { return last_error.c_str(); }

void cp_string_free(char* text) { delete[] text; }

cp_status cp_standard_cycle_form(const int* one_line, size_t n, int* out_cycle) {
  return guarded([&] {
    require(out_cycle != nullptr, "null output");
    const auto cf = standard_cycle_form(make_permutation(to_vector(one_line, n)));
    std::copy(cf.letters().begin(), cf.letters().end(), out_cycle);
  });
}

cp_status cp_to_one_line(const int* cycle, size_t n, int* out_one_line) {
  return guarded([&] {
    require(out_one_line != nullptr, "null output");
    const auto p = to_one_line(CycleForm(to_vector(cycle, n)));
    std::copy(p.values().begin(), p.values().end(), out_one_line);
  });
}

cp_status cp_contains(const int* word, size_t n, const char* pattern, int* out_contains) {
  return guarded([&] {
    require(pattern != nullptr && out_contains != nullptr, "null argument");
    const auto w = to_vector(word, n);
    auto sorted = w;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "word entries must be distinct");
    *out_contains = contains(w, Pattern::parse(pattern)) ? 1 : 0;
  });
}

cp_status cp_lds_length(const int* word, size_t n, int* out_length) {
  return guarded([&] {
    require(out_length != nullptr, "null output");
    *out_length = lds_length(to_vector(word, n));
  });
}

cp_status cp_is_member(const int* cycle, size_t n, int k, const char* tau, int* out_member) {
  return guarded([&] {
    require(out_member != nullptr, "null output");
    const CycleForm cf(to_vector(cycle, n));
    *out_member = is_member(cf, ClassQuery::make(cf.size(), k_of(k), tau_of(tau))) ? 1 : 0;
  });
}

cp_status cp_count(int n, int k, const char* tau, unsigned threads, cp_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = nullptr;
    auto q = ClassQuery::make(n, k_of(k), tau_of(tau));
    *out = new cp_report{count_brute_partitioned(q, width_of(threads))};
  });
}

void cp_report_free(cp_report* report) { delete report; }

int cp_report_n(const cp_report* report) { return report ? report->report.n : 0; }

int cp_report_k(const cp_report* report) {
  return report && report->report.k ? *report->report.k : CP_K_NONE;
}

uint64_t cp_report_total(const cp_report* report) { return report ? report->report.total : 0; }

cp_status cp_report_per_j(const cp_report* report, int j, uint64_t* out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    auto it = report->report.per_j.find(j);
    if (it == report->report.per_j.end()) {
      throw std::invalid_argument("j must lie in [2, n]");
    }
    *out = it->second;
  });
}

cp_status cp_report_case(const cp_report* report, int j, const char* case_tag, uint64_t* out) {
  return guarded([&] {
    require(report != nullptr && case_tag != nullptr && out != nullptr, "null argument");
    const auto c = parse_delta4_case(case_tag);
    require(c.has_value(), "unknown case tag");
    if (!report->report.delta4_cases) {
      throw DomainError("report carries no case breakdown");
    }
    *out = j <= 0 ? report->report.case_total(*c) : report->report.case_count(j, *c);
  });
}

cp_status cp_total_formula(int n, int k, uint64_t* out_value, int* out_domain_ok) {
  return guarded([&] {
    require(out_value != nullptr && out_domain_ok != nullptr, "null output");
    const auto f = total_formula(n, k);
    *out_domain_ok = f.domain_ok() ? 1 : 0;
    *out_value = f.domain_ok() ? f.value() : 0;
  });
}

cp_status cp_avoiding_321_2143_total(int n, uint64_t* out_value) {
  return guarded([&] {
    require(out_value != nullptr, "null output");
    *out_value = avoiding_321_2143_total(n).value();
  });
}

cp_status cp_table_from_report(const cp_report* report, int per_j, int cases, cp_table** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new cp_table{report_rows(report->report, per_j != 0, cases != 0)};
  });
}

cp_status cp_verify(int n_min, int n_max, const int* ks, size_t k_count, unsigned threads,
                    cp_table** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = nullptr;
    *out = new cp_table{verification_table(n_min, n_max, to_vector(ks, k_count),
                                           width_of(threads))};
  });
}

size_t cp_table_size(const cp_table* table) { return table ? table->rows.size() : 0; }

cp_status cp_table_row(const cp_table* table, size_t index, cp_row* out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    if (index >= table->rows.size()) {
      throw std::invalid_argument("row index out of range");
    }
    const auto& r = table->rows[index];
    *out = cp_row{r.n,          r.k.value_or(CP_K_NONE), r.j.c_str(), r.brute,
                  r.formula ? 1 : 0, r.formula.value_or(0), r.match ? 1 : 0};
  });
}

int cp_table_all_match(const cp_table* table) { return table && all_match(table->rows) ? 1 : 0; }

int cp_table_no_mismatch(const cp_table* table) {
  if (!table) {
    return 0;
  }
  return std::none_of(table->rows.begin(), table->rows.end(),
                      [](const VerificationRow& r) { return r.formula && !r.match; })
             ? 1
             : 0;
}

cp_status cp_table_render(const cp_table* table, cp_format format, char** out_text) {
  return guarded([&] {
    require(table != nullptr && out_text != nullptr, "null argument");
    *out_text = copy_string(render(table->rows, format));
  });
}

cp_status cp_table_write(const cp_table* table, cp_format format, const char* path) {
  return guarded([&] {
    require(table != nullptr, "null table");
    write_file(path, render(table->rows, format));
  });
}

void cp_table_free(cp_table* table) { delete table; }

cp_status cp_bfile_render(int k, int n_min, int n_max, int from_oracle, unsigned threads,
                          char** out_text) {
  return guarded([&] {
    require(out_text != nullptr, "null output");
    *out_text = copy_string(to_bfile(bfile_entries(k, n_min, n_max, from_oracle, threads)));
  });
}

cp_status cp_bfile_write(int k, int n_min, int n_max, int from_oracle, unsigned threads,
                         const char* path) {
  return guarded([&] {
    write_file(path, to_bfile(bfile_entries(k, n_min, n_max, from_oracle, threads)));
  });
}

cp_status cp_bfile_compare(const char* path, int k, unsigned threads, cp_table** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = nullptr;
    if (k < 3) {
      throw DomainError("k must be at least 3");
    }
    const auto entries = parse_bfile(read_file(path));
    *out = new cp_table{compare_bfile(entries, k, width_of(threads))};
  });
}

cp_status cp_equivalence(cp_check check, int n_max, cp_equivalence_result* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(check >= CP_CHECK_ROTATIONS_VS_321_2143 && check <= CP_CHECK_DELTA5_REDUNDANT,
            "unknown check");
    const auto r = run_equivalence(static_cast<EquivalenceCheck>(check), n_max);
    *out = cp_equivalence_result{};
    out->n_min = r.n_min;
    out->n_max = r.n_max;
    out->forms_checked = r.forms_checked;
    out->counterexamples = r.counterexamples;
    if (r.first_counterexample) {
      const auto letters = r.first_counterexample->letters();
      std::copy(letters.begin(), letters.end(), out->first_counterexample);
      out->first_counterexample_size = letters.size();
    }
  });
}

cp_status cp_families(int n, int k, cp_family_list** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = nullptr;
    auto list = std::make_unique<cp_family_list>();
    list->members = families(n, k);
    for (const auto& m : list->members) {
      list->cycles.emplace_back(m.cf.letters().begin(), m.cf.letters().end());
      list->verified.push_back(is_member(m.cf, ClassQuery::make(n, m.k)) ? 1 : 0);
    }
    *out = list.release();
  });
}

size_t cp_family_list_size(const cp_family_list* list) {
  return list ? list->members.size() : 0;
}

cp_status cp_family_member(const cp_family_list* list, size_t index, const char** tag,
                           const int** params, size_t* param_count, const int** cycle,
                           size_t* cycle_size, int* verified) {
  return guarded([&] {
    require(list != nullptr, "null list");
    if (index >= list->members.size()) {
      throw std::invalid_argument("member index out of range");
    }
    const auto& m = list->members[index];
    if (tag) *tag = m.family_tag.c_str();
    if (params) *params = m.parameters.data();
    if (param_count) *param_count = m.parameters.size();
    if (cycle) *cycle = list->cycles[index].data();
    if (cycle_size) *cycle_size = list->cycles[index].size();
    if (verified) *verified = list->verified[index];
  });
}

void cp_family_list_free(cp_family_list* list) { delete list; }

} // extern "C"
