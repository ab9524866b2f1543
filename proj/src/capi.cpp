#include "partparity/partparity.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "adh.hpp"
#include "core_partitions.hpp"
#include "parity.hpp"
#include "verify.hpp"

using namespace partparity;

struct pp_count_table {
  CountTable table;
};

struct pp_parity_report {
  ParityReport report;
};

struct pp_verify_result {
  std::vector<SuiteResult> suites;
};

namespace {

thread_local std::string last_error;

pp_status fail(pp_status status, const char* what) {
  last_error = what;
  return status;
}

// Maps the exception taxonomy of the C++ core onto status codes.
template <class F>
pp_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return PP_OK;
  } catch (const InternalError& e) {
    return fail(PP_ERR_INTERNAL, e.what());
  } catch (const std::domain_error& e) {
    return fail(PP_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PP_ERR_ALLOC, "out of memory");
  } catch (const std::exception& e) {
    return fail(PP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PP_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* name) {
  if (!p) throw std::invalid_argument(std::string(name) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const BigInt& v) { *out = dup_string(v.get_str()); }

pp_pell_witness to_c(const PellWitness& w) {
  return {w.p, w.y0, w.x0, w.residue12(), w.sign};
}

const SuiteResult* suite_at(const pp_verify_result* r, std::size_t k) {
  return (r && k < r->suites.size()) ? &r->suites[k] : nullptr;
}

}  // namespace

extern "C" {

const char* pp_version(void) { return PARTPARITY_VERSION; }

const char* pp_status_string(pp_status status) {
  switch (status) {
    case PP_OK: return "ok";
    case PP_ERR_DOMAIN: return "domain error";
    case PP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PP_ERR_INTERNAL: return "internal invariant violated";
    case PP_ERR_ALLOC: return "allocation failure";
  }
  return "unknown status";
}

const char* pp_last_error(void) { return last_error.c_str(); }

void pp_string_free(char* s) { std::free(s); }

pp_status pp_count_table_new(uint32_t n_max, pp_count_table** out) {
  return guarded([&] {
    need(out, "out");
    *out = new pp_count_table{build_count_table(n_max)};
  });
}

void pp_count_table_free(pp_count_table* table) { delete table; }

uint32_t pp_count_table_n_max(const pp_count_table* table) {
  return table ? table->table.n_max() : 0;
}

pp_status pp_count_table_get(const pp_count_table* table, int64_t n, char** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    put(out, table->table.at(n));
  });
}

pp_status pp_for_each_partition(pp_partition_kind kind, uint32_t n,
                                pp_partition_visitor visit, void* user) {
  return guarded([&] {
    need(reinterpret_cast<const void*>(visit), "visit");
    auto drive = [&](auto stream) {
      while (const Partition* pi = stream.next()) {
        const auto parts = pi->parts();
        if (visit(parts.data(), parts.size(), user)) break;
      }
    };
    switch (kind) {
      case PP_ALL_PARTITIONS: drive(PartitionStream(n)); break;
      case PP_DISTINCT_PARTITIONS: drive(DistinctPartitionStream(n)); break;
      case PP_C_PARTITIONS: drive(CPartitionStream(n)); break;
      default: throw std::invalid_argument("unknown partition kind");
    }
  });
}

pp_status pp_signed_factorize(uint64_t m, pp_prime_power* factors, size_t capacity,
                              size_t* count) {
  return guarded([&] {
    need(count, "count");
    if (capacity) need(factors, "factors");
    const auto f = signed_factorize(m);
    *count = f.factors.size();
    for (std::size_t k = 0; k < f.factors.size() && k < capacity; ++k)
      factors[k] = {f.factors[k].p.value(), f.factors[k].e};
  });
}

pp_status pp_pell_witness_of(int64_t p, pp_pell_witness* out) {
  return guarded([&] {
    need(out, "out");
    *out = to_c(pell_witness(p));
  });
}

pp_status pp_pell_search(int64_t p, pp_pell_visitor visit, void* user,
                         pp_pell_witness* out) {
  return guarded([&] {
    need(out, "out");
    const auto w = pell_search(p, [&](const PellProbe& probe) {
      if (!visit) return;
      const pp_pell_probe c{probe.y, probe.value, probe.square ? 1 : 0, probe.root};
      visit(&c, user);
    });
    *out = to_c(w);
  });
}

pp_status pp_t_prime_power(int64_t p, uint32_t e, int64_t* value, const char** rule) {
  return guarded([&] {
    need(value, "value");
    const SignedPrime sp(p);
    if (rule) *rule = describe(t_case(sp, e));
    *value = t_prime_power(sp, e);
  });
}

pp_status pp_t_of(uint64_t m, int64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = t_of(m);
  });
}

pp_status pp_s_of(uint64_t i, int64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = s_of(i);
  });
}

pp_status pp_s_oracle(uint32_t i, int64_t* out) {
  return guarded([&] {
    need(out, "out");
    if (i == 0) throw std::domain_error("s_oracle needs i >= 1");
    *out = s_oracle(i);
  });
}

pp_status pp_stable_row_of(uint64_t i, pp_stable_row* out) {
  return guarded([&] {
    need(out, "out");
    const STableRow row = s_table_row(i);
    *out = {row.i, row.m, row.has_witness ? 1 : 0,
            row.has_witness ? to_c(row.witness) : pp_pell_witness{}, row.s};
  });
}

pp_status pp_parity_counts(const pp_count_table* table, uint32_t n,
                           pp_parity_report** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    *out = new pp_parity_report{parity_counts(n, table->table)};
  });
}

pp_status pp_parity_counts_oracle(uint32_t n, pp_parity_report** out) {
  return guarded([&] {
    need(out, "out");
    *out = new pp_parity_report{parity_counts_oracle(n)};
  });
}

void pp_parity_report_free(pp_parity_report* report) { delete report; }

uint32_t pp_parity_report_n(const pp_parity_report* report) {
  return report ? report->report.n : 0;
}

pp_status pp_parity_report_field(const pp_parity_report* report, pp_report_field field,
                                 char** out) {
  return guarded([&] {
    need(report, "report");
    need(out, "out");
    const ParityReport& r = report->report;
    switch (field) {
      case PP_FIELD_P_N: put(out, r.p_n); break;
      case PP_FIELD_DIFF: put(out, r.diff); break;
      case PP_FIELD_P_ODD: put(out, r.p_odd); break;
      case PP_FIELD_P_EVEN: put(out, r.p_even); break;
      default: throw std::invalid_argument("unknown report field");
    }
  });
}

pp_status pp_parity_difference(const pp_count_table* table, uint32_t n, char** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    put(out, parity_difference(n, table->table));
  });
}

pp_status pp_t_sum_enum(uint32_t n, char** out) {
  return guarded([&] {
    need(out, "out");
    if (n == 0) throw std::domain_error("t_sum_enum needs n >= 1");
    put(out, BigInt(t_sum_enum(n)));
  });
}

pp_status pp_t_sum_formula(const pp_count_table* table, uint32_t n, char** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    put(out, t_sum_formula(n, table->table));
  });
}

pp_status pp_count_smallest_part_pie(const pp_count_table* table, uint32_t n,
                                     uint32_t i, char** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    put(out, count_smallest_part_pie(n, i, table->table));
  });
}

pp_status pp_c_signed_convolution(const pp_count_table* table, uint32_t n, char** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    put(out, c_signed_convolution(n, table->table));
  });
}

pp_status pp_distinct_signed_convolution(const pp_count_table* table, uint32_t n,
                                         char** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    put(out, distinct_signed_convolution(n, table->table));
  });
}

pp_status pp_verify_run(const pp_verify_options* options, pp_verify_result** out) {
  return guarded([&] {
    need(options, "options");
    need(out, "out");
    VerifyOptions o;
    o.max_n = options->max_n;
    o.max_i = options->max_i;
    if (options->inject_fault) o.inject_fault = options->inject_fault;
    *out = new pp_verify_result{run_verification(o)};
  });
}

void pp_verify_result_free(pp_verify_result* result) { delete result; }

size_t pp_verify_suite_count(const pp_verify_result* result) {
  return result ? result->suites.size() : 0;
}

const char* pp_verify_suite_name(const pp_verify_result* result, size_t k) {
  const auto* s = suite_at(result, k);
  return s ? s->name.c_str() : "";
}

int pp_verify_suite_passed(const pp_verify_result* result, size_t k) {
  const auto* s = suite_at(result, k);
  return s && s->passed ? 1 : 0;
}

uint64_t pp_verify_suite_checks(const pp_verify_result* result, size_t k) {
  const auto* s = suite_at(result, k);
  return s ? s->checks : 0;
}

const char* pp_verify_suite_detail(const pp_verify_result* result, size_t k) {
  const auto* s = suite_at(result, k);
  return s ? s->counterexample.c_str() : "";
}

int pp_verify_all_passed(const pp_verify_result* result) {
  if (!result) return 0;
  for (const auto& s : result->suites)
    if (!s.passed) return 0;
  return 1;
}

}  // extern "C"
