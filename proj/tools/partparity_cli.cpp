// partparity command-line tool. Talks to the library through its C API only.
//
// Exit codes: 0 success, 1 verification failure or internal error, 2 usage.

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "partparity/partparity.h"

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct LibraryError {
  pp_status status;
  std::string message;
};

void check(pp_status s) {
  if (s != PP_OK) throw LibraryError{s, pp_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  pp_string_free(s);
  return out;
}

struct TableDeleter {
  void operator()(pp_count_table* t) const { pp_count_table_free(t); }
};
struct ReportDeleter {
  void operator()(pp_parity_report* r) const { pp_parity_report_free(r); }
};
struct VerifyDeleter {
  void operator()(pp_verify_result* r) const { pp_verify_result_free(r); }
};
using TablePtr = std::unique_ptr<pp_count_table, TableDeleter>;
using ReportPtr = std::unique_ptr<pp_parity_report, ReportDeleter>;
using VerifyPtr = std::unique_ptr<pp_verify_result, VerifyDeleter>;

TablePtr make_table(std::uint32_t n_max) {
  pp_count_table* t = nullptr;
  check(pp_count_table_new(n_max, &t));
  return TablePtr(t);
}

Json envelope(const char* command) {
  Json j;
  j["version"] = pp_version();
  j["command"] = command;
  return j;
}

void emit_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// ---------------------------------------------------------------------------

int cmd_p(std::uint32_t n, Format fmt) {
  const TablePtr table = make_table(n);
  char* raw = nullptr;
  check(pp_count_table_get(table.get(), n, &raw));
  const std::string value = take(raw);
  switch (fmt) {
    case Format::Text: std::cout << value << '\n'; break;
    case Format::Csv: std::cout << "n,p\n" << n << ',' << value << '\n'; break;
    case Format::Json: {
      Json j = envelope("p");
      j["report"] = {{"n", n}, {"p", value}};
      emit_json(j);
      break;
    }
  }
  return kExitOk;
}

int cmd_stable(std::uint64_t max, Format fmt) {
  std::vector<pp_stable_row> rows(max);
  for (std::uint64_t i = 1; i <= max; ++i) check(pp_stable_row_of(i, &rows[i - 1]));

  if (fmt == Format::Csv) {
    std::cout << "i,m,y0,x0,residue,s\n";
    for (const auto& r : rows) {
      std::cout << r.i << ',' << r.m << ',';
      if (r.has_witness)
        std::cout << r.witness.y0 << ',' << r.witness.x0 << ',' << r.witness.residue12;
      else
        std::cout << ",,";
      std::cout << ',' << r.s << '\n';
    }
    return kExitOk;
  }
  if (fmt == Format::Json) {
    Json j = envelope("stable");
    Json out = Json::array();
    for (const auto& r : rows) {
      Json row = {{"i", r.i}, {"m", r.m}, {"y0", nullptr}, {"x0", nullptr},
                  {"residue", nullptr}, {"s", std::to_string(r.s)}};
      if (r.has_witness) {
        row["y0"] = r.witness.y0;
        row["x0"] = r.witness.x0;
        row["residue"] = r.witness.residue12;
      }
      out.push_back(std::move(row));
    }
    j["rows"] = std::move(out);
    emit_json(j);
    return kExitOk;
  }

  auto opt = [](bool has, std::uint64_t v) { return has ? std::to_string(v) : "-"; };
  std::printf("%6s %10s %6s %6s %14s %6s\n", "i", "24i+1", "y0", "x0", "x0+3y0 mod 12",
              "S(i)");
  for (const auto& r : rows) {
    const bool w = r.has_witness != 0;
    std::printf("%6llu %10llu %6s %6s %14s %6lld\n",
                static_cast<unsigned long long>(r.i), static_cast<unsigned long long>(r.m),
                opt(w, r.witness.y0).c_str(), opt(w, r.witness.x0).c_str(),
                opt(w, r.witness.residue12).c_str(), static_cast<long long>(r.s));
  }
  std::printf("\nResidues are reduced into 0..11: 11 = -1 and 7 = -5 (mod 12).\n");
  return kExitOk;
}

int cmd_parity(std::uint32_t n, Format fmt) {
  const TablePtr table = make_table(n);
  pp_parity_report* raw = nullptr;
  check(pp_parity_counts(table.get(), n, &raw));
  const ReportPtr report(raw);
  auto field = [&](pp_report_field f) {
    char* s = nullptr;
    check(pp_parity_report_field(report.get(), f, &s));
    return take(s);
  };
  const std::string p = field(PP_FIELD_P_N), diff = field(PP_FIELD_DIFF),
                    odd = field(PP_FIELD_P_ODD), even = field(PP_FIELD_P_EVEN);
  switch (fmt) {
    case Format::Text:
      std::cout << "n = " << n << '\n'
                << "p(n) = " << p << '\n'
                << "P_O(n) - P_E(n) = " << diff << '\n'
                << "P_O(n) = " << odd << '\n'
                << "P_E(n) = " << even << '\n';
      break;
    case Format::Csv:
      std::cout << "n,p,diff,p_odd,p_even\n"
                << n << ',' << p << ',' << diff << ',' << odd << ',' << even << '\n';
      break;
    case Format::Json: {
      Json j = envelope("parity");
      j["report"] = {{"n", n}, {"p", p}, {"diff", diff}, {"p_odd", odd}, {"p_even", even}};
      emit_json(j);
      break;
    }
  }
  return kExitOk;
}

std::string signed_base(std::int64_t p) {
  return p < 0 ? "(" + std::to_string(p) + ")" : std::to_string(p);
}

std::string power_text(std::int64_t p, std::uint32_t e) {
  return e == 1 ? signed_base(p) : signed_base(p) + "^" + std::to_string(e);
}

// Argument of T(...): no parentheses needed around a bare negative prime.
std::string t_arg(std::int64_t p, std::uint32_t e) {
  return e == 1 ? std::to_string(p) : power_text(p, e);
}

int cmd_trace_s(std::uint64_t i, Format fmt) {
  if (fmt == Format::Csv) {
    std::cerr << "trace-s: csv output is not available; use text or json\n";
    return kExitUsage;
  }
  const std::uint64_t m = 24 * i + 1;
  size_t count = 0;
  check(pp_signed_factorize(m, nullptr, 0, &count));
  std::vector<pp_prime_power> factors(count);
  check(pp_signed_factorize(m, factors.data(), factors.size(), &count));
  std::int64_t s = 0;
  check(pp_s_of(i, &s));

  std::ostringstream out;
  Json jfactors = Json::array();
  out << "S(" << i << ") = T(24*" << i << "+1) = T(" << m << ")\n";
  out << m << " =";
  if (factors.empty()) out << " 1 (empty product, T(1) = 1)";
  for (std::size_t k = 0; k < factors.size(); ++k)
    out << (k ? " * " : " ") << power_text(factors[k].p, factors[k].e);
  out << '\n';

  for (const auto& f : factors) {
    const int r24 = static_cast<int>(((f.p % 24) + 24) % 24);
    std::int64_t value = 0;
    const char* rule = nullptr;
    check(pp_t_prime_power(f.p, f.e, &value, &rule));
    out << "  factor " << power_text(f.p, f.e) << ": " << f.p << " = " << r24
        << " (mod 24), exponent " << f.e << (f.e % 2 ? " (odd)" : " (even)") << '\n';
    Json jf = {{"p", f.p}, {"e", f.e}, {"residue24", r24}};
    if (r24 == 1) {
      out << "    sign of T(" << f.p << ") from the least y >= 0 with 6y^2 + "
          << signed_base(f.p) << " a square\n";
      Json probes = Json::array();
      struct Ctx {
        std::ostringstream* out;
        Json* probes;
        std::int64_t p;
      } ctx{&out, &probes, f.p};
      pp_pell_witness w{};
      check(pp_pell_search(
          f.p,
          [](const pp_pell_probe* probe, void* user) {
            auto* c = static_cast<Ctx*>(user);
            *c->out << "      y=" << probe->y << ": 6*" << probe->y << "^2 + "
                    << signed_base(c->p) << " = " << probe->value;
            if (probe->is_square) *c->out << " = " << probe->root << "^2";
            else if (probe->value < 0) *c->out << ", negative";
            else *c->out << ", not a square";
            *c->out << '\n';
            c->probes->push_back({{"y", probe->y},
                                  {"value", probe->value},
                                  {"square", probe->is_square != 0}});
          },
          &ctx, &w));
      out << "    y0 = " << w.y0 << ", x0 = " << w.x0 << ", x0 + 3y0 = " << (w.x0 + 3 * w.y0)
          << " = " << w.residue12 << " (mod 12) -> T(" << f.p << ") = "
          << (w.sign > 0 ? "+2" : "-2") << " (sign " << (w.sign > 0 ? '+' : '-') << ")\n";
      jf["pell"] = {{"probes", std::move(probes)}, {"y0", w.y0}, {"x0", w.x0},
                    {"residue12", w.residue12}, {"sign", w.sign}};
    }
    out << "    rule: " << rule << "\n"
        << "    T(" << t_arg(f.p, f.e) << ") = " << value << '\n';
    jf["rule"] = rule;
    jf["value"] = value;
    jfactors.push_back(std::move(jf));
  }
  out << "S(" << i << ") = " << s << '\n';

  if (fmt == Format::Json) {
    Json j = envelope("trace-s");
    j["report"] = {{"i", i}, {"m", m}, {"factors", std::move(jfactors)},
                   {"s", std::to_string(s)}};
    emit_json(j);
  } else {
    std::cout << out.str();
  }
  return kExitOk;
}

int cmd_verify(std::uint32_t max_n, std::uint32_t max_i, const std::string& fault,
               Format fmt) {
  pp_verify_options opts{max_n, max_i, fault.empty() ? nullptr : fault.c_str()};
  pp_verify_result* raw = nullptr;
  check(pp_verify_run(&opts, &raw));
  const VerifyPtr result(raw);
  const std::size_t count = pp_verify_suite_count(result.get());
  const bool ok = pp_verify_all_passed(result.get()) != 0;

  switch (fmt) {
    case Format::Text:
      for (std::size_t k = 0; k < count; ++k) {
        const bool passed = pp_verify_suite_passed(result.get(), k) != 0;
        std::cout << (passed ? "PASS " : "FAIL ") << pp_verify_suite_name(result.get(), k)
                  << " (" << pp_verify_suite_checks(result.get(), k) << " checks)";
        if (!passed) std::cout << ": " << pp_verify_suite_detail(result.get(), k);
        std::cout << '\n';
      }
      std::cout << (ok ? "all suites passed" : "verification FAILED") << " (max-n "
                << max_n << ", max-i " << max_i << ")\n";
      break;
    case Format::Csv:
      std::cout << "suite,status,checks,detail\n";
      for (std::size_t k = 0; k < count; ++k)
        std::cout << pp_verify_suite_name(result.get(), k) << ','
                  << (pp_verify_suite_passed(result.get(), k) ? "pass" : "fail") << ','
                  << pp_verify_suite_checks(result.get(), k) << ','
                  << csv_field(pp_verify_suite_detail(result.get(), k)) << '\n';
      break;
    case Format::Json: {
      Json j = envelope("verify");
      Json rows = Json::array();
      for (std::size_t k = 0; k < count; ++k)
        rows.push_back({{"suite", pp_verify_suite_name(result.get(), k)},
                        {"passed", pp_verify_suite_passed(result.get(), k) != 0},
                        {"checks", pp_verify_suite_checks(result.get(), k)},
                        {"detail", pp_verify_suite_detail(result.get(), k)}});
      j["rows"] = std::move(rows);
      j["passed"] = ok;
      emit_json(j);
      break;
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partitions of n counted by the parity of their smallest part"};
  app.set_version_flag("--version", std::string(pp_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Format fmt = Format::Text;
  const std::map<std::string, Format> formats = {
      {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--format", fmt, "Output format: text, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::uint32_t n = 0;
  std::uint64_t max_rows = 37, trace_i = 1;
  std::uint32_t max_n = 20, max_i = 20;
  std::string fault;

  auto* p = app.add_subcommand("p", "Print the number of partitions p(n)");
  p->add_option("n", n, "Nonnegative integer")->required();

  auto* stable = app.add_subcommand("stable", "Tabulate S(i) with Pell sign witnesses");
  stable->add_option("--max", max_rows, "Last index i (default 37)")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));

  auto* parity = app.add_subcommand("parity", "P_O(n) and P_E(n) via the S-convolution");
  parity->add_option("n", n, "Positive integer")->required()->check(CLI::PositiveNumber);

  auto* trace = app.add_subcommand("trace-s", "Show how S(i) is derived");
  trace->add_option("i", trace_i, "Positive integer")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));

  auto* verify = app.add_subcommand("verify", "Check every identity against enumeration");
  verify->add_option("--max-n", max_n, "Largest n for partition identities (default 20)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-i", max_i, "Largest i for S(i) checks (default 20)")
      ->check(CLI::PositiveNumber);
  // Hidden: perturbs one suite to exercise the failure path.
  verify->add_option("--inject-fault", fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*p) return cmd_p(n, fmt);
    if (*stable) return cmd_stable(max_rows, fmt);
    if (*parity) return cmd_parity(n, fmt);
    if (*trace) return cmd_trace_s(trace_i, fmt);
    if (*verify) return cmd_verify(max_n, max_i, fault, fmt);
  } catch (const LibraryError& e) {
    std::cerr << "error: " << pp_status_string(e.status) << ": " << e.message << '\n';
    return e.status == PP_ERR_DOMAIN || e.status == PP_ERR_INVALID_ARGUMENT ? kExitUsage
                                                                              : kExitFailure;
  }
  return kExitUsage;
}
