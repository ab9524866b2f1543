#include "verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "adh.hpp"
#include "core_partitions.hpp"
#include "parity.hpp"

namespace partparity {

namespace {

std::string text(const BigInt& v) { return v.get_str(); }
template <class T>
std::string text(const T& v) { return std::to_string(v); }

class Suite {
 public:
  Suite(std::string name, bool faulty) : faulty_(faulty) { result_.name = std::move(name); }

  // The computed side at the last index is shifted by one under injection.
  template <class T>
  T perturb(T value, bool last) const {
    if (faulty_ && last) value += 1;
    return value;
  }

  template <class A, class B>
  void expect_eq(const A& expected, const B& got, const std::string& where) {
    ++result_.checks;
    if (expected == got) return;
    fail(where + ": expected " + text(expected) + ", got " + text(got));
  }

  void expect(bool ok, const std::string& where) {
    ++result_.checks;
    if (!ok) fail(where);
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  void fail(std::string msg) {
    if (result_.passed) result_.counterexample = std::move(msg);
    result_.passed = false;
  }

  bool faulty_;
  SuiteResult result_;
};

std::string at_n(std::uint32_t n) { return "n=" + std::to_string(n); }
std::string at_i(std::uint64_t i) { return "i=" + std::to_string(i); }

void count_table_suite(Suite& s, const VerifyOptions& o, const CountTable& table) {
  for (std::uint32_t n = 0; n <= o.max_n; ++n) {
    std::uint64_t count = 0;
    PartitionStream stream(n);
    while (stream.next()) ++count;
    s.expect_eq(count, s.perturb(BigInt(table[n]), n == o.max_n), at_n(n));
  }
}

void s_oracle_suite(Suite& s, const VerifyOptions& o) {
  for (std::uint32_t i = 1; i <= o.max_i; ++i)
    s.expect_eq(s_oracle(i), s.perturb(s_of(i), i == o.max_i), at_i(i));
}

void factorization_suite(Suite& s, const VerifyOptions& o) {
  for (std::uint64_t i = 1; i <= o.max_i; ++i) {
    const std::uint64_t m = 24 * i + 1;
    auto f = signed_factorize(m);
    if (i == o.max_i) f.m = s.perturb(f.m, true);
    try {
      f.validate();
      s.expect(true, at_i(i));
    } catch (const InternalError& e) {
      s.expect(false, at_i(i) + ": factorization of " + std::to_string(m) + ": " + e.what());
    }
    for (const auto& [p, e] : f.factors) {
      if (p.residue24() != 1) continue;
      const PellWitness w = pell_witness(p.value());
      const auto x = static_cast<__int128>(w.x0);
      const auto y = static_cast<__int128>(w.y0);
      const std::string where = at_i(i) + " p=" + std::to_string(p.value());
      s.expect(x * x - 6 * y * y == p.value(), where + ": x0^2 - 6y0^2 != p");
      s.expect(w.y0 % 2 == 0 && w.x0 % 2 == 1, where + ": parity of (y0, x0)");
      const unsigned r = w.residue12();
      s.expect(r == 1 || r == 5 || r == 7 || r == 11, where + ": residue mod 12");
      for (std::uint64_t y0 = 0; y0 < w.y0; ++y0) {
        const std::int64_t v = 6 * static_cast<std::int64_t>(y0 * y0) + p.value();
        const bool square =
            v >= 0 && isqrt(static_cast<std::uint64_t>(v)) *
                              isqrt(static_cast<std::uint64_t>(v)) ==
                          static_cast<std::uint64_t>(v);
        s.expect(!square, where + ": smaller y=" + std::to_string(y0) + " also works");
      }
    }
  }
}

void smallest_suite(Suite& s, const VerifyOptions& o, const CountTable& table) {
  for (std::uint32_t n = 1; n <= o.max_n; ++n)
    s.expect_eq(parity_counts_oracle(n).diff,
                s.perturb(parity_difference(n, table), n == o.max_n), at_n(n));
}

void t_sum_suite(Suite& s, const VerifyOptions& o, const CountTable& table) {
  for (std::uint32_t n = 1; n <= o.max_n; ++n) {
    const std::uint64_t enumerated = t_sum_enum(n);
    s.expect_eq(enumerated, s.perturb(t_sum_formula(n, table), n == o.max_n), at_n(n));
    s.expect_eq(parity_difference(n, table), t_sum_formula(n, table), at_n(n));
  }
}

void ofcl_suite(Suite& s, const VerifyOptions& o, const CountTable& table) {
  for (std::uint32_t n = 1; n <= o.max_n; ++n) {
    const BigInt enumerated = t_sum_enum(n);
    s.expect_eq(enumerated, s.perturb(c_signed_convolution(n, table), n == o.max_n),
                at_n(n) + " C-partition sum");
    s.expect_eq(enumerated, distinct_signed_convolution(n, table),
                at_n(n) + " distinct-part sum");
  }
}

void pie_suite(Suite& s, const VerifyOptions& o, const CountTable& table) {
  for (std::uint32_t n = 1; n <= o.max_n; ++n) {
    const auto hist = smallest_part_histogram(n);
    BigInt alternating = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
      const BigInt pie =
          s.perturb(count_smallest_part_pie(n, i, table), n == o.max_n && i == n);
      s.expect_eq(hist[i], pie, at_n(n) + " " + at_i(i));
      if (i % 2) alternating += pie;
      else alternating -= pie;
    }
    s.expect_eq(parity_difference(n, table), alternating, at_n(n) + " alternating sum");
  }
}

void conjugation_suite(Suite& s, const VerifyOptions& o) {
  for (std::uint32_t n = 0; n <= o.max_n; ++n) {
    std::set<Partition> distinct_images;
    PartitionStream stream(n);
    while (const Partition* pi = stream.next()) {
      const Partition bar = conjugate(*pi);
      const std::string where = at_n(n) + " pi=" + pi->to_string();
      s.expect(conjugate(bar) == *pi, where + ": conjugation is not an involution");
      s.expect(bar.weight() == pi->weight(), where + ": weight changed");
      if (pi->empty() || !is_c_partition(*pi)) continue;
      s.expect(is_distinct(bar), where + ": conjugate of C-partition has repeated parts");
      s.expect(distinct_images.insert(bar).second, where + ": conjugate not injective");
      const std::uint64_t h = s.perturb(h_even_frequency_count(*pi), n == o.max_n);
      s.expect((rank(bar) - static_cast<std::int64_t>(h)) % 2 == 0,
               where + ": rank of conjugate and h differ in parity");
    }
    std::set<Partition> distinct_targets;
    DistinctPartitionStream dstream(n);
    while (const Partition* pi = dstream.next())
      if (!pi->empty()) distinct_targets.insert(*pi);
    s.expect(distinct_images == distinct_targets,
             at_n(n) + ": conjugation does not reach every distinct-part partition");
  }
}

void report_suite(Suite& s, const VerifyOptions& o, const CountTable& table) {
  for (std::uint32_t n = 1; n <= o.max_n; ++n) {
    ParityReport r = parity_counts(n, table);
    r.p_odd = s.perturb(r.p_odd, n == o.max_n);
    try {
      r.validate();
      s.expect(true, at_n(n));
    } catch (const InternalError& e) {
      s.expect(false, e.what());
    }
    const ParityReport oracle = parity_counts_oracle(n);
    s.expect_eq(oracle.p_odd, r.p_odd, at_n(n) + " P_O");
    s.expect_eq(oracle.p_even, r.p_even, at_n(n) + " P_E");
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "count-table", "s-oracle", "factorization-pell", "smallest-part-parity",
      "t-sum",       "c-partition-chain", "pie-smallest-part", "conjugation",
      "parity-report"};
  return names;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& o) {
  if (o.max_n == 0 || o.max_i == 0)
    throw std::domain_error("verification bounds must be at least 1");
  const auto& names = suite_names();
  if (!o.inject_fault.empty() &&
      std::find(names.begin(), names.end(), o.inject_fault) == names.end())
    throw std::domain_error("unknown suite for fault injection: " + o.inject_fault);

  const CountTable table = build_count_table(o.max_n);
  std::vector<SuiteResult> out;
  auto run = [&](const std::string& name, auto&& body) {
    Suite s(name, name == o.inject_fault);
    body(s);
    out.push_back(s.finish());
  };
  run(names[0], [&](Suite& s) { count_table_suite(s, o, table); });
  run(names[1], [&](Suite& s) { s_oracle_suite(s, o); });
  run(names[2], [&](Suite& s) { factorization_suite(s, o); });
  run(names[3], [&](Suite& s) { smallest_suite(s, o, table); });
  run(names[4], [&](Suite& s) { t_sum_suite(s, o, table); });
  run(names[5], [&](Suite& s) { ofcl_suite(s, o, table); });
  run(names[6], [&](Suite& s) { pie_suite(s, o, table); });
  run(names[7], [&](Suite& s) { conjugation_suite(s, o); });
  run(names[8], [&](Suite& s) { report_suite(s, o, table); });
  return out;
}

}  // namespace partparity
