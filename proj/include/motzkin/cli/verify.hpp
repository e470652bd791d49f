#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "motzkin/motzkin.hpp"

// Cross-validation suites behind `motzkin verify`.

namespace motzkin::verify {

using TableBuilder = std::function<PlateauTable(unsigned r, std::size_t nmax)>;

struct Options {
  /// Table size for recursion/explicit/oracle comparisons.
  std::size_t nmax = 14;
  /// Larger oracle size used for r = 1.
  std::size_t oracle_nmax_r1 = 16;
  /// Overrides every series order when set.
  std::optional<std::size_t> order;
  TableBuilder table_builder = [](unsigned r, std::size_t n) { return table_from_recursion(r, n); };
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tables", "residuals", "contfrac", "diagonals", "integrality"};
  return names;
}

namespace detail {

// Independent Motzkin recurrence M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}.
inline std::vector<BigInt> motzkin_numbers(std::size_t nmax) {
  std::vector<BigInt> m(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    if (n == 0) {
      m[n] = 1;
      continue;
    }
    m[n] = m[n - 1];
    for (std::size_t k = 0; k + 2 <= n; ++k) m[n] += m[k] * m[n - 2 - k];
  }
  return m;
}

inline std::string entry(std::size_t n, std::size_t p) { return "c_" + std::to_string(n) + "^" + std::to_string(p); }

// First differing entry of two tables over n <= nmax, as "c_n^p: a vs b".
inline std::optional<std::string> table_difference(const PlateauTable& a, const std::string& a_name,
                                                   const PlateauTable& b, const std::string& b_name,
                                                   std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    const std::size_t pmax = std::max(a.max_p(n), b.max_p(n));
    for (std::size_t p = 0; p <= pmax; ++p) {
      const BigInt u = a.at(static_cast<long>(n), static_cast<long>(p));
      const BigInt v = b.at(static_cast<long>(n), static_cast<long>(p));
      if (u != v) return entry(n, p) + ": " + a_name + "=" + u.str() + " " + b_name + "=" + v.str();
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> series_difference(const XSeries& a, const std::string& a_name, const XSeries& b,
                                                    const std::string& b_name) {
  auto d = first_difference(a, b);
  if (d) return a_name + " vs " + b_name + " at " + *d;
  return std::nullopt;
}

inline std::optional<std::string> nonzero(const XSeries& s, const std::string& what) {
  if (s.is_zero()) return std::nullopt;
  for (std::size_t n = 0; n <= s.order(); ++n)
    if (!s[n].is_zero())
      return what + " nonzero at x^" + std::to_string(n) + ": " + to_string(XSeries(0, {s[n]}));
  return std::nullopt;
}

inline std::optional<std::string> nonzero(const RationalSeries& s, const std::string& what) {
  for (std::size_t n = 0; n <= s.order(); ++n)
    if (!s[n].is_zero())
      return what + " nonzero at x^" + std::to_string(n) + ": " + to_string(RationalSeries(0, {s[n]}));
  return std::nullopt;
}

class Runner {
 public:
  Runner(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  // `body` returns nullopt on success or a description of the first failure.
  template <class F>
  void check(const std::string& name, F body) {
    CheckResult r{suite_, name, false, {}};
    try {
      auto failure = body();
      r.passed = !failure;
      if (failure) r.detail = *failure;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

inline void tables_suite(const Options& opt, std::vector<CheckResult>& out) {
  Runner run("tables", out);
  const std::size_t nmax = opt.nmax;

  run.check("published table (r=1, n<=14)", [&]() -> std::optional<std::string> {
    const PlateauTable published = published_plateau_table();
    return table_difference(opt.table_builder(1, published.nmax()), "recursion", published, "published",
                            published.nmax());
  });

  for (unsigned r = 1; r <= 3; ++r) {
    const std::size_t n_oracle = r == 1 ? std::max(nmax, opt.oracle_nmax_r1) : nmax;
    run.check("three-way recursion/explicit/oracle r=" + std::to_string(r) + " n<=" + std::to_string(n_oracle),
              [&]() -> std::optional<std::string> {
                const PlateauTable rec = opt.table_builder(r, n_oracle);
                const PlateauTable expl = table_from_series(r, explicit_gf(r, n_oracle), n_oracle);
                const PlateauTable orc =
                    table_from_series(r, oracle::count_series(n_oracle, oracle::StatisticSpec::plateaus(r),
                                                              std::max(n_oracle, oracle::default_cap)),
                                      n_oracle);
                if (auto d = table_difference(rec, "recursion", expl, "explicit", n_oracle)) return d;
                return table_difference(expl, "explicit", orc, "oracle", n_oracle);
              });
  }

  run.check("row sums are Motzkin numbers (r=1..3)", [&]() -> std::optional<std::string> {
    const auto m = motzkin_numbers(nmax);
    for (unsigned r = 1; r <= 3; ++r) {
      const PlateauTable t = opt.table_builder(r, nmax);
      for (std::size_t n = 0; n <= nmax; ++n)
        if (t.row_sum(n) != m[n])
          return "r=" + std::to_string(r) + " row " + std::to_string(n) + " sums to " + t.row_sum(n).str() +
                 ", M_n=" + m[n].str();
    }
    return std::nullopt;
  });

  run.check("oracle path counts are Motzkin numbers (n<=14)", [&]() -> std::optional<std::string> {
    const auto m = motzkin_numbers(14);
    for (std::size_t n = 0; n <= 14; ++n) {
      std::size_t count = 0;
      oracle::for_each_path(n, [&](auto) { ++count; });
      if (BigInt(count) != m[n]) return "n=" + std::to_string(n) + ": " + std::to_string(count) + " paths";
    }
    return std::nullopt;
  });

  run.check("oracle y-degree <= n/(r+2) (r=0..3, n<=14)", [&]() -> std::optional<std::string> {
    for (unsigned r = 0; r <= 3; ++r)
      for (std::size_t n = 0; n <= 14; ++n) {
        const auto w = oracle::weighted_count(n, oracle::StatisticSpec::plateaus(r));
        if (w.degree_y() > n / (r + 2))
          return "r=" + std::to_string(r) + " n=" + std::to_string(n) + " degree " + std::to_string(w.degree_y());
      }
    return std::nullopt;
  });

  run.check("base column: general form = split form (r=1, n<=40)", [&]() -> std::optional<std::string> {
    const auto general = base_column(1, 40);
    const auto split = base_column_split_form(40);
    for (std::size_t n = 0; n <= 40; ++n)
      if (general[n] != split[n]) return entry(n, 0) + ": " + general[n].str() + " vs " + split[n].str();
    return std::nullopt;
  });

  run.check("f0 closed form = base column (r=1..3, n<=40)", [&]() -> std::optional<std::string> {
    for (unsigned r = 1; r <= 3; ++r) {
      const auto col = base_column(r, 40);
      const XSeries f0 = f0_closed(r, 40);
      for (std::size_t n = 0; n <= 40; ++n)
        if (f0.coeff(n) != col[n]) return "r=" + std::to_string(r) + " " + entry(n, 0);
    }
    return std::nullopt;
  });

  run.check("column GFs = table columns (r=1,2; p<=4; n<=20)", [&]() -> std::optional<std::string> {
    for (unsigned r = 1; r <= 2; ++r) {
      const PlateauTable t = opt.table_builder(r, 20);
      const auto cols = column_gfs(r, 4, 20);
      for (std::size_t p = 0; p <= 4; ++p)
        for (std::size_t n = 0; n <= 20; ++n)
          if (cols[p].coeff(n) != t.at(static_cast<long>(n), static_cast<long>(p)))
            return "r=" + std::to_string(r) + " " + entry(n, p) + ": column_gf=" + cols[p].coeff(n).str() +
                   " table=" + t.at(static_cast<long>(n), static_cast<long>(p)).str();
    }
    return std::nullopt;
  });

  run.check("explicit GF at y=1 is Motzkin, at y=0 is f0 (r=1..3)", [&]() -> std::optional<std::string> {
    const std::size_t n = opt.order.value_or(30);
    const auto m = motzkin_numbers(n);
    for (unsigned r = 1; r <= 3; ++r) {
      const XSeries g = explicit_gf(r, n);
      const XSeries at_one = subst_y_const(g, BigInt(1));
      for (std::size_t k = 0; k <= n; ++k)
        if (at_one.coeff(k) != m[k]) return "r=" + std::to_string(r) + " y=1 at x^" + std::to_string(k);
      if (auto d = series_difference(subst_y_const(g, BigInt(0)), "g(x,0)", f0_closed(r, n), "f0")) return d;
    }
    return std::nullopt;
  });

  run.check("explicit GF y-degree <= n/(r+2) (r=0..3)", [&]() -> std::optional<std::string> {
    const std::size_t n = opt.order.value_or(30);
    for (unsigned r = 0; r <= 3; ++r) {
      const XSeries g = explicit_gf(r, n);
      for (std::size_t k = 0; k <= n; ++k)
        if (g[k].degree_y() > k / (r + 2)) return "r=" + std::to_string(r) + " x^" + std::to_string(k);
    }
    return std::nullopt;
  });

  run.check("peaks: explicit GF r=0 = oracle (n<=12)", [&]() -> std::optional<std::string> {
    return series_difference(explicit_gf(0, 12), "explicit_gf(0)",
                             oracle::count_series(12, oracle::StatisticSpec::plateaus(0)), "oracle");
  });
}

inline void residuals_suite(const Options& opt, std::vector<CheckResult>& out) {
  Runner run("residuals", out);
  for (unsigned r = 1; r <= 3; ++r) {
    const std::size_t n = opt.order.value_or(30);
    run.check("functional equation r=" + std::to_string(r) + " N=" + std::to_string(n),
              [&] { return nonzero(functional_residual(r, n), "residual"); });
  }
  for (unsigned r = 1; r <= 2; ++r) {
    const std::size_t n = opt.order.value_or(24);
    run.check("integral/differential form r=" + std::to_string(r) + " N=" + std::to_string(n),
              [&] { return nonzero(theorem1_residual(r, n, n / (r + 2)), "residual"); });
  }
  for (unsigned r = 1; r <= 3; ++r) {
    const std::size_t n = opt.order.value_or(30);
    run.check("diagonal differential form r=" + std::to_string(r) + " N=" + std::to_string(n),
              [&] { return nonzero(theorem2_residual(r, n), "residual"); });
  }
  run.check("diagonal difference-differential equation k<=8 mmax=10", [&]() -> std::optional<std::string> {
    const auto h = diagonal_gfs(8);
    for (std::size_t k = 0; k <= 8; ++k) {
      const auto res = difdif_residual(h[k], k >= 3 ? &h[k - 3] : nullptr, 10);
      for (std::size_t i = 0; i < res.size(); ++i)
        if (!res[i].is_zero()) return "k=" + std::to_string(k) + " z^" + std::to_string(i) + ": " + res[i].str();
    }
    return std::nullopt;
  });
}

inline XSeries plateau_correction(unsigned r, std::size_t order) { return polynomial(order, {{1, r, 1}, {-1, r}}); }

/// Oracle statistics for the special generating functions.
inline oracle::StatisticSpec peakfree_spec() { return {{}, {{0}, std::nullopt}}; }
inline oracle::StatisticSpec oddheight_spec() { return {{{1, oracle::odd_height(), oracle::Marker::y}}, {}}; }
inline oracle::StatisticSpec uhd_uhhd_spec() {
  return {{{1, oracle::any_height(), oracle::Marker::y}, {2, oracle::any_height(), oracle::Marker::z}}, {{}, 3}};
}
inline oracle::StatisticSpec mixed_height_spec() {
  return {{{1, oracle::height_at_least(2), oracle::Marker::y}, {2, oracle::height_multiple_of(3), oracle::Marker::z}},
          {}};
}

inline void contfrac_suite(const Options& opt, std::vector<CheckResult>& out, std::vector<std::string>* notes) {
  Runner run("contfrac", out);
  const std::size_t n = opt.order.value_or(40);
  for (unsigned r = 0; r <= 3; ++r) {
    run.check("constant schedule x^r y - x^r = explicit GF r=" + std::to_string(r) + " N=" + std::to_string(n),
              [&] {
                return series_difference(contfrac_gf(CorrectionSchedule::constant(plateau_correction(r, n)), n),
                                         "contfrac", explicit_gf(r, n), "explicit");
              });
  }
  run.check("depth stability D vs D+3 (r=1, N=" + std::to_string(n) + ")", [&] {
    const auto schedule = CorrectionSchedule::constant(plateau_correction(1, n));
    return series_difference(contfrac_gf(schedule, n), "depth D",
                             contfrac_gf(schedule, n, default_depth(n) + 3), "depth D+3");
  });

  struct Special {
    std::string name;
    std::size_t nmax;
    CrossChecked (*build)(std::size_t);
    oracle::StatisticSpec spec;
  };
  const std::vector<Special> specials = {
      {"peakfree", 14, &peakfree_gf_checked, peakfree_spec()},
      {"oddheight", 12, &oddheight_gf_checked, oddheight_spec()},
      {"uhd-uhhd", 12, &uhd_uhhd_gf_checked, uhd_uhhd_spec()},
      {"mixed-height", 12, &mixed_height_gf_checked, mixed_height_spec()},
  };
  for (const auto& s : specials) {
    run.check(s.name + " = oracle (n<=" + std::to_string(s.nmax) + ")", [&]() -> std::optional<std::string> {
      const CrossChecked c = s.build(s.nmax);
      if (notes)
        notes->push_back(s.name + " closed form: " + (c.mismatch ? "MISMATCH " + *c.mismatch : "agrees with schedule"));
      return series_difference(c.value, s.name, oracle::count_series(s.nmax, s.spec), "oracle");
    });
  }
}

inline void diagonals_suite(const Options& opt, std::vector<CheckResult>& out) {
  Runner run("diagonals", out);
  run.check("numerator degree 2 floor(k/3), both constructions agree (k<=12)", [&]() -> std::optional<std::string> {
    const auto h = diagonal_gfs(12);  // throws on disagreement or degree mismatch
    for (const auto& hk : h)
      if (hk.numerator.degree() != static_cast<long>(2 * (hk.k / 3))) return "k=" + std::to_string(hk.k);
    return std::nullopt;
  });
  run.check("expansions match table diagonals (k<=8, m<=4)", [&]() -> std::optional<std::string> {
    const PlateauTable t = opt.table_builder(1, 3 * 4 + 8);
    const auto h = diagonal_gfs(8);
    for (std::size_t k = 0; k <= 8; ++k) {
      const auto e = h[k].expand(4);
      for (std::size_t m = 0; m <= 4; ++m)
        if (e[m] != t.at(static_cast<long>(3 * m + k), static_cast<long>(m)))
          return "h_" + std::to_string(k) + " z^" + std::to_string(m) + ": " + e[m].str() + " vs " +
                 entry(3 * m + k, m) + "=" + t.at(static_cast<long>(3 * m + k), static_cast<long>(m)).str();
    }
    return std::nullopt;
  });
}

inline void integrality_suite(const Options& opt, std::vector<CheckResult>& out) {
  Runner run("integrality", out);
  const std::size_t n = opt.order.value_or(60);
  run.check("recursion table r=1 n<=" + std::to_string(n), [&]() -> std::optional<std::string> {
    const PlateauTable t = table_from_recursion(1, n);
    const auto m = motzkin_numbers(n);
    for (std::size_t k = 0; k <= n; ++k)
      if (t.row_sum(k) != m[k]) return "row " + std::to_string(k) + " does not sum to M_n";
    return std::nullopt;
  });
  run.check("column GFs r=1 p<=20 N=" + std::to_string(n), [&]() -> std::optional<std::string> {
    const auto cols = column_gfs(1, 20, n);
    const PlateauTable t = table_from_recursion(1, n);
    for (std::size_t p = 0; p <= 20; ++p)
      for (std::size_t k = 0; k <= n; ++k)
        if (cols[p].coeff(k) != t.at(static_cast<long>(k), static_cast<long>(p))) return entry(k, p);
    return std::nullopt;
  });
}

}  // namespace detail

/// Runs one suite, or every suite for "all". Unknown names throw
/// std::invalid_argument. Informational lines (closed-form comparisons) are
/// appended to `notes` when given.
inline std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt = {},
                                          std::vector<std::string>* notes = nullptr) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  bool known = all;
  auto wants = [&](const char* name) {
    if (all || suite == name) {
      known = true;
      return true;
    }
    return false;
  };
  if (wants("tables")) detail::tables_suite(opt, out);
  if (wants("residuals")) detail::residuals_suite(opt, out);
  if (wants("contfrac")) detail::contfrac_suite(opt, out, notes);
  if (wants("diagonals")) detail::diagonals_suite(opt, out);
  if (wants("integrality")) detail::integrality_suite(opt, out);
  if (!known) throw std::invalid_argument("unknown verification suite: " + suite);
  return out;
}

}  // namespace motzkin::verify
