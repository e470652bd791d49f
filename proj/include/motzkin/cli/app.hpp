#pragma once

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "motzkin/cli/verify.hpp"
#include "motzkin/motzkin.hpp"

namespace motzkin::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Injection points for tests.
struct Hooks {
  verify::TableBuilder table_builder = [](unsigned r, std::size_t n) { return table_from_recursion(r, n); };
};

// ---- table -----------------------------------------------------------------

inline PlateauTable build_table(unsigned r, std::size_t nmax, const std::string& engine, std::size_t cap,
                                const Hooks& hooks) {
  if (engine == "recursion") return hooks.table_builder(r, nmax);
  if (engine == "explicit") return table_from_series(r, explicit_gf(r, nmax), nmax);
  if (nmax > cap)
    throw UsageError("--nmax " + std::to_string(nmax) + " exceeds the oracle cap " + std::to_string(cap) +
                     " (raise it with --cap)");
  return table_from_series(r, oracle::count_series(nmax, oracle::StatisticSpec::plateaus(r), cap), nmax);
}

/// One row per n, one column per p; cells past n/(r+2) are empty.
inline std::string format_table(const PlateauTable& t, const std::string& format) {
  std::ostringstream os;
  const std::size_t columns = t.max_p(t.nmax()) + 1;
  if (format == "pretty") {
    std::size_t width = 1;
    for (std::size_t n = 0; n <= t.nmax(); ++n)
      for (const auto& v : t.row(n)) width = std::max(width, v.str().size());
    const int w = static_cast<int>(width) + 1;
    const int label = static_cast<int>(std::max<std::size_t>(std::to_string(t.nmax()).size(), 3));
    os << std::setw(label) << "n\\p" << " |";
    for (std::size_t p = 0; p < columns; ++p) os << std::setw(w) << p;
    os << '\n' << std::string(static_cast<std::size_t>(label) + 1, '-') << '+'
       << std::string(static_cast<std::size_t>(w) * columns, '-') << '\n';
    for (std::size_t n = 0; n <= t.nmax(); ++n) {
      os << std::setw(label) << n << " |";
      for (const auto& v : t.row(n)) os << std::setw(w) << v.str();
      os << '\n';
    }
    return os.str();
  }
  const char sep = format == "csv" ? ',' : '\t';
  for (std::size_t n = 0; n <= t.nmax(); ++n) {
    for (std::size_t p = 0; p < columns; ++p) {
      if (p > 0) os << sep;
      if (p <= t.max_p(n)) os << t.row(n)[p].str();
    }
    os << '\n';
  }
  return os.str();
}

// ---- series ----------------------------------------------------------------

inline const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names = {"f0",        "g",        "peakfree",    "oddheight",
                                                 "uhd-uhhd", "mixed-height", "diagonal"};
  return names;
}

inline std::string render_series(const std::string& name, unsigned r, std::size_t k, std::size_t order) {
  if (name == "f0") {
    if (r == 0) throw UsageError("f0 needs --r >= 1");
    return to_string(f0_closed(r, order));
  }
  if (name == "g") return to_string(explicit_gf(r, order));
  if (name == "peakfree") return to_string(peakfree_gf(order));
  if (name == "oddheight") return to_string(oddheight_gf(order));
  if (name == "uhd-uhhd") return to_string(uhd_uhhd_gf(order));
  if (name == "mixed-height") return to_string(mixed_height_gf(order));
  if (name == "diagonal") return DensePoly<BigInt>(diagonal_gf(k).expand(order)).to_string("z");
  throw UsageError("unknown series: " + name);
}

// ---- bfile -----------------------------------------------------------------

inline const std::vector<std::string>& bfile_names() {
  static const std::vector<std::string> names = {"a114583", "a114584", "a097860-triangle", "peakfree"};
  return names;
}

/// First `count` terms of the named sequence, offset 0, triangles read by rows.
inline std::vector<BigInt> bfile_terms(const std::string& name, std::size_t count) {
  std::vector<BigInt> terms;
  if (count == 0) return terms;
  auto flatten = [&](unsigned r, auto make_table) {
    // Row n has n/(r+2) + 1 entries, so count rows always suffice.
    std::size_t rows = 0;
    for (std::size_t total = 0; total < count; ++rows) total += rows / (r + 2) + 1;
    const PlateauTable t = make_table(rows - 1);
    for (std::size_t n = 0; n <= t.nmax() && terms.size() < count; ++n)
      for (const auto& v : t.row(n))
        if (terms.size() < count) terms.push_back(v);
  };
  if (name == "a114583") {
    flatten(1, [](std::size_t nmax) { return table_from_recursion(1, nmax); });
  } else if (name == "a097860-triangle") {
    flatten(0, [](std::size_t nmax) { return table_from_series(0, explicit_gf(0, nmax), nmax); });
  } else if (name == "a114584" || name == "peakfree") {
    const XSeries s = name == "a114584" ? f0_closed(1, count - 1) : peakfree_gf(count - 1);
    for (std::size_t n = 0; n < count; ++n) terms.push_back(s.coeff(n));
  } else {
    throw UsageError("unknown sequence: " + name);
  }
  return terms;
}

// ---- dispatch --------------------------------------------------------------

/// Runs the command line and returns the process exit code: 0 success,
/// 1 verification or engine failure, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const Hooks& hooks = {}) {
  CLI::App app{"Plateau statistics of Motzkin paths: tables, generating functions, verification"};
  app.name("motzkin");
  app.require_subcommand(1);

  unsigned table_r = 1;
  std::size_t table_nmax = 14;
  std::size_t cap = oracle::default_cap;
  std::string engine = "recursion";
  std::string format = "tsv";
  auto* table = app.add_subcommand("table", "Print the plateau count triangle c_n^p");
  table->add_option("--r", table_r, "Plateau length")->check(CLI::Range(1U, 64U));
  table->add_option("--nmax", table_nmax, "Largest path length")->check(CLI::Range(std::size_t{0}, std::size_t{100000}));
  table->add_option("--engine", engine, "recursion | explicit | oracle")
      ->check(CLI::IsMember({"recursion", "explicit", "oracle"}));
  table->add_option("--format", format, "tsv | csv | pretty")->check(CLI::IsMember({"tsv", "csv", "pretty"}));
  table->add_option("--cap", cap, "Oracle enumeration cap");

  std::string series_name;
  unsigned series_r = 1;
  std::size_t series_k = 0;
  std::size_t series_order = 10;
  auto* series = app.add_subcommand("series", "Print a generating function to a given order");
  series->add_option("name", series_name, "f0 | g | peakfree | oddheight | uhd-uhhd | mixed-height | diagonal")
      ->required()
      ->check(CLI::IsMember(series_names()));
  series->add_option("--r", series_r, "Plateau length (g allows 0: peaks)")->check(CLI::Range(0U, 64U));
  series->add_option("--k", series_k, "Diagonal index for `diagonal`");
  series->add_option("--order", series_order, "Truncation order");

  std::string suite = "all";
  std::optional<std::size_t> verify_order;
  std::size_t verify_nmax = 14;
  auto* verify_cmd = app.add_subcommand("verify", "Run cross-validation suites");
  std::vector<std::string> suites{"all"};
  for (const auto& s : verify::suite_names()) suites.push_back(s);
  verify_cmd->add_option("suite", suite, "all | tables | residuals | contfrac | diagonals | integrality")
      ->check(CLI::IsMember(suites));
  verify_cmd->add_option("--order", verify_order, "Override every series order");
  verify_cmd->add_option("--nmax", verify_nmax, "Table size for engine comparisons");

  std::string bfile_name;
  std::size_t bfile_count = 100;
  auto* bfile = app.add_subcommand("bfile", "Export a sequence in OEIS b-file format");
  bfile->add_option("sequence", bfile_name, "a114583 | a114584 | a097860-triangle | peakfree")
      ->required()
      ->check(CLI::IsMember(bfile_names()));
  bfile->add_option("--count", bfile_count, "Number of terms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "motzkin: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (*table) {
      out << format_table(build_table(table_r, table_nmax, engine, cap, hooks), format);
    } else if (*series) {
      out << render_series(series_name, series_r, series_k, series_order) << '\n';
    } else if (*bfile) {
      const auto terms = bfile_terms(bfile_name, bfile_count);
      for (std::size_t i = 0; i < terms.size(); ++i) out << i << ' ' << terms[i].str() << '\n';
    } else if (*verify_cmd) {
      verify::Options opt;
      opt.order = verify_order;
      opt.nmax = verify_nmax;
      opt.table_builder = hooks.table_builder;
      std::vector<std::string> notes;
      const auto results = verify::run_suite(suite, opt, &notes);
      std::size_t failed = 0;
      for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
        if (!r.passed) out << "\n     " << r.detail;
        out << '\n';
        failed += r.passed ? 0 : 1;
      }
      for (const auto& n : notes) out << "note " << n << '\n';
      out << results.size() - failed << "/" << results.size() << " checks passed\n";
      return failed == 0 ? ok : verification_failed;
    }
  } catch (const UsageError& e) {
    err << "motzkin: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "motzkin: " << e.what() << '\n';
    return verification_failed;
  }
  return ok;
}

}  // namespace motzkin::cli
