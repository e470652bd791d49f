#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/errors.hpp"
#include "motzkin/paths/path.hpp"
#include "motzkin/series/marker_poly.hpp"
#include "motzkin/series/series.hpp"

namespace motzkin {

/// Brute-force enumeration of Motzkin paths and plateau statistics. This is
/// the ground truth that every generating function is checked against, so it
/// shares no code with the series engines.
namespace oracle {

inline constexpr std::size_t default_cap = 18;

/// A U H^r D subpath. `height` is the level of its horizontal steps (the apex
/// vertex for a peak), i.e. one more than the level the U starts from.
struct Occurrence {
  std::size_t position;
  unsigned height;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

enum class Marker { y, z };

using HeightPredicate = std::function<bool(unsigned)>;

inline HeightPredicate any_height() {
  return [](unsigned) { return true; };
}
inline HeightPredicate odd_height() {
  return [](unsigned h) { return h % 2 == 1; };
}
inline HeightPredicate height_at_least(unsigned k) {
  return [k](unsigned h) { return h >= k; };
}
inline HeightPredicate height_multiple_of(unsigned m) {
  return [m](unsigned h) { return h % m == 0; };
}

/// Every U H^length D at a height satisfying `at_height` contributes one
/// factor of `marker`.
struct PlateauRule {
  unsigned length;
  HeightPredicate at_height;
  Marker marker;
};

/// Plateau lengths whose presence anywhere disqualifies a path: the listed
/// lengths, plus every length >= `from` when set.
struct Exclusions {
  std::set<unsigned> lengths;
  std::optional<unsigned> from;

  bool contains(unsigned length) const { return lengths.contains(length) || (from && length >= *from); }
  bool empty() const { return lengths.empty() && !from; }
};

struct StatisticSpec {
  std::vector<PlateauRule> rules;
  Exclusions exclusions;

  /// Plateaus of length r at any height marked by y, nothing excluded.
  static StatisticSpec plateaus(unsigned r) { return {{{r, any_height(), Marker::y}}, {}}; }
};

using WeightedCount = MarkerPoly;

namespace detail {

// Depth-first over prefixes in U < H < D order; `visit` sees each complete
// path as a span that is only valid during the call.
template <class Visit>
void walk(std::vector<Step>& prefix, std::size_t n, long height, Visit& visit) {
  const std::size_t remaining = n - prefix.size();
  if (remaining == 0) {
    visit(std::span<const Step>(prefix));
    return;
  }
  if (height + 1 <= static_cast<long>(remaining) - 1) {
    prefix.push_back(Step::Up);
    walk(prefix, n, height + 1, visit);
    prefix.pop_back();
  }
  if (height <= static_cast<long>(remaining) - 1) {
    prefix.push_back(Step::Horizontal);
    walk(prefix, n, height, visit);
    prefix.pop_back();
  }
  if (height > 0) {
    prefix.push_back(Step::Down);
    walk(prefix, n, height - 1, visit);
    prefix.pop_back();
  }
}

inline void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapExceeded("path length " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
}

// Calls on_plateau(position, run_length, height) for every U H^j D, j >= 0.
template <class F>
void scan_plateaus(std::span<const Step> steps, F on_plateau) {
  unsigned height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::Up) {
      std::size_t j = i + 1;
      while (j < steps.size() && steps[j] == Step::Horizontal) ++j;
      if (j < steps.size() && steps[j] == Step::Down) on_plateau(i, static_cast<unsigned>(j - i - 1), height + 1);
      ++height;
    } else if (steps[i] == Step::Down) {
      --height;
    }
  }
}

}  // namespace detail

/// Visits every Motzkin path of length n in lexicographic U < H < D order.
template <class Visit>
void for_each_path(std::size_t n, Visit visit, std::size_t cap = default_cap) {
  detail::check_cap(n, cap);
  std::vector<Step> prefix;
  prefix.reserve(n);
  detail::walk(prefix, n, 0, visit);
}

inline std::vector<Path> enumerate(std::size_t n, std::size_t cap = default_cap) {
  std::vector<Path> out;
  for_each_path(
      n, [&](std::span<const Step> s) { out.emplace_back(std::vector<Step>(s.begin(), s.end())); }, cap);
  return out;
}

/// Occurrences of U H^r D whose horizontal run has length exactly r.
inline std::vector<Occurrence> count_plateaus(const Path& p, unsigned r) {
  std::vector<Occurrence> out;
  detail::scan_plateaus(p.steps(), [&](std::size_t pos, unsigned run, unsigned height) {
    if (run == r) out.push_back({pos, height});
  });
  return out;
}

/// Sum over length-n paths (minus excluded ones) of y^#y-hits * z^#z-hits.
inline WeightedCount weighted_count(std::size_t n, const StatisticSpec& spec, std::size_t cap = default_cap) {
  std::map<Monomial, std::uint64_t> tally;
  for_each_path(
      n,
      [&](std::span<const Step> steps) {
        Monomial m;
        bool excluded = false;
        detail::scan_plateaus(steps, [&](std::size_t, unsigned run, unsigned height) {
          if (spec.exclusions.contains(run)) excluded = true;
          for (const auto& rule : spec.rules) {
            if (rule.length != run || !rule.at_height(height)) continue;
            (rule.marker == Marker::y ? m.y : m.z) += 1;
          }
        });
        if (!excluded) ++tally[m];
      },
      cap);
  std::vector<MarkerPoly::Term> terms;
  for (const auto& [m, count] : tally) terms.push_back({m, BigInt(count)});
  return MarkerPoly::from_terms(std::move(terms));
}

/// weighted_count for every n <= order, as a series.
inline XSeries count_series(std::size_t order, const StatisticSpec& spec, std::size_t cap = default_cap) {
  std::vector<MarkerPoly> c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c.push_back(weighted_count(n, spec, cap));
  return XSeries(order, std::move(c));
}

}  // namespace oracle
}  // namespace motzkin
