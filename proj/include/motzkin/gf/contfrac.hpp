#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "motzkin/errors.hpp"
#include "motzkin/series/series.hpp"

namespace motzkin {

/// Height-indexed correction terms C_1, C_2, ...: an explicit prefix, then a
/// period repeated forever.
class CorrectionSchedule {
 public:
  CorrectionSchedule(std::vector<XSeries> prefix, std::vector<XSeries> period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("CorrectionSchedule: period must be nonempty");
  }

  static CorrectionSchedule constant(XSeries c) { return CorrectionSchedule({}, {std::move(c)}); }

  /// C_k for k >= 1.
  const XSeries& at(std::size_t k) const {
    if (k == 0) throw std::out_of_range("CorrectionSchedule: heights start at 1");
    if (k <= prefix_.size()) return prefix_[k - 1];
    return period_[(k - 1 - prefix_.size()) % period_.size()];
  }

  const std::vector<XSeries>& prefix() const { return prefix_; }
  const std::vector<XSeries>& period() const { return period_; }

 private:
  std::vector<XSeries> prefix_;
  std::vector<XSeries> period_;
};

/// Levels needed for paths up to length `order`: a path of length n reaches
/// height at most n/2, and that height is level n/2 + 1.
inline std::size_t default_depth(std::size_t order) { return order / 2 + 1; }

/// G_1 of G_k = 1 / (1 - x - x^2 C_k - x^2 G_{k+1}) for k = depth .. 1, with
/// G_{depth+1} = 0.
inline XSeries contfrac_gf(const CorrectionSchedule& schedule, std::size_t order,
                           std::optional<std::size_t> depth = std::nullopt) {
  const std::size_t levels = depth.value_or(default_depth(order));
  const XSeries base = polynomial(order, {{1, 0}, {-1, 1}});
  const XSeries x2 = XSeries::x(order, 2);
  XSeries tail(order);
  for (std::size_t k = levels; k >= 1; --k) tail = series_recip(base - x2 * (schedule.at(k) + tail));
  return tail;
}

}  // namespace motzkin
