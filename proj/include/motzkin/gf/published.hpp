#pragma once

#include <vector>

#include "motzkin/gf/table.hpp"

namespace motzkin {

/// Published plateau counts c_n^p (UHD plateaus), n = 0..14; OEIS A114583.
inline const std::vector<std::vector<long>>& published_plateau_rows() {
  static const std::vector<std::vector<long>> rows = {
      {1},
      {1},
      {2},
      {3, 1},
      {7, 2},
      {15, 6},
      {36, 14, 1},
      {85, 39, 3},
      {209, 102, 12},
      {517, 280, 37, 1},
      {1303, 758, 123, 4},
      {3312, 2085, 381, 20},
      {8510, 5730, 1194, 76, 1},
      {22029, 15849, 3657, 295, 5},
      {57447, 43914, 11187, 1056, 30},
  };
  return rows;
}

inline PlateauTable published_plateau_table() {
  const auto& rows = published_plateau_rows();
  PlateauTable t(1, rows.size() - 1);
  for (std::size_t n = 0; n < rows.size(); ++n)
    for (std::size_t p = 0; p < rows[n].size(); ++p) t.set(n, p, rows[n][p]);
  return t;
}

}  // namespace motzkin
