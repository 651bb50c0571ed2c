#pragma once

#include <functional>
#include <vector>

#include "jackpoly/partition.hpp"

namespace jackpoly {

// Reverse tableau on a partition shape: entries weakly decrease along rows
// and strictly decrease down columns.
class ReverseTableau {
public:
  ReverseTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int entry(int row, int col) const { return rows_[row - 1][col - 1]; }  // 1-based
  int entry(Square s) const { return entry(s.row, s.col); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  // Shape of the sub-diagram {s : entry(s) >= level}; for a reverse tableau
  // with entries in 1..n these interpolate from shape() (level 1) down to the
  // empty shape (level n + 1).
  Partition level_shape(int level) const;

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// Enumerates every reverse tableau of the given shape with entries in
// 1..max_entry, by row-major backtracking with ascending entry choice.
void for_each_reverse_tableau(const Partition& shape, int max_entry,
                              const std::function<void(const ReverseTableau&)>& fn);
std::vector<ReverseTableau> reverse_tableaux(const Partition& shape, int max_entry);

}  // namespace jackpoly
