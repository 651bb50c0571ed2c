#include "jackpoly/tableau.hpp"

#include <stdexcept>

namespace jackpoly {

ReverseTableau::ReverseTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::domain_error("ReverseTableau: row count does not match shape");
  for (int i = 1; i <= shape_.length(); ++i) {
    if (static_cast<int>(rows_[i - 1].size()) != shape_.part(i))
      throw std::domain_error("ReverseTableau: row length does not match shape");
    for (int j = 1; j <= shape_.part(i); ++j) {
      const int t = entry(i, j);
      if (t < 1) throw std::domain_error("ReverseTableau: entries must be positive");
      if (j > 1 && t > entry(i, j - 1))
        throw std::domain_error("ReverseTableau: rows must weakly decrease");
      if (i > 1 && shape_.part(i - 1) >= j && t >= entry(i - 1, j))
        throw std::domain_error("ReverseTableau: columns must strictly decrease");
    }
  }
}

Partition ReverseTableau::level_shape(int level) const {
  std::vector<int> parts;
  for (int i = 1; i <= shape_.length(); ++i) {
    int count = 0;
    while (count < shape_.part(i) && entry(i, count + 1) >= level) ++count;
    if (count == 0) break;  // rows below have smaller entries in every column
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

namespace {

// Fills cells in row-major order; at each cell tries entries ascending.
void fill(const Partition& shape, int max_entry, std::vector<std::vector<int>>& rows, int i, int j,
          const std::function<void(const ReverseTableau&)>& fn) {
  if (i > shape.length()) {
    fn(ReverseTableau(shape, rows));
    return;
  }
  const int ni = j < shape.part(i) ? i : i + 1;
  const int nj = j < shape.part(i) ? j + 1 : 1;
  const int row_cap = j > 1 ? rows[i - 1][j - 2] : max_entry;
  const int col_cap = i > 1 ? rows[i - 2][j - 1] - 1 : max_entry;
  const int cap = std::min(row_cap, col_cap);
  for (int t = 1; t <= cap; ++t) {
    rows[i - 1][j - 1] = t;
    fill(shape, max_entry, rows, ni, nj, fn);
  }
}

}  // namespace

void for_each_reverse_tableau(const Partition& shape, int max_entry,
                              const std::function<void(const ReverseTableau&)>& fn) {
  if (max_entry < 0) throw std::domain_error("for_each_reverse_tableau: negative entry bound");
  if (shape.empty()) {
    fn(ReverseTableau(shape, {}));
    return;
  }
  if (shape.length() > max_entry) return;  // first column cannot strictly decrease to 1
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape.length(); ++i) rows.emplace_back(shape.part(i));
  fill(shape, max_entry, rows, 1, 1, fn);
}

std::vector<ReverseTableau> reverse_tableaux(const Partition& shape, int max_entry) {
  std::vector<ReverseTableau> out;
  for_each_reverse_tableau(shape, max_entry, [&](const ReverseTableau& t) { out.push_back(t); });
  return out;
}

}  // namespace jackpoly
