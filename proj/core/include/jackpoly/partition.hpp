#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "jackpoly/rational.hpp"

namespace jackpoly {

// Integer partition: weakly decreasing positive parts, stored without
// trailing zeros.  The empty partition is valid.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Text form: comma-separated parts "3,1,1"; "" and "0" denote the empty
  // partition.
  static Partition parse(std::string_view s);

  int size() const { return size_; }                                 // |mu|
  int length() const { return static_cast<int>(parts_.size()); }     // number of parts
  int part(int i) const {                                            // 1-based; 0 beyond the length
    return i >= 1 && i <= length() ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Plain lexicographic comparison on the part vectors (container order, not
  // the graded order; see graded_lex_less).
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Cell (i, j) of a Young diagram, 1-based: row i, column j.
struct Square {
  int row = 1;
  int col = 1;
};

// mu_i <= lambda_i for all i (containment of diagrams).
bool contains(const Partition& lambda, const Partition& mu);

// nu interlaces lambda: lambda_1 >= nu_1 >= lambda_2 >= nu_2 >= ...
bool interlaces(const Partition& nu, const Partition& lambda);

// Arm/leg and co-arm/co-leg of a cell of mu.  The cell must lie inside the
// diagram.
int arm(const Partition& mu, Square s);
int leg(const Partition& mu, Square s);
int coarm(Square s);  // j - 1
int coleg(Square s);  // i - 1

// Hook products over the cells of mu:
//   H(mu)  = prod (arm + theta*leg + 1)
//   H'(mu) = prod (arm + theta*leg + theta)
Rational hook_h(const Partition& mu, const Rational& theta);
Rational hook_hprime(const Partition& mu, const Rational& theta);

// Generalized Pochhammer symbol (t)_mu = prod over cells (t + coarm - theta*coleg).
Rational pochhammer(const Rational& t, const Partition& mu, const Rational& theta);

// Graded lexicographic order: ascending total size; within a size,
// lexicographically descending parts.  Under this order the sequence starts
// (), (1), (2), (1,1), (3), (2,1), (1,1,1), ...
bool graded_lex_less(const Partition& a, const Partition& b);

struct GradedLexLess {
  bool operator()(const Partition& a, const Partition& b) const { return graded_lex_less(a, b); }
};

// All partitions of each size 0..max_size with at most max_length parts, in
// graded-lex order.
void for_each_partition(int max_size, int max_length, const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions_up_to(int max_size, int max_length);

// All nu interlacing lambda in n variables,
//   lambda_1 >= nu_1 >= lambda_2 >= ... >= nu_{n-1} >= lambda_n,
// so nu has at most n-1 parts; emitted in descending lexicographic order.
// n < length(lambda) is a domain error.
void for_each_interlacing(const Partition& lambda, int n,
                          const std::function<void(const Partition&)>& fn);
std::vector<Partition> interlacings(const Partition& lambda, int n);

// All mu contained in lambda, in descending lexicographic order.
void for_each_subpartition(const Partition& lambda, const std::function<void(const Partition&)>& fn);
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace jackpoly
