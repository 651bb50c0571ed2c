#include "jackpoly/partition.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace jackpoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::domain_error("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::domain_error("Partition: parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view s) {
  if (s.empty() || s == "0") return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string_view tok = s.substr(pos, comma - pos);
    if (tok.empty()) throw std::invalid_argument("Partition::parse: empty part in '" + std::string(s) + "'");
    int value = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("Partition::parse: invalid part '" + std::string(tok) + "'");
      value = value * 10 + (c - '0');
      if (value > 1'000'000) throw std::invalid_argument("Partition::parse: part out of range");
    }
    parts.push_back(value);
    if (comma == s.size()) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));  // the constructor validates monotonicity
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> cols(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++cols[j];
  return Partition(std::move(cols));
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

bool interlaces(const Partition& nu, const Partition& lambda) {
  if (nu.length() > lambda.length()) return false;
  const int rows = lambda.length();
  for (int i = 1; i <= rows; ++i)
    if (nu.part(i) > lambda.part(i) || nu.part(i) < lambda.part(i + 1)) return false;
  return true;
}

namespace {

void check_cell(const Partition& mu, Square s) {
  if (s.row < 1 || s.col < 1 || s.col > mu.part(s.row))
    throw std::domain_error("cell (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                            ") outside partition " + mu.str());
}

}  // namespace

int arm(const Partition& mu, Square s) {
  check_cell(mu, s);
  return mu.part(s.row) - s.col;
}

int leg(const Partition& mu, Square s) {
  check_cell(mu, s);
  int count = 0;
  for (int i = s.row + 1; mu.part(i) >= s.col; ++i) ++count;
  return count;
}

int coarm(Square s) { return s.col - 1; }
int coleg(Square s) { return s.row - 1; }

Rational hook_h(const Partition& mu, const Rational& theta) {
  Rational prod(1);
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i); ++j)
      prod *= Rational(arm(mu, {i, j})) + theta * Rational(leg(mu, {i, j})) + Rational(1);
  return prod;
}

Rational hook_hprime(const Partition& mu, const Rational& theta) {
  Rational prod(1);
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i); ++j)
      prod *= Rational(arm(mu, {i, j})) + theta * (Rational(leg(mu, {i, j})) + Rational(1));
  return prod;
}

Rational pochhammer(const Rational& t, const Partition& mu, const Rational& theta) {
  Rational prod(1);
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i); ++j)
      prod *= t + Rational(coarm({i, j})) - theta * Rational(coleg({i, j}));
  return prod;
}

bool graded_lex_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.parts() > b.parts();  // lexicographically greater first within a grade
}

namespace {

// Partitions of exactly `remaining`, first part <= cap, at most `rows` more
// parts; appends to prefix in lex-descending order of the completed vector.
void emit_partitions(int remaining, int cap, int rows, std::vector<int>& prefix,
                     const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(prefix));
    return;
  }
  if (rows == 0) return;
  for (int p = std::min(cap, remaining); p >= 1; --p) {
    prefix.push_back(p);
    emit_partitions(remaining - p, p, rows - 1, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(int max_size, int max_length, const std::function<void(const Partition&)>& fn) {
  if (max_size < 0) throw std::domain_error("for_each_partition: negative size bound");
  std::vector<int> prefix;
  for (int k = 0; k <= max_size; ++k) emit_partitions(k, k, max_length, prefix, fn);
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
  std::vector<Partition> out;
  for_each_partition(max_size, max_length, [&](const Partition& p) { out.push_back(p); });
  return out;
}

namespace {

void emit_interlacings(const Partition& lambda, int max_rows, int row, std::vector<int>& prefix,
                       const std::function<void(const Partition&)>& fn) {
  if (row > max_rows) {
    fn(Partition(prefix));
    return;
  }
  const int hi = std::min(lambda.part(row), row > 1 ? prefix[row - 2] : lambda.part(1));
  const int lo = lambda.part(row + 1);
  for (int v = hi; v >= lo; --v) {
    prefix.push_back(v);
    emit_interlacings(lambda, max_rows, row + 1, prefix, fn);
    prefix.pop_back();
  }
}

void emit_subpartitions(const Partition& lambda, int row, std::vector<int>& prefix,
                        const std::function<void(const Partition&)>& fn) {
  if (row > lambda.length()) {
    fn(Partition(prefix));
    return;
  }
  const int hi = std::min(lambda.part(row), row > 1 ? prefix[row - 2] : lambda.part(1));
  for (int v = hi; v >= 0; --v) {
    if (v == 0) {  // remaining rows forced to zero
      fn(Partition(prefix));
      break;
    }
    prefix.push_back(v);
    emit_subpartitions(lambda, row + 1, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_interlacing(const Partition& lambda, int n,
                          const std::function<void(const Partition&)>& fn) {
  if (n < lambda.length())
    throw std::domain_error("for_each_interlacing: lambda has more parts than variables");
  // Rows past min(n-1, length) are pinched to zero by the interlacing chain.
  std::vector<int> prefix;
  emit_interlacings(lambda, std::min(n - 1, lambda.length()), 1, prefix, fn);
}

std::vector<Partition> interlacings(const Partition& lambda, int n) {
  std::vector<Partition> out;
  for_each_interlacing(lambda, n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_subpartition(const Partition& lambda, const std::function<void(const Partition&)>& fn) {
  std::vector<int> prefix;
  emit_subpartitions(lambda, 1, prefix, fn);
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  for_each_subpartition(lambda, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace jackpoly
