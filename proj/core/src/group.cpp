#include "hopfrb/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfrb {

FiniteGroup::FiniteGroup(std::vector<std::string> labels,
                         std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("empty group table");
  if (labels_.size() != n) throw std::invalid_argument("label count does not match group order");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    for (std::size_t v : row)
      if (v >= n) throw std::invalid_argument("group table entry out of range");
  }
  // Latin square
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row_seen[table_[a][b]]) throw std::invalid_argument("group table row is not a permutation");
      row_seen[table_[a][b]] = true;
      if (col_seen[table_[b][a]]) throw std::invalid_argument("group table column is not a permutation");
      col_seen[table_[b][a]] = true;
    }
  }
  // associativity, all triples
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group table is not associative");
  // identity
  bool found = false;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a)
      if (table_[e][a] != a || table_[a][e] != a) {
        ok = false;
        break;
      }
    if (ok) {
      identity_ = e;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("group table has no identity");
  // inverses
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = false;
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        ok = true;
        break;
      }
    if (!ok) throw std::invalid_argument("group table element has no inverse");
  }
  abelian_ = true;
  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] != table_[b][a]) {
        abelian_ = false;
        break;
      }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::string> labels(n);
  labels[0] = "1";
  for (std::size_t i = 1; i < n; ++i) labels[i] = i == 1 ? "g" : ("g^" + std::to_string(i));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  // r = 3-cycle, s = a transposition; s r = r^2 s
  std::vector<std::string> labels = {"1", "r", "r^2", "s", "rs", "r^2s"};
  auto pack = [](std::size_t rot, std::size_t flip) { return flip * 3 + rot; };
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::size_t ri = i % 3, fi = i / 3, rj = j % 3, fj = j / 3;
      // (r^ri s^fi)(r^rj s^fj) = r^(ri + rj or ri - rj) s^(fi+fj)
      std::size_t rot = fi == 0 ? (ri + rj) % 3 : (ri + 3 - rj) % 3;
      table[i][j] = pack(rot, (fi + fj) % 2);
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  std::size_t n = g.order(), m = h.order();
  std::vector<std::string> labels;
  labels.reserve(n * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b)
      labels.push_back("(" + g.labels()[a] + "," + h.labels()[b] + ")");
  std::vector<std::vector<std::size_t>> table(n * m, std::vector<std::size_t>(n * m));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < m; ++d)
          table[a * m + b][c * m + d] = g.mul(a, c) * m + h.mul(b, d);
  return FiniteGroup(std::move(labels), std::move(table));
}

}  // namespace hopfrb
