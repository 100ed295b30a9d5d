#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hopfrb {

/// A finite group given by its multiplication table.  The constructor
/// validates the table in full: Latin square, associativity over all triples,
/// two-sided identity, inverses.  Throws std::invalid_argument otherwise.
class FiniteGroup {
public:
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup symmetric3();
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const { return identity_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  bool is_abelian() const { return abelian_; }

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  bool abelian_ = true;
};

}  // namespace hopfrb
