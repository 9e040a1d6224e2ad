#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conway/report.hpp"
#include "json.hpp"

namespace conway {

/// A finite group given by its Cayley table. Elements are 0-based here, with
/// element 0 the identity; the JSON form uses 1-based indices.
class FiniteGroup {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// `table[i][j]` is the index of i.j. Entries must be in range; the group
  /// laws are not enforced here, see verify_group_table.
  FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table);

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t i, std::size_t j) const { return table_[i][j]; }
  /// Inverse of i, or npos when i has no two-sided inverse.
  std::size_t inv(std::size_t i) const { return inv_[i]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inv_;
};

/// Z_n, addition mod n.
FiniteGroup cyclic_group(std::size_t n);

/// S_3 as the permutations of {0,1,2}; element 0 is the identity.
FiniteGroup symmetric_group3();

/// Z1..Z5 and S3.
std::vector<FiniteGroup> standard_groups();

/// {"order": n, "table": [[...]]}, 1-based, element 1 the identity.
FiniteGroup group_from_json(const nlohmann::json& j, std::string name = "G");
nlohmann::json group_to_json(const FiniteGroup& g);

/// Exhaustive check of identity, inverses, Latin-square rows/columns and
/// associativity over all n^3 triples.
CheckReport verify_group_table(const FiniteGroup& g);

}  // namespace conway
