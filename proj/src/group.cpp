#include "conway/group.hpp"

#include <algorithm>
#include <array>

#include "conway/error.hpp"

namespace conway {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw FormatError("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw FormatError("group table is not square");
    for (std::size_t v : row)
      if (v >= n) throw FormatError("group table entry " + std::to_string(v) + " out of range");
  }
  inv_.assign(n, npos);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i][j] == 0 && table_[j][i] == 0) {
        inv_[i] = j;
        break;
      }
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup("Z" + std::to_string(n), std::move(t));
}

FiniteGroup symmetric_group3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  // (p.q)(x) = q(p(x)): apply p first.
  auto index_of = [&](const std::array<std::size_t, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[j][perms[i][x]];
      t[i][j] = index_of(c);
    }
  return FiniteGroup("S3", std::move(t));
}

std::vector<FiniteGroup> standard_groups() {
  std::vector<FiniteGroup> groups;
  for (std::size_t n = 1; n <= 5; ++n) groups.push_back(cyclic_group(n));
  groups.push_back(symmetric_group3());
  return groups;
}

FiniteGroup group_from_json(const nlohmann::json& j, std::string name) {
  try {
    const std::size_t n = j.at("order").get<std::size_t>();
    const auto& rows = j.at("table");
    if (!rows.is_array() || rows.size() != n) throw FormatError("table must have " + std::to_string(n) + " rows");
    std::vector<std::vector<std::size_t>> t;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw FormatError("each row must have " + std::to_string(n) + " entries");
      std::vector<std::size_t> r;
      for (const auto& v : row) {
        const std::size_t e = v.get<std::size_t>();
        if (e < 1 || e > n) throw FormatError("entry " + std::to_string(e) + " is not in 1.." + std::to_string(n));
        r.push_back(e - 1);
      }
      t.push_back(std::move(r));
    }
    return FiniteGroup(std::move(name), std::move(t));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed Cayley table: ") + e.what());
  }
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : g.table()) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t v : row) r.push_back(v + 1);
    rows.push_back(std::move(r));
  }
  return {{"order", g.order()}, {"table", std::move(rows)}};
}

CheckReport verify_group_table(const FiniteGroup& g) {
  CheckReport report{"group-table " + g.name(), 1, 0, {}};
  const std::size_t n = g.order();
  auto fail = [&](const std::string& law, const std::string& inputs, std::size_t left, std::size_t right) {
    report.failures.push_back({0, law, inputs, std::to_string(left + 1), std::to_string(right + 1), "", 0});
  };
  auto el = [](std::size_t i) { return std::to_string(i + 1); };

  for (std::size_t i = 0; i < n; ++i) {
    ++report.checks;
    if (g.mul(0, i) != i) fail("left identity", "1." + el(i), g.mul(0, i), i);
    if (g.mul(i, 0) != i) fail("right identity", el(i) + ".1", g.mul(i, 0), i);
    if (g.inv(i) == FiniteGroup::npos) fail("inverse", el(i), i, 0);
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      row[g.mul(i, j)] = true;
      col[g.mul(j, i)] = true;
    }
    if (std::count(row.begin(), row.end(), true) != static_cast<long>(n)) fail("latin row", "row " + el(i), 0, 0);
    if (std::count(col.begin(), col.end(), true) != static_cast<long>(n)) fail("latin column", "column " + el(i), 0, 0);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        ++report.checks;
        const std::size_t left = g.mul(g.mul(a, b), c);
        const std::size_t right = g.mul(a, g.mul(b, c));
        if (left != right) fail("associativity", "(" + el(a) + "," + el(b) + "," + el(c) + ")", left, right);
      }
  return report;
}

}  // namespace conway
