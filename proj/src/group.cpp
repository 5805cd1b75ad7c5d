#include "gpi/group.hpp"

#include <set>
#include <stdexcept>

namespace gpi {

int FiniteGroup::inverse(int i) const {
  for (int j = 0; j < order(); ++j)
    if (table[i][j] == identity) return j;
  throw std::logic_error("group element has no inverse");
}

std::vector<std::string> FiniteGroup::check() const {
  std::vector<std::string> bad;
  const int s = order();
  if (identity < 0 || identity >= s) {
    bad.push_back("identity index out of range");
    return bad;
  }
  if (static_cast<int>(table.size()) != s) {
    bad.push_back("table row count != order");
    return bad;
  }
  for (int i = 0; i < s; ++i) {
    if (static_cast<int>(table[i].size()) != s) {
      bad.push_back("table column count != order at row " + std::to_string(i));
      return bad;
    }
    for (int j = 0; j < s; ++j)
      if (table[i][j] < 0 || table[i][j] >= s)
        bad.push_back("entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (!bad.empty()) return bad;
  std::set<std::string> names(labels.begin(), labels.end());
  if (static_cast<int>(names.size()) != s) bad.push_back("labels are not distinct");
  for (int i = 0; i < s; ++i) {
    if (table[identity][i] != i || table[i][identity] != i)
      bad.push_back("identity fails at " + std::to_string(i));
    std::set<int> row(table[i].begin(), table[i].end());
    if (static_cast<int>(row.size()) != s)
      bad.push_back("row " + std::to_string(i) + " is not a permutation");
    std::set<int> col;
    for (int j = 0; j < s; ++j) col.insert(table[j][i]);
    if (static_cast<int>(col.size()) != s)
      bad.push_back("column " + std::to_string(i) + " is not a permutation");
  }
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < s; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          bad.push_back("associativity fails at (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
  bool has_inv = true;
  for (int i = 0; i < s && has_inv; ++i) {
    bool found = false;
    for (int j = 0; j < s; ++j)
      if (table[i][j] == identity) found = true;
    if (!found) {
      bad.push_back("no inverse for element " + std::to_string(i));
      has_inv = false;
    }
  }
  return bad;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  FiniteGroup g;
  g.identity = 0;
  for (int i = 0; i < n; ++i) g.labels.push_back(n == 1 ? "e" : (i == 0 ? "e" : "g" + std::to_string(i)));
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

}  // namespace gpi
