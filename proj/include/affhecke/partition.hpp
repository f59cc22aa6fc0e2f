#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace affhecke {

/// Integer partition with weakly decreasing positive parts; may be empty.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// "3,1" -> (3,1); "" -> ()
  static Partition parse(const std::string& text);
  /// All partitions of n in reverse lexicographic order.
  static std::vector<Partition> all_of(int n);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }  // 1-based

  Partition conjugate() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A cell (row, column), both 1-based.
using Cell = std::pair<int, int>;

/// Hook length of every cell of the diagram (row-major order).
std::vector<int> hook_multiset(const Partition& lambda);

/// content(i,j) = j - i for every cell.
std::map<Cell, int> contents(const Partition& lambda);

enum class HookMode {
  /// lambda_i + l_j - i - j + 1 over the full r x k grid
  literal,
  /// hook lengths of the cells of the diagram
  positive
};

/// A finite set of hook exponents e; the associated singular set is {u^{+-e}}.
struct HookExponentSet {
  std::set<int> exponents;
  HookMode mode = HookMode::positive;

  /// {+-e : e in exponents}
  std::set<int> symmetric() const;
  bool contains(int e) const { return exponents.count(e) > 0; }
};

HookExponentSet hook_exponent_set(const Partition& lambda, HookMode mode = HookMode::positive);

/// Standard Young tableaux of shape lambda; each tableau lists, for k = 1..n,
/// the cell holding k.
std::vector<std::vector<Cell>> standard_tableaux(const Partition& lambda);

}  // namespace affhecke
