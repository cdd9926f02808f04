#ifndef SYMCOH_FINGROUP_HPP
#define SYMCOH_FINGROUP_HPP

#include <string>
#include <string_view>
#include <vector>

namespace symcoh {

/// A finite group as a multiplication table.  Index 0 is the identity.
class FinGroup {
 public:
  /// Validates closure, identity at 0, inverses and associativity
  /// (NotAGroup otherwise); ResourceGuardError above the order cap.
  FinGroup(std::vector<std::vector<int>> table, std::string label);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  static constexpr int identity() { return 0; }
  const std::string& label() const { return label_; }
  std::vector<std::vector<int>> table() const;
  const std::vector<int>& inverses() const { return inverse_; }

  /// Order of the element g.
  int element_order(int g) const;

  friend bool operator==(const FinGroup& a, const FinGroup& b) { return a.table_ == b.table_; }

 private:
  int order_;
  std::vector<int> table_;  // row-major order x order
  std::vector<int> inverse_;
  std::string label_;
};

FinGroup cyclic_group(int n);
/// Dihedral group of order 2n; element r^k s^e has index k + n*e.
FinGroup dihedral_group(int n);
/// Permutations of n points in lexicographic order, (p*q)(i) = p(q(i)).
FinGroup symmetric_group(int n);
/// 1, -1, i, -i, j, -j, k, -k.
FinGroup quaternion_group();
/// (a, b) has index a * |H| + b.
FinGroup direct_product(const FinGroup& g, const FinGroup& h);

/// Parses `atom ("x" atom)*` with atoms C<n>, D<n>, S<n> (n <= 5) and Q8.
FinGroup make_group(std::string_view spec);

bool has_element_of_order_two(const FinGroup& g);

}  // namespace symcoh

#endif  // SYMCOH_FINGROUP_HPP
