#include "symcoh/fingroup.hpp"

#include "symcoh/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

namespace symcoh {

FinGroup::FinGroup(std::vector<std::vector<int>> table, std::string label) : label_(std::move(label)) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("group table is empty");
  if (n > Guards::group_order_cap()) {
    throw ResourceGuardError("group order " + std::to_string(n) + " exceeds the cap of " + std::to_string(Guards::group_order_cap()));
  }
  order_ = static_cast<int>(n);
  table_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw NotAGroup("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= order_) throw NotAGroup("group table entry out of range");
      table_.push_back(v);
    }
  }
  for (int a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw NotAGroup("index 0 is not a two-sided identity");
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) throw NotAGroup("one-sided inverse");
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0) throw NotAGroup("element without inverse");
  }
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < order_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) throw NotAGroup("multiplication is not associative");
      }
    }
  }
}

std::vector<std::vector<int>> FinGroup::table() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) out[static_cast<std::size_t>(a)].push_back(mul(a, b));
  }
  return out;
}

int FinGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

namespace {

void check_order(std::uint64_t n) {
  if (n > Guards::group_order_cap()) {
    throw ResourceGuardError("group order " + std::to_string(n) + " exceeds the cap of " + std::to_string(Guards::group_order_cap()));
  }
}

}  // namespace

FinGroup cyclic_group(int n) {
  if (n < 1) throw InvalidArgument("cyclic group needs n >= 1");
  check_order(static_cast<std::uint64_t>(n));
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FinGroup(std::move(t), "C" + std::to_string(n));
}

FinGroup dihedral_group(int n) {
  if (n < 1) throw InvalidArgument("dihedral group needs n >= 1");
  check_order(2 * static_cast<std::uint64_t>(n));
  const int m = 2 * n;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int a = x % n, e = x / n, b = y % n, f = y / n;
      // r^a s^e r^b s^f = r^(a + (-1)^e b) s^(e + f)
      const int k = ((e ? a - b : a + b) % n + n) % n;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = k + n * ((e + f) % 2);
    }
  }
  return FinGroup(std::move(t), "D" + std::to_string(n));
}

FinGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw InvalidArgument("symmetric group needs 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      t[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FinGroup(std::move(t), "S" + std::to_string(n));
}

FinGroup quaternion_group() {
  // unit u in {1,i,j,k} as 0..3 with sign; index = 2*u + (negative ? 1 : 0)
  static constexpr std::array<std::array<int, 4>, 4> unit = {{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign = {{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      int s = sign[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (x % 2) s = -s;
      if (y % 2) s = -s;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 2 * unit[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] + (s < 0 ? 1 : 0);
    }
  }
  return FinGroup(std::move(t), "Q8");
}

FinGroup direct_product(const FinGroup& g, const FinGroup& h) {
  check_order(static_cast<std::uint64_t>(g.order()) * static_cast<std::uint64_t>(h.order()));
  const int n = g.order() * h.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          g.mul(x / h.order(), y / h.order()) * h.order() + h.mul(x % h.order(), y % h.order());
    }
  }
  return FinGroup(std::move(t), g.label() + "x" + h.label());
}

namespace {

FinGroup parse_atom(std::string_view atom) {
  if (atom == "Q8") return quaternion_group();
  if (atom.size() < 2) throw ParseError("malformed group atom '" + std::string(atom) + "'");
  const char kind = atom[0];
  const std::string_view digits = atom.substr(1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits[0] == '+' || digits[0] == '-') {
    if (ec == std::errc::result_out_of_range) throw ResourceGuardError("group atom '" + std::string(atom) + "' is too large");
    throw ParseError("malformed group atom '" + std::string(atom) + "'");
  }
  if (n < 1) throw ParseError("group atom '" + std::string(atom) + "' needs a positive index");
  switch (kind) {
    case 'C':
      check_order(static_cast<std::uint64_t>(n));
      return cyclic_group(n);
    case 'D':
      check_order(2 * static_cast<std::uint64_t>(n));
      return dihedral_group(n);
    case 'S':
      if (n > 5) throw ParseError("symmetric groups are limited to S1..S5");
      return symmetric_group(n);
    default:
      throw ParseError("unknown group family in '" + std::string(atom) + "'");
  }
}

}  // namespace

FinGroup make_group(std::string_view spec) {
  if (spec.empty()) throw ParseError("empty group spec");
  std::vector<std::string_view> atoms;
  std::size_t start = 0;
  while (true) {
    const std::size_t x = spec.find('x', start);
    atoms.push_back(spec.substr(start, x == std::string_view::npos ? std::string_view::npos : x - start));
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  // Check the total order before building anything large.
  std::uint64_t total = 1;
  std::vector<FinGroup> parts;
  for (auto a : atoms) {
    if (a.empty()) throw ParseError("empty factor in group spec '" + std::string(spec) + "'");
  }
  for (auto a : atoms) {
    parts.push_back(parse_atom(a));
    total *= static_cast<std::uint64_t>(parts.back().order());
    check_order(total);
  }
  FinGroup g = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parts[i]);
  return g;
}

bool has_element_of_order_two(const FinGroup& g) {
  for (int x = 1; x < g.order(); ++x) {
    if (g.mul(x, x) == 0) return true;
  }
  return false;
}

}  // namespace symcoh
