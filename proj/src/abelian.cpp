#include "symcoh/abelian.hpp"

#include "symcoh/smith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace symcoh {

// ---------------------------------------------------------------- AbGroup

AbGroup::AbGroup() : factors_(std::make_shared<const std::vector<Integer>>()) {}

AbGroup::AbGroup(std::vector<Integer> factors, Unchecked)
    : factors_(std::make_shared<const std::vector<Integer>>(std::move(factors))) {}

AbGroup::AbGroup(std::vector<Integer> invariant_factors) : AbGroup(std::move(invariant_factors), Unchecked{}) {
  if (!is_canonical()) throw InvalidArgument("AbGroup: not in invariant-factor form: " + to_string());
}

AbGroup::AbGroup(std::initializer_list<long long> invariant_factors)
    : AbGroup(std::vector<Integer>(invariant_factors.begin(), invariant_factors.end())) {}

AbGroup AbGroup::diagonal(std::vector<Integer> moduli) {
  for (const auto& d : moduli) {
    if (d.sign() < 0) throw InvalidArgument("AbGroup: negative modulus");
  }
  return AbGroup(std::move(moduli), Unchecked{});
}

AbGroup AbGroup::free(Index rank) { return AbGroup(std::vector<Integer>(static_cast<std::size_t>(rank), Integer(0)), Unchecked{}); }

AbGroup AbGroup::cyclic(const Integer& n) { return diagonal({abs(n)}).canonical(); }

bool AbGroup::is_canonical() const {
  const auto& f = factors();
  bool seen_zero = false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].sign() < 0 || f[i] == Integer(1)) return false;
    if (f[i].is_zero()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (i + 1 < f.size() && !f[i + 1].is_zero() && !divides(f[i], f[i + 1])) return false;
  }
  return true;
}

AbGroup AbGroup::canonical() const {
  if (is_canonical()) return *this;
  std::vector<Integer> tors;
  std::size_t zeros = 0;
  for (const auto& d : factors()) {
    if (d.is_zero()) {
      ++zeros;
    } else if (d != Integer(1)) {
      tors.push_back(d);
    }
  }
  std::sort(tors.begin(), tors.end());
  // (a, b) -> (gcd, lcm) sweeps leave tors[i] dividing every later entry.
  for (std::size_t i = 0; i < tors.size(); ++i) {
    for (std::size_t j = i + 1; j < tors.size(); ++j) {
      if (divides(tors[i], tors[j])) continue;
      const Integer g = gcd(tors[i], tors[j]);
      tors[j] = tors[i] / g * tors[j];
      tors[i] = g;
    }
  }
  std::vector<Integer> out;
  for (auto& d : tors) {
    if (d != Integer(1)) out.push_back(std::move(d));
  }
  out.insert(out.end(), zeros, Integer(0));
  return AbGroup(std::move(out), Unchecked{});
}

bool AbGroup::is_trivial() const {
  return std::all_of(factors().begin(), factors().end(), [](const Integer& d) { return d == Integer(1); });
}

bool AbGroup::is_finite() const {
  return std::none_of(factors().begin(), factors().end(), [](const Integer& d) { return d.is_zero(); });
}

Index AbGroup::free_rank() const {
  return static_cast<Index>(std::count_if(factors().begin(), factors().end(), [](const Integer& d) { return d.is_zero(); }));
}

std::optional<Integer> AbGroup::order() const {
  Integer n(1);
  for (const auto& d : factors()) {
    if (d.is_zero()) return std::nullopt;
    n *= d;
  }
  return n;
}

AbGroup AbGroup::direct_sum(const AbGroup& other) const {
  std::vector<Integer> f = factors();
  f.insert(f.end(), other.factors().begin(), other.factors().end());
  return AbGroup(std::move(f), Unchecked{});
}

AbGroup AbGroup::repeat(std::uint64_t copies) const {
  Guards::check_entries(copies, factors().size(), "AbGroup::repeat");
  std::vector<Integer> f;
  f.reserve(copies * factors().size());
  for (std::uint64_t c = 0; c < copies; ++c) f.insert(f.end(), factors().begin(), factors().end());
  return AbGroup(std::move(f), Unchecked{});
}

Integer AbGroup::reduce_coord(Index i, const Integer& x) const { return mod(x, factor(i)); }

IntVector AbGroup::reduce(IntVector coords) const {
  if (coords.size() != num_coords()) throw InvalidArgument("AbGroup::reduce: wrong number of coordinates");
  for (Index i = 0; i < coords.size(); ++i) coords(i) = mod(coords(i), factor(i));
  return coords;
}

std::string AbGroup::to_string() const {
  const AbGroup c = canonical();
  if (c.factors().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const Index r = c.free_rank();
  for (const auto& d : c.factors()) {
    if (d.is_zero()) break;
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (r > 0) {
    os << (first ? "" : " + ") << "Z";
    if (r > 1) os << "^" << r;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbGroup& a) {
  os << '[';
  for (std::size_t i = 0; i < a.factors().size(); ++i) os << (i ? ", " : "") << a.factors()[i];
  return os << ']';
}

bool isomorphic(const AbGroup& a, const AbGroup& b) { return a.canonical() == b.canonical(); }

// -------------------------------------------------------------- AbElement

AbElement::AbElement(AbGroup parent, IntVector coords) : parent_(std::move(parent)), coords_(parent_.reduce(std::move(coords))) {}

AbElement AbElement::zero(const AbGroup& parent) {
  return AbElement(parent, IntVector::Constant(parent.num_coords(), Integer(0)));
}

bool AbElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x.is_zero(); });
}

namespace {

void require_same_parent(const AbElement& a, const AbElement& b) {
  if (!(a.parent() == b.parent())) throw InvalidArgument("AbElement: elements of different groups");
}

}  // namespace

AbElement operator+(const AbElement& a, const AbElement& b) {
  require_same_parent(a, b);
  return AbElement(a.parent(), a.coords() + b.coords());
}

AbElement operator-(const AbElement& a, const AbElement& b) {
  require_same_parent(a, b);
  return AbElement(a.parent(), a.coords() - b.coords());
}

AbElement operator*(const Integer& k, const AbElement& a) { return AbElement(a.parent(), a.coords() * k); }

AbElement AbElement::operator-() const { return AbElement(parent_, -coords_); }

bool operator==(const AbElement& a, const AbElement& b) { return a.parent() == b.parent() && a.coords() == b.coords(); }

Integer element_order(const AbElement& x) {
  Integer n(1);
  for (Index i = 0; i < x.coords().size(); ++i) {
    const Integer& c = x.coords()(i);
    if (c.is_zero()) continue;
    const Integer& d = x.parent().factor(i);
    if (d.is_zero()) return Integer(0);
    n = lcm(n, d / gcd(c, d));
  }
  return n;
}

// ------------------------------------------------------------------ AbHom

void reduce_rows(SparseIntMatrix& m, const AbGroup& target) {
  for (Index i = 0; i < m.outerSize(); ++i) {
    const Integer& d = target.factor(i);
    if (d.is_zero()) continue;
    for (SparseIntMatrix::InnerIterator it(m, i); it; ++it) it.valueRef() = mod(it.value(), d);
  }
  prune_zeros(m);
}

AbHom::AbHom(AbGroup source, AbGroup target, SparseIntMatrix matrix) : source_(std::move(source)), target_(std::move(target)) {
  if (matrix.rows() != target_.num_coords() || matrix.cols() != source_.num_coords()) {
    throw InvalidArgument("AbHom: matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                          ", expected " + std::to_string(target_.num_coords()) + "x" + std::to_string(source_.num_coords()));
  }
  reduce_rows(matrix, target_);
  for (Index i = 0; i < matrix.outerSize(); ++i) {
    const Integer& t = target_.factor(i);
    for (SparseIntMatrix::InnerIterator it(matrix, i); it; ++it) {
      const Integer& d = source_.factor(it.col());
      if (d.is_zero()) continue;
      if (t.is_zero() || !(d * it.value() % t).is_zero()) {
        throw NotWellDefined("AbHom: source relation " + d.to_string() + "*e" + std::to_string(it.col()) +
                             " is not sent to zero");
      }
    }
  }
  matrix.makeCompressed();
  matrix_ = std::make_shared<const SparseIntMatrix>(std::move(matrix));
}

AbHom::AbHom(AbGroup source, AbGroup target, const IntMatrix& matrix)
    : AbHom(std::move(source), std::move(target), to_sparse(matrix)) {}

AbHom AbHom::identity(const AbGroup& a) {
  SparseIntMatrix m(a.num_coords(), a.num_coords());
  m.setIdentity();
  return AbHom(a, a, std::move(m));
}

AbHom AbHom::zero(const AbGroup& source, const AbGroup& target) {
  return AbHom(source, target, SparseIntMatrix(target.num_coords(), source.num_coords()));
}

AbHom AbHom::multiplication(const AbGroup& a, const Integer& k) {
  SparseIntMatrix m(a.num_coords(), a.num_coords());
  m.setIdentity();
  return AbHom(a, a, SparseIntMatrix(m * k));
}

IntVector AbHom::apply(const IntVector& x) const {
  if (x.size() != source_.num_coords()) throw InvalidArgument("AbHom::apply: wrong number of coordinates");
  return target_.reduce(*matrix_ * x);
}

AbElement AbHom::operator()(const AbElement& x) const {
  if (!(x.parent() == source_)) throw InvalidArgument("AbHom: element not in the source group");
  return AbElement(target_, *matrix_ * x.coords());
}

bool operator==(const AbHom& a, const AbHom& b) {
  return a.source() == b.source() && a.target() == b.target() && same_matrix(a.matrix(), b.matrix());
}

namespace {

void require_parallel(const AbHom& a, const AbHom& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw InvalidArgument("AbHom: homs have different source or target");
  }
}

}  // namespace

AbHom operator+(const AbHom& a, const AbHom& b) {
  require_parallel(a, b);
  return AbHom(a.source(), a.target(), SparseIntMatrix(a.matrix() + b.matrix()));
}

AbHom operator-(const AbHom& a, const AbHom& b) {
  require_parallel(a, b);
  return AbHom(a.source(), a.target(), SparseIntMatrix(a.matrix() - b.matrix()));
}

AbHom operator*(const Integer& k, const AbHom& a) { return AbHom(a.source(), a.target(), SparseIntMatrix(a.matrix() * k)); }

AbHom AbHom::operator-() const { return AbHom(source_, target_, SparseIntMatrix(-*matrix_)); }

AbHom compose(const AbHom& g, const AbHom& f) {
  if (!(f.target() == g.source())) throw InvalidArgument("compose: target of f is not the source of g");
  Guards::check_count(static_cast<std::uint64_t>(g.matrix().nonZeros()) + f.matrix().nonZeros(), "compose");
  SparseIntMatrix p = g.matrix() * f.matrix();
  return AbHom(f.source(), g.target(), std::move(p));
}

// ------------------------------------------------------------ Subquotient

namespace {

constexpr std::int64_t kModularLimit = rings::Residues::kMaxModulus;

// Lcm of the moduli of B (all torsion) and the torsion moduli of C, when it
// fits the residue ring.
std::optional<std::int64_t> modular_modulus(const AbGroup& b, const AbGroup& c) {
  Integer m(1);
  for (const AbGroup* grp : {&b, &c}) {
    for (const auto& d : grp->factors()) {
      if (d.is_zero()) {
        if (grp == &b) return std::nullopt;
        continue;
      }
      m = lcm(m, d);
      if (m > Integer(kModularLimit)) return std::nullopt;
    }
  }
  if (m < Integer(2)) return std::nullopt;
  return m.to_int64();
}

std::int64_t residue(const Integer& x, std::int64_t m) {
  if (x.is_small()) {
    std::int64_t r = x.to_int64() % m;
    return r < 0 ? r + m : r;
  }
  return mod(x, Integer(m)).to_int64();
}

// r x n residue matrix times an n x k Integer matrix, mod m.
RowMatrix<std::int64_t> mulmod(const RowMatrix<std::int64_t>& a, const IntMatrix& x, std::int64_t m) {
  RowMatrix<std::int64_t> xr(x.rows(), x.cols());
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j) xr(i, j) = residue(x(i, j), m);
  RowMatrix<std::int64_t> out = RowMatrix<std::int64_t>::Zero(a.rows(), x.cols());
  std::vector<unsigned __int128> acc(static_cast<std::size_t>(x.cols()));
  for (Index i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (Index l = 0; l < a.cols(); ++l) {
      const std::int64_t av = a(i, l);
      if (av == 0) continue;
      for (Index j = 0; j < x.cols(); ++j) {
        if (xr(l, j) != 0) acc[j] += static_cast<unsigned __int128>(av) * static_cast<std::uint64_t>(xr(l, j));
      }
    }
    for (Index j = 0; j < x.cols(); ++j) out(i, j) = static_cast<std::int64_t>(acc[j] % static_cast<std::uint64_t>(m));
  }
  return out;
}

IntMatrix lift(const RowMatrix<std::int64_t>& a) {
  IntMatrix out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = Integer(a(i, j));
  return out;
}

// Kernel of g, lifted to the coordinate lattice of B: a basis together with
// the order of each basis vector (0 when free) and a map from cycles to
// basis coordinates.
struct KernelLattice {
  IntMatrix basis;              // n x r
  std::vector<Integer> orders;  // r
  // Modular engine: w_i = (vinv_rows * x)_i / scale_i mod modulus.
  std::int64_t modulus = 0;
  RowMatrix<std::int64_t> vinv_rows;
  std::vector<std::int64_t> scale;
  // Exact engine: w = vinv_tail * (x ; y) with y_k = (g x)_k / c_k on the
  // torsion rows listed in tors_rows.
  RowMatrix<Integer> vinv_tail;
  std::vector<Index> tors_rows;
  std::vector<Integer> tors_mod;
  SparseIntMatrix g;

  IntMatrix coords(const IntMatrix& x) const {
    const Index r = static_cast<Index>(orders.size());
    if (r == 0) return IntMatrix(0, x.cols());
    if (modulus != 0) {
      RowMatrix<std::int64_t> y = mulmod(vinv_rows, x, modulus);
      IntMatrix w(r, x.cols());
      for (Index i = 0; i < r; ++i) {
        for (Index j = 0; j < x.cols(); ++j) {
          if (y(i, j) % scale[i] != 0) throw InvalidArgument("Subquotient: element is not a cycle");
          w(i, j) = Integer(y(i, j) / scale[i]);
        }
      }
      return w;
    }
    const Index n = x.rows();
    const Index t = static_cast<Index>(tors_rows.size());
    IntMatrix stacked(n + t, x.cols());
    stacked.topRows(n) = x;
    if (t > 0) {
      IntMatrix gx = g * x;
      for (Index k = 0; k < t; ++k) {
        for (Index j = 0; j < x.cols(); ++j) stacked(n + k, j) = divexact(gx(tors_rows[k], j), tors_mod[k]);
      }
    }
    IntMatrix w = IntMatrix(vinv_tail) * stacked;
    for (Index i = 0; i < r; ++i) {
      if (orders[i].is_zero()) continue;
      for (Index j = 0; j < w.cols(); ++j) w(i, j) = mod(w(i, j), orders[i]);
    }
    return w;
  }
};

KernelLattice modular_kernel(const AbHom& g, std::int64_t m) {
  const AbGroup& b = g.source();
  const AbGroup& c = g.target();
  const Index n = b.num_coords();
  std::vector<Index> rows;
  for (Index k = 0; k < g.matrix().outerSize(); ++k) {
    if (c.is_torsion_coord(k) && g.matrix().outerIndexPtr()[k + 1] > g.matrix().outerIndexPtr()[k]) rows.push_back(k);
  }
  Guards::check_entries(rows.size(), n, "kernel work matrix");
  RowMatrix<std::int64_t> a = RowMatrix<std::int64_t>::Zero(static_cast<Index>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::int64_t s = m / c.factor(rows[r]).to_int64();
    for (SparseIntMatrix::InnerIterator it(g.matrix(), rows[r]); it; ++it) {
      a(static_cast<Index>(r), it.col()) = static_cast<std::int64_t>((static_cast<__int128>(residue(it.value(), m)) * s) % m);
    }
  }
  rings::Residues ring(m);
  SmithEngine<rings::Residues> compress(ring, std::move(a), {});
  compress.compress_rows();
  compress.drop_zero_rows();
  SmithEngine<rings::Residues> e(ring, compress.a(), {.v = true, .v_inv = true});
  e.diagonalize();

  KernelLattice k;
  k.modulus = m;
  std::vector<Index> kept;
  for (Index i = 0; i < n; ++i) {
    const std::int64_t order = i < e.rank() ? e.diagonal(i) : m;
    if (order == 1) continue;
    kept.push_back(i);
    k.orders.emplace_back(order);
    k.scale.push_back(m / order);
  }
  const Index r = static_cast<Index>(kept.size());
  k.basis.resize(n, r);
  k.vinv_rows.resize(r, n);
  for (Index j = 0; j < r; ++j) {
    const Index i = kept[j];
    for (Index l = 0; l < n; ++l) {
      k.basis(l, j) = Integer(static_cast<std::int64_t>((static_cast<__int128>(e.v()(l, i)) * k.scale[j]) % m));
      k.vinv_rows(j, l) = e.v_inv()(i, l);
    }
  }
  return k;
}

KernelLattice exact_kernel(const AbHom& g) {
  const AbGroup& c = g.target();
  const Index n = g.source().num_coords();
  const SparseIntMatrix& gm = g.matrix();
  KernelLattice k;
  std::vector<Index> rows;
  for (Index r = 0; r < gm.outerSize(); ++r) {
    if (gm.outerIndexPtr()[r + 1] == gm.outerIndexPtr()[r]) continue;
    rows.push_back(r);
    if (c.is_torsion_coord(r)) {
      k.tors_rows.push_back(r);
      k.tors_mod.push_back(c.factor(r));
    }
  }
  const Index t = static_cast<Index>(k.tors_rows.size());
  Guards::check_entries(rows.size(), n + t, "kernel work matrix");
  Guards::check_entries(n + t, n + t, "kernel transform");
  RowMatrix<Integer> a = RowMatrix<Integer>::Constant(static_cast<Index>(rows.size()), n + t, Integer(0));
  Index tc = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (SparseIntMatrix::InnerIterator it(gm, rows[r]); it; ++it) a(static_cast<Index>(r), it.col()) = it.value();
    if (c.is_torsion_coord(rows[r])) a(static_cast<Index>(r), n + tc++) = -c.factor(rows[r]);
  }
  rings::Integers ring;
  SmithEngine<rings::Integers> compress(ring, std::move(a), {});
  compress.compress_rows();
  compress.drop_zero_rows();
  SmithEngine<rings::Integers> e(ring, compress.a(), {.v = true, .v_inv = true});
  e.diagonalize();
  const Index rho = e.rank();
  const Index r = n + t - rho;
  k.basis = IntMatrix(e.v().block(0, rho, n, r));
  k.vinv_tail = e.v_inv().bottomRows(r);
  k.orders.assign(static_cast<std::size_t>(r), Integer(0));
  k.g = gm;
  return k;
}

}  // namespace

struct Subquotient::Impl {
  AbGroup ambient;
  AbGroup group;
  IntMatrix generators;
  AbHom g;
  KernelLattice lattice;
  RowMatrix<Integer> coord_map;  // group x r
  // When the computation was split into independent coordinate blocks, the
  // homology of each block; coord_map then acts on their stacked coordinates.
  struct Part {
    std::vector<Index> coords;
    Subquotient homology;
  };
  std::vector<Part> parts;

  IntMatrix part_coordinates(const IntMatrix& x) const {
    Index total = 0;
    for (const Part& p : parts) total += p.homology.group().num_coords();
    IntMatrix w(total, x.cols());
    Index at = 0;
    for (const Part& p : parts) {
      IntMatrix sub(static_cast<Index>(p.coords.size()), x.cols());
      for (std::size_t i = 0; i < p.coords.size(); ++i) sub.row(static_cast<Index>(i)) = x.row(p.coords[i]);
      const Index q = p.homology.group().num_coords();
      w.middleRows(at, q) = p.homology.coordinates(sub);
      at += q;
    }
    return w;
  }

  IntMatrix coordinates(const IntMatrix& x) const {
    IntMatrix w = parts.empty() ? lattice.coords(x) : part_coordinates(x);
    IntMatrix z = IntMatrix(coord_map) * w;
    for (Index i = 0; i < z.rows(); ++i) {
      const Integer& d = group.factor(i);
      if (d.is_zero()) continue;
      for (Index j = 0; j < z.cols(); ++j) z(i, j) = mod(z(i, j), d);
    }
    return z;
  }
};

namespace {

// Quotient of the kernel lattice by the relation columns (in lattice
// coordinates), over ring R.  Fills group, coord_map and generators.
template <class Ring>
void quotient_stage(Ring ring, const RowMatrix<typename Ring::Scalar>& rel, Subquotient::Impl& out) {
  const Index r = rel.rows();
  SmithEngine<Ring> e(ring, rel, {.u = true, .u_inv = true});
  e.diagonalize();
  std::vector<Integer> factors;
  std::vector<Index> kept;
  for (Index j = 0; j < r; ++j) {
    // Beyond the rank a coordinate is free over Z, or of order m over Z/m.
    Integer d(0);
    if (j < e.rank()) {
      d = ring.lift(e.diagonal(j));
    } else if constexpr (std::is_same_v<Ring, rings::Residues>) {
      d = Integer(ring.m);
    }
    if (d == Integer(1)) continue;
    factors.push_back(d);
    kept.push_back(j);
  }
  const Index q = static_cast<Index>(kept.size());
  out.group = AbGroup(std::move(factors));
  out.coord_map.resize(q, r);
  IntMatrix uinv_cols(r, q);
  for (Index a = 0; a < q; ++a) {
    for (Index l = 0; l < r; ++l) {
      out.coord_map(a, l) = ring.lift(e.u()(kept[a], l));
      uinv_cols(l, a) = ring.lift(e.u_inv()(l, kept[a]));
    }
  }
  IntMatrix gens = out.lattice.basis * uinv_cols;
  for (Index a = 0; a < q; ++a) gens.col(a) = out.ambient.reduce(gens.col(a));
  out.generators = std::move(gens);
}

// Coordinates of B grouped by connected components of f and g: components
// made only of torsion coordinates go to block 0, the rest to block 1.
// Rows of g and columns of f follow their entries; empty ones are dropped.
struct TorsionSplit {
  std::array<std::vector<Index>, 2> b, c, a;
};

std::optional<TorsionSplit> split_by_torsion(const AbHom* f, const AbHom& g) {
  const AbGroup& b = g.source();
  const Index n = b.num_coords();
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index(0));
  const auto find = [&](Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  const auto unite = [&](Index x, Index y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
  const SparseIntMatrix& gm = g.matrix();
  for (Index r = 0; r < gm.outerSize(); ++r) {
    SparseIntMatrix::InnerIterator it(gm, r);
    if (!it) continue;
    const Index first = it.col();
    for (++it; it; ++it) unite(first, it.col());
  }
  std::vector<Index> f_anchor;
  if (f) {
    const SparseIntMatrix& fm = f->matrix();
    f_anchor.assign(static_cast<std::size_t>(fm.cols()), -1);
    for (Index r = 0; r < fm.outerSize(); ++r) {
      for (SparseIntMatrix::InnerIterator it(fm, r); it; ++it) {
        Index& anchor = f_anchor[static_cast<std::size_t>(it.col())];
        if (anchor < 0) {
          anchor = r;
        } else {
          unite(anchor, r);
        }
      }
    }
  }
  std::vector<char> has_free(static_cast<std::size_t>(n), 0);
  for (Index i = 0; i < n; ++i) {
    if (!b.is_torsion_coord(i)) has_free[static_cast<std::size_t>(find(i))] = 1;
  }
  const auto block = [&](Index i) { return has_free[static_cast<std::size_t>(find(i))] ? 1 : 0; };
  TorsionSplit s;
  for (Index i = 0; i < n; ++i) s.b[static_cast<std::size_t>(block(i))].push_back(i);
  if (s.b[0].empty() || s.b[1].empty()) return std::nullopt;
  for (Index r = 0; r < gm.outerSize(); ++r) {
    SparseIntMatrix::InnerIterator it(gm, r);
    if (it) s.c[static_cast<std::size_t>(block(it.col()))].push_back(r);
  }
  for (std::size_t col = 0; col < f_anchor.size(); ++col) {
    if (f_anchor[col] >= 0) s.a[static_cast<std::size_t>(block(f_anchor[col]))].push_back(static_cast<Index>(col));
  }
  return s;
}

AbGroup restrict_group(const AbGroup& a, const std::vector<Index>& coords) {
  std::vector<Integer> moduli;
  for (Index i : coords) moduli.push_back(a.factor(i));
  return AbGroup::diagonal(std::move(moduli));
}

// The block of h with the given rows and columns.
AbHom restrict_hom(const AbHom& h, const std::vector<Index>& rows, const std::vector<Index>& cols) {
  std::vector<Index> col_pos(static_cast<std::size_t>(h.source().num_coords()), -1);
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos[static_cast<std::size_t>(cols[j])] = static_cast<Index>(j);
  std::vector<IntTriplet> triplets;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (SparseIntMatrix::InnerIterator it(h.matrix(), rows[i]); it; ++it) {
      const Index j = col_pos[static_cast<std::size_t>(it.col())];
      if (j >= 0) triplets.emplace_back(static_cast<Index>(i), j, it.value());
    }
  }
  SparseIntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return AbHom(restrict_group(h.source(), cols), restrict_group(h.target(), rows), std::move(m));
}

}  // namespace

Subquotient::Subquotient(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const AbGroup& Subquotient::group() const { return impl_->group; }
const AbGroup& Subquotient::ambient() const { return impl_->ambient; }
const IntMatrix& Subquotient::generators() const { return impl_->generators; }

bool Subquotient::is_cycle(const IntVector& x) const {
  const IntVector y = impl_->g.apply(x);
  return std::all_of(y.begin(), y.end(), [](const Integer& v) { return v.is_zero(); });
}

IntVector Subquotient::coordinates(const IntVector& x) const {
  if (x.size() != ambient().num_coords()) throw InvalidArgument("Subquotient: wrong number of coordinates");
  if (!is_cycle(x)) throw InvalidArgument("Subquotient: element is not a cycle");
  IntMatrix m = x;
  return impl_->coordinates(m).col(0);
}

IntMatrix Subquotient::coordinates(const IntMatrix& cycles) const {
  if (cycles.rows() != ambient().num_coords()) throw InvalidArgument("Subquotient: wrong number of coordinates");
  for (Index j = 0; j < cycles.cols(); ++j) {
    if (!is_cycle(cycles.col(j))) throw InvalidArgument("Subquotient: element is not a cycle");
  }
  return impl_->coordinates(cycles);
}

Subquotient homology(const AbHom& f, const AbHom& g, Engine engine) {
  if (!(f.target() == g.source())) throw InvalidArgument("homology: target of f is not the source of g");
  if (!compose(g, f).is_zero()) throw CompositionNotZero("homology: g o f is not zero");
  auto impl = std::make_shared<Subquotient::Impl>(Subquotient::Impl{g.source(), AbGroup(), IntMatrix(), g, {}, {}, {}});
  const AbGroup& b = g.source();
  const Index n = b.num_coords();
  if (auto split = split_by_torsion(&f, g)) {
    // Independent blocks: solve each with its own engine, then put the
    // direct sum back into invariant-factor form.
    std::vector<Integer> moduli;
    std::vector<IntTriplet> embedded;
    Index at = 0;
    for (std::size_t k = 0; k < 2; ++k) {
      const std::vector<Index>& coords = split->b[k];
      Subquotient part = homology(restrict_hom(f, coords, split->a[k]), restrict_hom(g, split->c[k], coords), engine);
      const IntMatrix& gens = part.generators();
      for (Index j = 0; j < gens.cols(); ++j) {
        moduli.push_back(part.group().factor(j));
        for (Index i = 0; i < gens.rows(); ++i) {
          if (!gens(i, j).is_zero()) embedded.emplace_back(coords[static_cast<std::size_t>(i)], at + j, gens(i, j));
        }
      }
      at += gens.cols();
      impl->parts.push_back({coords, std::move(part)});
    }
    SparseIntMatrix basis(n, at);
    basis.setFromTriplets(embedded.begin(), embedded.end());
    impl->lattice.basis = to_dense(basis);
    RowMatrix<Integer> rel = RowMatrix<Integer>::Constant(at, at, Integer(0));
    for (Index j = 0; j < at; ++j) rel(j, j) = moduli[static_cast<std::size_t>(j)];
    quotient_stage(rings::Integers{}, rel, *impl);
    return Subquotient(impl);
  }
  const auto m = engine == Engine::automatic ? modular_modulus(b, g.target()) : std::nullopt;
  impl->lattice = m ? modular_kernel(g, *m) : exact_kernel(g);
  const KernelLattice& lat = impl->lattice;
  const Index r = static_cast<Index>(lat.orders.size());

  // Relations: images of f, torsion relations of B, orders of the lattice.
  std::vector<Index> tors;
  for (Index i = 0; i < n; ++i) {
    if (b.is_torsion_coord(i) && !(m && b.factor(i) == Integer(*m))) tors.push_back(i);
  }
  const Index fc = f.source().num_coords();
  Guards::check_entries(n, fc + static_cast<Index>(tors.size()), "relation matrix");
  IntMatrix rel_in(n, fc + static_cast<Index>(tors.size()));
  rel_in.leftCols(fc) = f.dense();
  rel_in.rightCols(static_cast<Index>(tors.size())).setConstant(Integer(0));
  for (std::size_t k = 0; k < tors.size(); ++k) rel_in(tors[k], fc + static_cast<Index>(k)) = b.factor(tors[k]);
  IntMatrix w = lat.coords(rel_in);

  if (m) {
    Integer mp(1);
    for (const auto& o : lat.orders) mp = lcm(mp, o);
    if (r == 0 || mp == Integer(1)) {
      impl->group = AbGroup();
      impl->generators = IntMatrix(n, 0);
      impl->coord_map.resize(0, r);
      return Subquotient(impl);
    }
    const std::int64_t mm = mp.to_int64();
    RowMatrix<std::int64_t> rel = RowMatrix<std::int64_t>::Zero(r, w.cols() + r);
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < w.cols(); ++j) rel(i, j) = residue(w(i, j), mm);
      rel(i, w.cols() + i) = residue(lat.orders[i], mm);
    }
    quotient_stage(rings::Residues(mm), rel, *impl);
  } else {
    if (r == 0) {
      impl->group = AbGroup();
      impl->generators = IntMatrix(n, 0);
      impl->coord_map.resize(0, 0);
      return Subquotient(impl);
    }
    quotient_stage(rings::Integers{}, RowMatrix<Integer>(w), *impl);
  }
  return Subquotient(impl);
}

AbGroup homology_at(const AbHom& f, const AbHom& g) { return homology(f, g).group(); }

KernelResult hom_kernel(const AbHom& f) {
  Subquotient s = homology(AbHom::zero(AbGroup(), f.source()), f);
  return {s.group(), AbHom(s.group(), f.source(), s.generators())};
}

ImageResult image(const AbHom& f) {
  KernelResult k = hom_kernel(f);
  Subquotient s = homology(k.inclusion, AbHom::zero(f.source(), AbGroup()));
  IntMatrix cols = f.dense() * s.generators();
  return {s.group(), AbHom(s.group(), f.target(), cols)};
}

CokernelResult cokernel(const AbHom& f) {
  Subquotient s = homology(f, AbHom::zero(f.target(), AbGroup()));
  const Index n = f.target().num_coords();
  IntMatrix id = IntMatrix::Constant(n, n, Integer(0));
  for (Index i = 0; i < n; ++i) id(i, i) = Integer(1);
  return {s.group(), AbHom(f.target(), s.group(), s.coordinates(id))};
}

// ------------------------------------------------------------------ solve

std::optional<IntVector> solve(const AbHom& g, const IntVector& target, Engine engine) {
  const AbGroup& b = g.source();
  const AbGroup& c = g.target();
  const Index n = b.num_coords();
  if (target.size() != c.num_coords()) throw InvalidArgument("solve: wrong number of coordinates");
  const IntVector rhs = c.reduce(target);
  const SparseIntMatrix& gm = g.matrix();
  auto row_used = [&](Index k) { return gm.outerIndexPtr()[k + 1] > gm.outerIndexPtr()[k] || !rhs(k).is_zero(); };
  std::vector<Index> rows;
  for (Index k = 0; k < c.num_coords(); ++k) {
    if (row_used(k)) rows.push_back(k);
  }
  if (rows.empty()) return IntVector::Constant(n, Integer(0));
  for (Index k : rows) {
    if (gm.outerIndexPtr()[k + 1] == gm.outerIndexPtr()[k]) return std::nullopt;  // 0 = nonzero
  }
  if (auto split = split_by_torsion(nullptr, g)) {
    IntVector x = IntVector::Constant(n, Integer(0));
    for (std::size_t k = 0; k < 2; ++k) {
      IntVector sub(static_cast<Index>(split->c[k].size()));
      for (std::size_t i = 0; i < split->c[k].size(); ++i) sub(static_cast<Index>(i)) = rhs(split->c[k][i]);
      const auto part = solve(restrict_hom(g, split->c[k], split->b[k]), sub, engine);
      if (!part) return std::nullopt;
      for (std::size_t i = 0; i < split->b[k].size(); ++i) x(split->b[k][i]) = (*part)(static_cast<Index>(i));
    }
    return x;
  }

  const auto m = engine == Engine::automatic ? modular_modulus(b, c) : std::nullopt;
  if (m) {
    // Free rows of C carry zero entries here; the right-hand side must vanish there.
    for (Index k : rows) {
      if (!c.is_torsion_coord(k)) return std::nullopt;
    }
    const std::int64_t mm = *m;
    Guards::check_entries(rows.size(), n + 1, "solve work matrix");
    RowMatrix<std::int64_t> a = RowMatrix<std::int64_t>::Zero(static_cast<Index>(rows.size()), n + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::int64_t s = mm / c.factor(rows[r]).to_int64();
      for (SparseIntMatrix::InnerIterator it(gm, rows[r]); it; ++it) {
        a(static_cast<Index>(r), it.col()) = static_cast<std::int64_t>((static_cast<__int128>(residue(it.value(), mm)) * s) % mm);
      }
      a(static_cast<Index>(r), n) = static_cast<std::int64_t>((static_cast<__int128>(residue(rhs(rows[r]), mm)) * s) % mm);
    }
    rings::Residues ring(mm);
    SmithEngine<rings::Residues> compress(ring, std::move(a), {});
    compress.compress_rows();
    compress.drop_zero_rows();
    const RowMatrix<std::int64_t>& ab = compress.a();
    SmithEngine<rings::Residues> e(ring, ab.leftCols(n), {.u = true, .v = true});
    e.diagonalize();
    const RowMatrix<std::int64_t> rc = ab.rightCols(1);
    IntVector x = IntVector::Constant(n, Integer(0));
    std::vector<std::int64_t> y(static_cast<std::size_t>(n), 0);
    for (Index i = 0; i < ab.rows(); ++i) {
      __int128 acc = 0;
      for (Index l = 0; l < ab.rows(); ++l) acc += static_cast<__int128>(e.u()(i, l)) * rc(l, 0);
      const std::int64_t ui = static_cast<std::int64_t>(acc % mm);
      if (i < e.rank()) {
        auto q = ring.quotient(ui, e.diagonal(i));
        if (!q) return std::nullopt;
        y[static_cast<std::size_t>(i)] = *q;
      } else if (ui != 0) {
        return std::nullopt;
      }
    }
    for (Index l = 0; l < n; ++l) {
      __int128 acc = 0;
      for (Index i = 0; i < n; ++i) acc += static_cast<__int128>(e.v()(l, i)) * y[static_cast<std::size_t>(i)];
      x(l) = Integer(static_cast<std::int64_t>(acc % mm));
    }
    return b.reduce(x);
  }

  std::vector<Index> tors;
  for (Index k : rows) {
    if (c.is_torsion_coord(k)) tors.push_back(k);
  }
  const Index t = static_cast<Index>(tors.size());
  Guards::check_entries(rows.size(), n + t + 1, "solve work matrix");
  RowMatrix<Integer> a = RowMatrix<Integer>::Constant(static_cast<Index>(rows.size()), n + t + 1, Integer(0));
  Index tc = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (SparseIntMatrix::InnerIterator it(gm, rows[r]); it; ++it) a(static_cast<Index>(r), it.col()) = it.value();
    if (c.is_torsion_coord(rows[r])) a(static_cast<Index>(r), n + tc++) = -c.factor(rows[r]);
    a(static_cast<Index>(r), n + t) = rhs(rows[r]);
  }
  rings::Integers ring;
  SmithEngine<rings::Integers> compress(ring, std::move(a), {});
  compress.compress_rows();
  compress.drop_zero_rows();
  const RowMatrix<Integer>& ab = compress.a();
  const Index cols = n + t;
  SmithEngine<rings::Integers> e(ring, ab.leftCols(cols), {.u = true, .v = true});
  e.diagonalize();
  const IntVector uc = IntMatrix(e.u()) * IntVector(ab.col(cols));
  IntVector y = IntVector::Constant(cols, Integer(0));
  for (Index i = 0; i < uc.size(); ++i) {
    if (i < e.rank()) {
      if (!divides(e.diagonal(i), uc(i))) return std::nullopt;
      y(i) = uc(i) / e.diagonal(i);
    } else if (!uc(i).is_zero()) {
      return std::nullopt;
    }
  }
  const IntVector z = IntMatrix(e.v()) * y;
  return b.reduce(z.head(n));
}

}  // namespace symcoh
