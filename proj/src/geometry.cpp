#include "higgs/geometry.hpp"

#include <sstream>

#include "higgs/error.hpp"

namespace higgs {

namespace {

void require_same_rank(const NSClass& a, const NSClass& b) {
  if (a.rank() != b.rank())
    fail(ErrorKind::DimensionMismatch, "classes of rank " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
}

bool is_square(const IntMatrix& m, std::size_t n) {
  if (m.size() != n) return false;
  for (const auto& row : m)
    if (row.size() != n) return false;
  return true;
}

bool has_shape(const IntMatrix& m, std::size_t rows, std::size_t cols) {
  if (m.size() != rows) return false;
  for (const auto& row : m)
    if (row.size() != cols) return false;
  return true;
}

Rational bilinear(const IntMatrix& q, const NSClass& a, const NSClass& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.rank(); ++j) sum += a[i] * Rational(q[i][j]) * b[j];
  }
  return sum;
}

NSClass apply(const IntMatrix& m, const NSClass& x) {
  std::vector<Rational> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.rank(); ++j) out[i] += Rational(m[i][j]) * x[j];
  return NSClass(std::move(out));
}

}  // namespace

NSClass NSClass::basis(std::size_t rank, std::size_t i) {
  NSClass c = zero(rank);
  c.coords_.at(i) = 1;
  return c;
}

bool NSClass::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool NSClass::is_integral() const {
  for (const auto& c : coords_)
    if (!higgs::is_integer(c)) return false;
  return true;
}

NSClass operator+(const NSClass& a, const NSClass& b) {
  require_same_rank(a, b);
  NSClass r = a;
  for (std::size_t i = 0; i < a.rank(); ++i) r.coords_[i] += b[i];
  return r;
}

NSClass operator-(const NSClass& a, const NSClass& b) {
  require_same_rank(a, b);
  NSClass r = a;
  for (std::size_t i = 0; i < a.rank(); ++i) r.coords_[i] -= b[i];
  return r;
}

NSClass operator*(const Rational& c, const NSClass& a) {
  NSClass r = a;
  for (auto& x : r.coords_) x *= c;
  return r;
}

std::string NSClass::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << higgs::to_string(coords_[i]);
  os << ")";
  return os.str();
}

SurfaceModel::SurfaceModel(std::vector<std::string> generators, IntMatrix intersection, NSClass canonical,
                           NSClass polarization, unsigned b1, Integer torsion2_count)
    : generators_(std::move(generators)),
      q_(std::move(intersection)),
      k_(std::move(canonical)),
      omega_(std::move(polarization)),
      b1_(b1),
      torsion2_(std::move(torsion2_count)) {
  const std::size_t n = generators_.size();
  if (n == 0) fail(ErrorKind::InvalidModel, "no generators");
  if (!is_square(q_, n)) fail(ErrorKind::InvalidModel, "intersection matrix is not " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (q_[i][j] != q_[j][i])
        fail(ErrorKind::InvalidModel, "intersection matrix not symmetric at (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ")");
  if (k_.rank() != n || omega_.rank() != n) fail(ErrorKind::InvalidModel, "K or omega has the wrong number of coordinates");
  if (intersect(omega_, omega_) <= 0)
    fail(ErrorKind::InvalidModel, "polarization has omega^2 = " + higgs::to_string(intersect(omega_, omega_)) + " <= 0");
  if (torsion2_ < 1) fail(ErrorKind::InvalidModel, "2-torsion count must be at least 1");
}

void SurfaceModel::require_class(const NSClass& a, const std::string& what) const {
  if (a.rank() != rank())
    fail(ErrorKind::DimensionMismatch, what + " has " + std::to_string(a.rank()) + " coordinates, lattice rank is " +
                                           std::to_string(rank()));
}

Rational SurfaceModel::intersect(const NSClass& a, const NSClass& b) const {
  require_class(a, "class");
  require_class(b, "class");
  return bilinear(q_, a, b);
}

Rational degree(const NSClass& l, const NSClass& against, const SurfaceModel& model) {
  return model.intersect(l, against);
}

SurfaceModel ProductOfCurves::model() const {
  IntMatrix q{{0, 1}, {1, 0}};
  NSClass k(std::vector<Rational>{Rational(2 * static_cast<long>(g1) - 2), Rational(2 * static_cast<long>(g2) - 2)});
  NSClass omega(std::vector<Rational>{1, 1});
  const unsigned b1 = 2 * g1 + 2 * g2;
  Integer torsion;
  mpz_ui_pow_ui(torsion.get_mpz_t(), 2, b1);
  return SurfaceModel({"F1", "F2"}, std::move(q), std::move(k), std::move(omega), b1, std::move(torsion));
}

NSClass ProductOfCurves::line_class(unsigned i) const {
  if (i != 1 && i != 2) fail(ErrorKind::DimensionMismatch, "product of curves has factors 1 and 2");
  const long g = i == 1 ? g1 : g2;
  return Rational(2 * g - 2) * NSClass::basis(2, i - 1);
}

long h0_curve(unsigned g, CanonicalPower bundle) {
  const long gl = g;
  const long m = bundle.m;
  if (m == 0) return 1;
  if (g == 0) return 0;
  if (g == 1) return 1;
  if (m == 1) return gl;
  return (2 * m - 1) * (gl - 1);
}

long h0_curve(unsigned g, GenericDegree bundle, std::optional<long> declared) {
  if (declared) {
    if (*declared < 0) fail(ErrorKind::PreconditionViolated, "declared h0 is negative");
    return *declared;
  }
  const long gl = g;
  if (bundle.d < 0) return 0;
  if (bundle.d > 2 * gl - 2) return bundle.d - gl + 1;
  fail(ErrorKind::SpecialDivisorUndecidable, "degree " + std::to_string(bundle.d) + " on genus " + std::to_string(g) +
                                                 " lies in [0, 2g-2]; declare h0");
}

std::string_view to_string(BxKind k) {
  switch (k) {
    case BxKind::VType: return "V";
    case BxKind::LType: return "L";
    case BxKind::Both: return "V+L";
  }
  return "?";
}

BxDecomposition bx_decomposition(ProductOfCurves x) {
  BxDecomposition out;
  if (x.g1 < x.g2) {
    std::swap(x.g1, x.g2);
    out.swapped = true;
  }
  out.g1 = x.g1;
  out.g2 = x.g2;
  const long h0_omega_x = h0_curve(x.g1, CanonicalPower{1}) + h0_curve(x.g2, CanonicalPower{1});

  auto trivial = [&](BxKind kind) {
    return BxComponent{"O", NSClass::zero(2), kind, h0_omega_x, h0_omega_x, 1};
  };
  auto l_type = [&](unsigned i) {
    const long dim = h0_curve(i == 1 ? x.g1 : x.g2, CanonicalPower{2});
    return BxComponent{i == 1 ? "L1" : "L2", x.line_class(i), BxKind::LType, dim, 1, dim};
  };

  if (x.g1 == 0) return out;
  if (x.g2 == 0) {
    // C x P^1: every symmetric differential is pulled back from C. For g1 = 1
    // the single line bundle is trivial.
    out.components.push_back(x.g1 == 1 ? trivial(BxKind::Both) : l_type(1));
    return out;
  }
  out.components.push_back(trivial(BxKind::VType));
  if (x.g1 >= 2) {
    out.components.push_back(l_type(1));
    out.intersections.push_back({0, 1, h0_curve(x.g1, CanonicalPower{1})});
  }
  if (x.g2 >= 2) {
    out.components.push_back(l_type(2));
    out.intersections.push_back({0, 2, h0_curve(x.g2, CanonicalPower{1})});
    out.intersections.push_back({1, 2, 0});
  }
  return out;
}

CoverMap::CoverMap(const SurfaceModel& base, IntMatrix pushforward, IntMatrix pullback, IntMatrix cover_intersection,
                   NSClass l_class)
    : p_(std::move(pushforward)),
      r_(std::move(pullback)),
      cover_q_(std::move(cover_intersection)),
      l_(std::move(l_class)),
      base_rank_(base.rank()) {
  const std::size_t n = base_rank_;
  const std::size_t m = cover_q_.size();
  if (m == 0 || !is_square(cover_q_, m)) fail(ErrorKind::InvalidModel, "cover intersection matrix is not square");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (cover_q_[i][j] != cover_q_[j][i]) fail(ErrorKind::InvalidModel, "cover intersection matrix not symmetric");
  if (!has_shape(p_, n, m)) fail(ErrorKind::DimensionMismatch, "pushforward must be " + std::to_string(n) + "x" + std::to_string(m));
  if (!has_shape(r_, m, n)) fail(ErrorKind::DimensionMismatch, "pullback must be " + std::to_string(m) + "x" + std::to_string(n));
  base.require_class(l_, "L");
  // (P x) . y = x . (R y) for all x, y: P^T Q = Q' R.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer lhs = 0, rhs = 0;
      for (std::size_t k = 0; k < n; ++k) lhs += p_[k][i] * base.intersection()[k][j];
      for (std::size_t k = 0; k < m; ++k) rhs += cover_q_[i][k] * r_[k][j];
      if (lhs != rhs)
        fail(ErrorKind::InvalidModel, "projection formula fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          "): " + lhs.get_str() + " != " + rhs.get_str());
    }
}

NSClass CoverMap::push(const NSClass& m) const {
  if (m.rank() != cover_rank()) fail(ErrorKind::DimensionMismatch, "class is not on the cover lattice");
  return apply(p_, m);
}

NSClass CoverMap::pull(const NSClass& x) const {
  if (x.rank() != base_rank_) fail(ErrorKind::DimensionMismatch, "class is not on the base lattice");
  return apply(r_, x);
}

Rational CoverMap::cover_intersect(const NSClass& a, const NSClass& b) const {
  if (a.rank() != cover_rank() || b.rank() != cover_rank()) fail(ErrorKind::DimensionMismatch, "class is not on the cover lattice");
  return bilinear(cover_q_, a, b);
}

NSClass pushforward_c1(const NSClass& m, const CoverMap& map) { return map.push(m) - map.l_class(); }

Rational pushforward_c2(const NSClass& m, const CoverMap& map, const SurfaceModel& base) {
  NSClass pm = map.push(m);
  return Rational(1, 2) * (base.intersect(pm, pm) - map.cover_intersect(m, m) - base.intersect(pm, map.l_class()));
}

Rational discriminant(const NSClass& c1, const Rational& c2, const SurfaceModel& model) {
  return 4 * c2 - model.intersect(c1, c1);
}

}  // namespace higgs
