#ifndef HIGGS_GEOMETRY_HPP
#define HIGGS_GEOMETRY_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "higgs/rational.hpp"

namespace higgs {

using IntMatrix = std::vector<std::vector<Integer>>;

// Coordinates of a divisor class over the generators of a lattice. Entries
// are rational only to carry half-classes.
class NSClass {
 public:
  NSClass() = default;
  explicit NSClass(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static NSClass zero(std::size_t rank) { return NSClass(std::vector<Rational>(rank)); }
  static NSClass basis(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_integral() const;

  friend NSClass operator+(const NSClass& a, const NSClass& b);
  friend NSClass operator-(const NSClass& a, const NSClass& b);
  friend NSClass operator*(const Rational& c, const NSClass& a);
  NSClass operator-() const { return Rational(-1) * *this; }

  bool operator==(const NSClass&) const = default;
  auto operator<=>(const NSClass& rhs) const {
    return coords_ < rhs.coords_ ? std::strong_ordering::less
           : coords_ == rhs.coords_ ? std::strong_ordering::equal
                                    : std::strong_ordering::greater;
  }

  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

// A surface through its Neron-Severi data: an integral symmetric form on
// declared generators, the canonical class, a polarization, b1 and the
// number of 2-torsion points of Pic.
class SurfaceModel {
 public:
  // Throws InvalidModel on asymmetric or mis-sized data or omega^2 <= 0.
  SurfaceModel(std::vector<std::string> generators, IntMatrix intersection, NSClass canonical, NSClass polarization,
               unsigned b1, Integer torsion2_count);

  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const IntMatrix& intersection() const { return q_; }
  const NSClass& canonical() const { return k_; }
  const NSClass& polarization() const { return omega_; }
  unsigned b1() const { return b1_; }
  const Integer& torsion2_count() const { return torsion2_; }

  // a^T Q b; throws DimensionMismatch.
  Rational intersect(const NSClass& a, const NSClass& b) const;
  void require_class(const NSClass& a, const std::string& what) const;

  bool operator==(const SurfaceModel&) const = default;

 private:
  std::vector<std::string> generators_;
  IntMatrix q_;
  NSClass k_;
  NSClass omega_;
  unsigned b1_ = 0;
  Integer torsion2_;
};

Rational degree(const NSClass& l, const NSClass& against, const SurfaceModel& model);

// C1 x C2 with fibre classes F1 (fibre of the first projection), F2.
struct ProductOfCurves {
  unsigned g1 = 0;
  unsigned g2 = 0;

  SurfaceModel model() const;
  // Class of L_i = p_i^* K_{C_i}, i.e. (2 g_i - 2) F_i.
  NSClass line_class(unsigned i) const;
};

// --- curves ----------------------------------------------------------------

struct CanonicalPower {
  unsigned m = 0;
};
struct GenericDegree {
  long d = 0;
};

// h^0 of omega^m, or of a degree-d line bundle when Riemann-Roch decides it.
// A declared value is returned unchanged. Throws SpecialDivisorUndecidable
// for 0 <= d <= 2g - 2 without a declaration.
long h0_curve(unsigned g, CanonicalPower bundle);
long h0_curve(unsigned g, GenericDegree bundle, std::optional<long> declared = std::nullopt);

// --- components of the rank-one locus on products of curves -----------------

enum class BxKind { VType, LType, Both };
std::string_view to_string(BxKind k);

struct BxComponent {
  std::string name;  // "O", "L1" or "L2"
  NSClass line_class;
  BxKind kind = BxKind::VType;
  long dim = 0;
  long h0_omega_twist = 0;  // h^0(Omega^1 (x) L^-1)
  long h0_Lsq = 0;          // h^0(L^2)
};

struct BxIntersection {
  std::size_t first, second;  // indices into components
  long dim = 0;
};

struct BxDecomposition {
  unsigned g1 = 0, g2 = 0;  // ordered so that g1 >= g2
  bool swapped = false;
  std::vector<BxComponent> components;
  std::vector<BxIntersection> intersections;
};

BxDecomposition bx_decomposition(ProductOfCurves x);

// --- double covers -------------------------------------------------------------

// A double cover pi: X' -> X with branch datum L (branch divisor in |2L|).
// P pushes classes forward (base rank x cover rank), R pulls them back
// (cover rank x base rank); the projection formula P^T Q = Q' R is checked.
class CoverMap {
 public:
  CoverMap(const SurfaceModel& base, IntMatrix pushforward, IntMatrix pullback, IntMatrix cover_intersection,
           NSClass l_class);

  const IntMatrix& pushforward() const { return p_; }
  const IntMatrix& pullback() const { return r_; }
  const IntMatrix& cover_intersection() const { return cover_q_; }
  const NSClass& l_class() const { return l_; }
  std::size_t cover_rank() const { return cover_q_.size(); }

  NSClass push(const NSClass& m) const;
  NSClass pull(const NSClass& x) const;
  Rational cover_intersect(const NSClass& a, const NSClass& b) const;

 private:
  IntMatrix p_;
  IntMatrix r_;
  IntMatrix cover_q_;
  NSClass l_;
  std::size_t base_rank_ = 0;
};

NSClass pushforward_c1(const NSClass& m, const CoverMap& map);
Rational pushforward_c2(const NSClass& m, const CoverMap& map, const SurfaceModel& base);
Rational discriminant(const NSClass& c1, const Rational& c2, const SurfaceModel& model);

}  // namespace higgs

#endif
