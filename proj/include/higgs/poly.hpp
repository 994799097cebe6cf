#ifndef HIGGS_POLY_HPP
#define HIGGS_POLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "higgs/rational.hpp"

namespace higgs {

// Desk-scale caps. Chart dimension bounds the number of variables; the
// degree cap applies to user-facing inputs (forms, Higgs fields), not to
// intermediate products.
inline constexpr std::size_t kMaxVars = 4;
inline constexpr int kMaxInputDegree = 12;
inline constexpr std::size_t kMaxMatrixSize = 5;

// Exponent vector with graded-lex ordering: total degree first, then
// lexicographic with x1 the most significant variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& rhs) const;
  // pre: divides(rhs) is false only if the caller ignored the precondition
  Monomial operator/(const Monomial& rhs) const;

  bool operator==(const Monomial&) const = default;
  std::strong_ordering operator<=>(const Monomial& rhs) const;

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
};

class Poly {
 public:
  // Leading (largest) monomial first.
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  explicit Poly(std::size_t nvars = 0);

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index, unsigned power = 1);
  static Poly term(std::size_t nvars, const Monomial& m, const Rational& c);
  // Merges repeated monomials and drops zero coefficients.
  static Poly from_terms(std::size_t nvars,
                         const std::vector<std::pair<Monomial, Rational>>& terms);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  // pre: !is_zero()
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  bool operator==(const Poly& rhs) const;

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Canonical text form, e.g. "3/2*x1^2*x2 - x2 + 1".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

// Total order used for canonical listings (factors, witnesses).
bool canonical_less(const Poly& a, const Poly& b);

// Throws CapExceeded when the degree exceeds kMaxInputDegree.
void check_input_caps(const Poly& p, std::string_view what);

// --- division -----------------------------------------------------------

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

// Multivariate division by a single divisor in graded-lex order.
DivisionResult divide(const Poly& a, const Poly& b);
std::optional<Poly> try_exact_div(const Poly& a, const Poly& b);
// Throws DivisionFailure carrying the remainder when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

// --- content and gcd ------------------------------------------------------

// Positive rational c such that p / c has coprime integer coefficients.
Rational content(const Poly& p);
// p / content(p), sign-adjusted so the leading coefficient is positive.
Poly primitive_part(const Poly& p);

// Coefficients of var^k, k = 0..deg, as polynomials free of var.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t var);

// gcd with positive leading coefficient whose rational content is the gcd
// of the inputs' contents; gcd(0, b) is b normalized, gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly gcd(std::span<const Poly> polys);

// --- squarefree decomposition ---------------------------------------------

struct SquarefreeFactor {
  Poly factor;
  unsigned multiplicity = 0;
  bool operator==(const SquarefreeFactor&) const = default;
};

// content * prod factor_i^multiplicity_i reproduces the input. Factors are
// squarefree, primitive, pairwise coprime and listed in canonical order.
// Multiplicity classes may be split into several coprime factors.
struct SquarefreeDecomposition {
  Rational content;
  std::vector<SquarefreeFactor> factors;

  Poly expand(std::size_t nvars) const;
  bool operator==(const SquarefreeDecomposition&) const = default;
};

SquarefreeDecomposition squarefree_decompose(const Poly& f);
bool is_squarefree(const Poly& f);

}  // namespace higgs

#endif
