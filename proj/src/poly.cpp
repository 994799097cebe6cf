#include "higgs/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "higgs/error.hpp"

namespace higgs {

// --- Monomial -----------------------------------------------------------

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars)
    fail(ErrorKind::CapExceeded, "monomial with " + std::to_string(exponents.size()) + " variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max())
    fail(ErrorKind::CapExceeded, "exponent " + std::to_string(e) + " overflows");
  exps_[i] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.set(i, unsigned(exps_[i]) + rhs.exps_[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = static_cast<std::uint16_t>(exps_[i] - rhs.exps_[i]);
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& rhs) const {
  if (auto c = degree() <=> rhs.degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (auto c = exps_[i] <=> rhs.exps_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// --- Poly ---------------------------------------------------------------

Poly::Poly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars)
    fail(ErrorKind::CapExceeded, "chart dimension " + std::to_string(nvars) + " exceeds " + std::to_string(kMaxVars));
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index, unsigned power) {
  if (index >= nvars)
    fail(ErrorKind::DimensionMismatch, "variable x" + std::to_string(index + 1) + " in a chart of dimension " + std::to_string(nvars));
  Poly p(nvars);
  Monomial m;
  m.set(index, power);
  p.add_term(m, 1);
  return p;
}

Poly Poly::term(std::size_t nvars, const Monomial& m, const Rational& c) {
  for (std::size_t i = nvars; i < kMaxVars; ++i)
    if (m[i] != 0) fail(ErrorKind::DimensionMismatch, "monomial uses a variable beyond the chart");
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

Poly Poly::from_terms(std::size_t nvars, const std::vector<std::pair<Monomial, Rational>>& terms) {
  Poly p(nvars);
  for (const auto& [m, c] : terms) p += term(nvars, m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.degree() == 0 && terms_.begin()->second == 1;
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "leading monomial of 0");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of 0");
  return terms_.begin()->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

static void require_same_ring(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars())
    fail(ErrorKind::DimensionMismatch,
         "polynomials in " + std::to_string(a.nvars()) + " and " + std::to_string(b.nvars()) + " variables");
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  Poly r(a.nvars());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

bool Poly::operator==(const Poly& rhs) const { return nvars_ == rhs.nvars_ && terms_ == rhs.terms_; }

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d.set(var, m[var] - 1);
    r.add_term(d, c * m[var]);
  }
  return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_)
    fail(ErrorKind::DimensionMismatch, "point of length " + std::to_string(point.size()) + " for " + std::to_string(nvars_) + " variables");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.degree() == 0) {
      os << higgs::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

void check_input_caps(const Poly& p, std::string_view what) {
  if (p.total_degree() > kMaxInputDegree)
    fail(ErrorKind::CapExceeded, std::string(what) + " has total degree " + std::to_string(p.total_degree()) +
                                     " > " + std::to_string(kMaxInputDegree));
}

// --- division -------------------------------------------------------------

DivisionResult divide(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  const Monomial& lm = b.leading_monomial();
  const Rational& lc = b.leading_coefficient();
  Poly q(a.nvars()), r(a.nvars()), rest = a;
  while (!rest.is_zero()) {
    Monomial m = rest.leading_monomial();
    Rational c = rest.leading_coefficient();
    if (lm.divides(m)) {
      Poly t = Poly::term(a.nvars(), m / lm, c / lc);
      q += t;
      rest -= t * b;
    } else {
      Poly t = Poly::term(a.nvars(), m, c);
      r += t;
      rest -= t;
    }
  }
  return {std::move(q), std::move(r)};
}

std::optional<Poly> try_exact_div(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) return std::nullopt;
  const Monomial& lm = b.leading_monomial();
  const Rational& lc = b.leading_coefficient();
  Poly q(a.nvars()), rest = a;
  while (!rest.is_zero()) {
    const Monomial& m = rest.leading_monomial();
    if (!lm.divides(m)) return std::nullopt;
    Poly t = Poly::term(a.nvars(), m / lm, rest.leading_coefficient() / lc);
    q += t;
    rest -= t * b;
  }
  return q;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionFailure, "divisor is 0");
  if (auto q = try_exact_div(a, b)) return *std::move(q);
  auto [q, r] = divide(a, b);
  fail(ErrorKind::DivisionFailure, "(" + b.to_string() + ") does not divide (" + a.to_string() + "); remainder " + r.to_string());
}

// --- content and gcd --------------------------------------------------------

Rational content(const Poly& p) {
  Rational g = 0;
  for (const auto& [m, c] : p.terms()) g = rational_gcd(g, c);
  return g;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (sgn(p.leading_coefficient()) < 0) c = -c;
  Poly r = p;
  r *= Rational(1) / c;
  return r;
}

std::vector<Poly> coefficients_in(const Poly& p, std::size_t var) {
  std::vector<Poly> coeffs(p.degree_in(var) + 1, Poly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial stripped = m;
    stripped.set(var, 0);
    coeffs[m[var]] += Poly::term(p.nvars(), stripped, c);
  }
  return coeffs;
}

namespace {

std::optional<std::size_t> first_variable(const Poly& p) {
  for (std::size_t v = 0; v < p.nvars(); ++v)
    if (p.involves(v)) return v;
  return std::nullopt;
}

Poly gcd_primitive(const Poly& a, const Poly& b);

// gcd of the coefficients of p viewed as a polynomial in var.
Poly content_in(const Poly& p, std::size_t var) {
  Poly g(p.nvars());
  for (const Poly& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive_part(c) : gcd_primitive(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in var; the result is lc(b)^k a - q b.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Poly lcb = coefficients_in(b, var).back();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const unsigned da = a.degree_in(var);
    Poly lca = coefficients_in(a, var).back();
    a = lcb * a - lca * Poly::variable(a.nvars(), var, da - db) * b;
  }
  return a;
}

// gcd up to a rational unit, returned primitive with positive leading
// coefficient. Recursive primitive PRS over Q[rest][var].
Poly gcd_primitive(const Poly& a, const Poly& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(n, 1);

  std::size_t var = 0;
  {
    auto va = first_variable(a);
    auto vb = first_variable(b);
    var = std::min(*va, *vb);
  }
  if (!a.involves(var)) return gcd_primitive(a, content_in(b, var));
  if (!b.involves(var)) return gcd_primitive(content_in(a, var), b);

  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly g = gcd_primitive(ca, cb);
  Poly pa = primitive_part(exact_div(a, ca));
  Poly pb = primitive_part(exact_div(b, cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (true) {
    Poly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (!r.involves(var)) {
      pb = Poly::constant(n, 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(exact_div(r, content_in(r, var)));
  }
  return primitive_part(g * pb);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (a.is_zero() && b.is_zero()) return Poly(a.nvars());
  Rational c = rational_gcd(content(a), content(b));
  Poly g = gcd_primitive(a, b);
  g *= c;
  return g;
}

Poly gcd(std::span<const Poly> polys) {
  if (polys.empty()) fail(ErrorKind::ZeroInput, "gcd of an empty list");
  Poly g(polys.front().nvars());
  for (const Poly& p : polys) g = gcd(g, p);
  return g;
}

// --- squarefree decomposition ---------------------------------------------

Poly SquarefreeDecomposition::expand(std::size_t nvars) const {
  Poly r = Poly::constant(nvars, content);
  for (const auto& f : factors) r *= f.factor.pow(f.multiplicity);
  return r;
}

namespace {

// Yun's algorithm in var for g primitive in var of positive degree.
void yun_in(const Poly& g, std::size_t var, std::vector<SquarefreeFactor>& out) {
  Poly gp = g.derivative(var);
  Poly a0 = gcd_primitive(g, gp);
  Poly b = exact_div(g, a0);
  Poly c = exact_div(gp, a0);
  Poly d = c - b.derivative(var);
  unsigned i = 1;
  while (b.involves(var)) {
    Poly a = gcd_primitive(b, d);
    if (!a.is_constant()) out.push_back({primitive_part(a), i});
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative(var);
    ++i;
  }
}

void squarefree_rec(const Poly& f, std::vector<SquarefreeFactor>& out) {
  auto var = first_variable(f);
  if (!var) return;
  Poly cont = content_in(f, *var);
  Poly g = exact_div(f, cont);
  yun_in(g, *var, out);
  squarefree_rec(cont, out);
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree decomposition of 0");
  SquarefreeDecomposition result;
  squarefree_rec(primitive_part(f), result.factors);
  std::sort(result.factors.begin(), result.factors.end(),
            [](const SquarefreeFactor& x, const SquarefreeFactor& y) {
              if (x.factor == y.factor) return x.multiplicity < y.multiplicity;
              return canonical_less(x.factor, y.factor);
            });
  result.content = 1;
  Poly prod = result.expand(f.nvars());
  result.content = f.leading_coefficient() / prod.leading_coefficient();
  if (result.expand(f.nvars()) != f)
    fail(ErrorKind::FactorizationInconsistent, "squarefree reconstruction failed for " + f.to_string());
  return result;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  auto d = squarefree_decompose(f);
  return std::all_of(d.factors.begin(), d.factors.end(),
                     [](const SquarefreeFactor& s) { return s.multiplicity == 1; });
}

}  // namespace higgs
