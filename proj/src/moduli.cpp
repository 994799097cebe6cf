#include "higgs/moduli.hpp"

#include <algorithm>

#include "higgs/error.hpp"

namespace higgs {

namespace {

// Polynomials in lambda with chart-polynomial coefficients.
struct LambdaPoly {
  std::size_t nvars = 0;
  std::vector<Poly> coeffs;  // coeffs[k] multiplies lambda^k

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
  Poly at(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Poly(nvars); }

  friend LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r{a.nvars, {}};
    for (std::size_t k = 0; k < std::max(a.coeffs.size(), b.coeffs.size()); ++k) r.coeffs.push_back(a.at(k) + b.at(k));
    r.trim();
    return r;
  }
  friend LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r{a.nvars, {}};
    for (std::size_t k = 0; k < std::max(a.coeffs.size(), b.coeffs.size()); ++k) r.coeffs.push_back(a.at(k) - b.at(k));
    r.trim();
    return r;
  }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r{a.nvars, {}};
    if (a.coeffs.empty() || b.coeffs.empty()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Poly(a.nvars));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
  }
};

std::string degree_text(const Rational& d1, const Rational& d2) {
  return "deg L1 = " + to_string(d1) + ", deg L2 = " + to_string(d2);
}

}  // namespace

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Polystable: return "polystable";
    case Stability::NotStable: return "not stable";
  }
  return "?";
}

std::string_view to_string(Rigidity r) {
  switch (r) {
    case Rigidity::Rigid: return "rigid";
    case Rigidity::NotRigid: return "not rigid";
    case Rigidity::Undecided: return "undecided";
  }
  return "?";
}

Stability hodge_stability(const Rational& d1, const Rational& d2, bool alpha_nonzero) {
  if (!alpha_nonzero) fail(ErrorKind::ZeroHiggsUnsupported, "the Higgs field of a Hodge bundle must be nonzero");
  return d1 > d2 ? Stability::Stable : Stability::NotStable;
}

Stability real_stability(const SplitHiggsDescription& desc, const SurfaceModel& model,
                         const std::optional<NSClass>& polarization) {
  model.require_class(desc.l1, "L1");
  model.require_class(desc.l2, "L2");
  const NSClass& omega = polarization ? *polarization : model.polarization();
  model.require_class(omega, "polarization");
  const Rational d1 = degree(desc.l1, omega, model);
  const Rational d2 = degree(desc.l2, omega, model);
  if (desc.l1_iso_l2 && d1 != d2)
    fail(ErrorKind::UnsupportedShape, "L1 and L2 declared isomorphic but " + degree_text(d1, d2));
  if ((!desc.alpha_nonzero || !desc.beta_nonzero) && !desc.alpha_beta_proportional)
    fail(ErrorKind::UnsupportedShape, "a zero off-diagonal entry is proportional to the other one");
  if (d1 < d2) fail(ErrorKind::DegreeOrderViolation, degree_text(d1, d2) + "; order the summands by degree");

  if (d1 > d2) return desc.alpha_nonzero ? Stability::Stable : Stability::NotStable;
  if (!desc.l1_iso_l2) return desc.alpha_nonzero && desc.beta_nonzero ? Stability::Stable : Stability::NotStable;
  if (!desc.alpha_beta_proportional) return Stability::Stable;
  // Proportional: both nonzero gives (L, w) + (L, -w); both zero gives
  // (L, w) + (L, w). A single nonzero entry leaves one summand invariant
  // without an invariant complement.
  if (desc.alpha_nonzero == desc.beta_nonzero) return Stability::Polystable;
  return Stability::NotStable;
}

HitchinSectionOutput hitchin_section(const SpectralDatum& d) {
  for (const auto& p : d.s1.entries()) check_input_caps(p, "s1");
  for (std::size_t i = 0; i < d.s2.dim(); ++i)
    for (std::size_t j = 0; j < d.s2.dim(); ++j) check_input_caps(d.s2(i, j), "s2");

  const std::size_t n = d.s1.dim();
  HitchinSectionOutput out;
  std::vector<PolyMatrix> b;
  BaseVerdict verdict = spectral_base_check(d);
  if (auto* nm = std::get_if<NotMember>(&verdict))
    fail(ErrorKind::NotInSpectralBase, "4 s2 - s1^2 has nonzero minor " + nm->witness.value.to_string());
  if (std::holds_alternative<Nilpotent>(verdict)) {
    if (d.s1.is_zero()) fail(ErrorKind::NilpotentDatum, "s1 = 0 and s2 = 0");
    out.shape = SectionShape::Diagonal;
    out.stability = Stability::Polystable;
    for (std::size_t i = 0; i < n; ++i) b.push_back(PolyMatrix::scalar(2, Rational(1, 2) * d.s1[i]));
  } else {
    const auto& f = std::get<Member>(verdict).factorization;
    out.shape = SectionShape::Generic;
    out.stability = f.tau.is_constant() ? Stability::Polystable : Stability::Stable;
    for (std::size_t i = 0; i < n; ++i) {
      PolyMatrix m = PolyMatrix::scalar(2, Rational(1, 2) * d.s1[i]);
      m(0, 1) = -(f.alpha[i] * f.tau);
      m(1, 0) = f.alpha[i];
      b.push_back(std::move(m));
    }
    out.factorization = f;
  }
  HiggsField field(std::move(b));
  SpectralDatum back = hitchin_map(field);
  if (back != d)
    fail(ErrorKind::SectionIdentityViolation, "emitted field maps to s2 = " + back.s2.matrix().to_string());
  out.field = std::move(field);
  return out;
}

HitchinSectionOutput hitchin_section(const NSClass& l_class, const std::optional<NSClass>& d_class, bool s1_nonzero,
                                     const SurfaceModel& model) {
  model.require_class(l_class, "L");
  HitchinSectionOutput out;
  if (!d_class) {
    if (!s1_nonzero) fail(ErrorKind::NilpotentDatum, "s1 = 0 and s2 = 0");
    out.shape = SectionShape::Diagonal;
    out.stability = Stability::Polystable;
    out.e_classes = {NSClass::zero(model.rank()), NSClass::zero(model.rank())};
    return out;
  }
  model.require_class(*d_class, "D");
  if (*d_class != Rational(2) * l_class)
    fail(ErrorKind::InconsistentBranchData, "D = " + d_class->to_string() + " is not 2L = " + (Rational(2) * l_class).to_string());
  out.shape = SectionShape::Generic;
  out.stability = d_class->is_zero() ? Stability::Polystable : Stability::Stable;
  out.e_classes = {NSClass::zero(model.rank()), -l_class};
  out.psl2r_condition = model.intersect(*d_class, *d_class) == 0;
  out.sl2r_condition = *out.psl2r_condition && (Rational(1, 2) * l_class).is_integral();
  return out;
}

SpectralDatum cstar_scale(const SpectralDatum& d, const Rational& t) {
  return SpectralDatum(d.s1 * t, Rational(t * t) * d.s2);
}

std::vector<SL2RDatum> sl2r_enumerate(const std::vector<DivisorComponent>& components, const NSClass& l_class,
                                      const SurfaceModel& model) {
  model.require_class(l_class, "L");
  NSClass total = NSClass::zero(model.rank());
  for (const auto& c : components) {
    model.require_class(c.cls, "component");
    total = total + Rational(c.multiplicity) * c.cls;
  }
  if (total != Rational(2) * l_class)
    fail(ErrorKind::InconsistentBranchData, "sum m_i D_i = " + total.to_string() + " but 2L = " + (Rational(2) * l_class).to_string());

  std::vector<SL2RDatum> out;
  std::vector<unsigned> a(components.size(), 0);
  while (true) {
    NSClass d1 = NSClass::zero(model.rank());
    for (std::size_t i = 0; i < a.size(); ++i) d1 = d1 + Rational(a[i]) * components[i].cls;
    NSClass d2 = total - d1;
    NSClass diff = d1 - d2;
    NSClass n = Rational(1, 2) * (d1 - l_class);
    if (model.intersect(diff, diff) == 0 && n.is_integral())
      out.push_back(SL2RDatum{a, d1, d2, n, model.torsion2_count()});
    std::size_t i = a.size();
    while (i > 0 && a[i - 1] == components[i - 1].multiplicity) a[--i] = 0;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

MilnorWoodResult milnor_wood_check(const NSClass& w, const NSClass& gamma, const SurfaceModel& model, bool k_pseff) {
  if (!k_pseff) fail(ErrorKind::NotApplicable, "the inequality needs K_X pseudoeffective");
  MilnorWoodResult r;
  r.toledo = degree(w, gamma, model);
  r.bound = Rational(1, 2) * degree(model.canonical(), gamma, model);
  r.holds = abs(r.toledo) <= r.bound;
  return r;
}

RigidityVerdict rigidity_verdict(const TopologicalData& t) {
  if (t.double_cover_b1s && t.two_torsion_count) {
    const Integer expected = *t.two_torsion_count - 1;
    if (expected < 0 || Integer(static_cast<unsigned long>(t.double_cover_b1s->size())) != expected)
      fail(ErrorKind::PreconditionViolated, "expected " + expected.get_str() + " double covers, got " +
                                                std::to_string(t.double_cover_b1s->size()));
  }
  if (t.b1 != 0) return {Rigidity::NotRigid, "b1 = " + std::to_string(t.b1) + " != 0"};
  if (!t.picard_number_one) return {Rigidity::Undecided, "Picard number one not declared"};
  if (!t.double_cover_b1s) return {Rigidity::Undecided, "double covers not declared"};
  const auto& covers = *t.double_cover_b1s;
  for (std::size_t i = 0; i < covers.size(); ++i)
    if (covers[i] != 0)
      return {Rigidity::NotRigid, "double cover " + std::to_string(i + 1) + " has b1 = " + std::to_string(covers[i])};
  return {Rigidity::Rigid, "b1 = 0 on X and on every unramified double cover"};
}

PolyMatrix higher_rank_build(std::size_t n, const std::vector<Poly>& c) {
  if (n < 2 || n > kMaxMatrixSize)
    fail(ErrorKind::RankCap, "rank " + std::to_string(n) + " outside [2, " + std::to_string(kMaxMatrixSize) + "]");
  if (c.size() != n - 1)
    fail(ErrorKind::DimensionMismatch, "rank " + std::to_string(n) + " needs " + std::to_string(n - 1) + " coefficients");
  const std::size_t nv = c.front().nvars();
  for (const auto& p : c) check_input_caps(p, "coefficient");
  PolyMatrix phi(n, nv);
  for (std::size_t k = 0; k + 1 < n; ++k) phi(0, k + 1) = c[k];
  for (std::size_t i = 1; i < n; ++i) phi(i, i - 1) = Poly::constant(nv, 1);
  return phi;
}

std::vector<Poly> charpoly_cofactor(const PolyMatrix& phi) {
  const std::size_t n = phi.size();
  const std::size_t nv = phi.nvars();
  std::vector<std::vector<LambdaPoly>> m(n, std::vector<LambdaPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LambdaPoly e{nv, {-phi(i, j)}};
      if (i == j) e.coeffs.push_back(Poly::constant(nv, 1));
      e.trim();
      m[i][j] = std::move(e);
    }
  LambdaPoly d = cofactor_det(m, LambdaPoly{nv, {}});
  d.coeffs.resize(n + 1, Poly(nv));
  return d.coeffs;
}

std::vector<Poly> expected_charpoly(std::size_t n, const std::vector<Poly>& c) {
  const std::size_t nv = c.empty() ? 0 : c.front().nvars();
  std::vector<Poly> out(n + 1, Poly(nv));
  out[n] = Poly::constant(nv, 1);
  for (std::size_t k = 2; k <= n && k - 2 < c.size(); ++k) out[n - k] = -c[k - 2];
  return out;
}

bool higher_rank_charcheck(const PolyMatrix& phi, const std::vector<Poly>& c) {
  if (c.size() + 1 != phi.size()) return false;
  const auto expected = expected_charpoly(phi.size(), c);
  return charpoly_cofactor(phi) == expected && charpoly(phi) == expected;
}

}  // namespace higgs
