#include "higgs/spectral.hpp"

#include "higgs/error.hpp"

namespace higgs {

namespace {

// gcd of all entries is a nonzero constant (the rational content is free).
bool is_primitive_vector(const OneForm& v) {
  Poly g = gcd(std::span<const Poly>(v.entries()));
  return !g.is_zero() && g.is_constant() && g.leading_coefficient() == 1;
}

OneForm normalize_vector(const OneForm& v) {
  Poly g = gcd(std::span<const Poly>(v.entries()));
  std::vector<Poly> out;
  for (const auto& e : v.entries()) out.push_back(exact_div(e, g));
  OneForm a(std::move(out));
  if (sgn(a[a.first_nonzero()].leading_coefficient()) < 0) a = a * Rational(-1);
  return a;
}

Poly half_trace(const PolyMatrix& b) { return Rational(1, 2) * trace(b); }

void require_compatible(const HiggsField& phi, const RankOneFactorization& f) {
  if (phi.dim() != f.alpha.dim() || phi.nvars() != f.alpha.nvars())
    fail(ErrorKind::DimensionMismatch, "Higgs field and factorization live on different charts");
  if (phi.rank() != 2) fail(ErrorKind::RankUnsupported, "rank " + std::to_string(phi.rank()) + " field");
}

// Phi0 from one nonzero alpha_i, verified against every B_i.
PolyMatrix divide_out_alpha(const HiggsField& phi, const RankOneFactorization& f) {
  require_compatible(phi, f);
  const std::size_t i0 = f.alpha.first_nonzero();
  const std::size_t nv = phi.nvars();
  PolyMatrix centered = phi[i0] - PolyMatrix::scalar(2, half_trace(phi[i0]));
  PolyMatrix phi0(2, nv);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      auto q = try_exact_div(centered(r, c), f.alpha[i0]);
      if (!q)
        fail(ErrorKind::FactorizationMismatch, "alpha_" + std::to_string(i0 + 1) + " = " + f.alpha[i0].to_string() +
                                                   " does not divide entry (" + std::to_string(r + 1) + "," +
                                                   std::to_string(c + 1) + ") = " + centered(r, c).to_string());
      phi0(r, c) = std::move(*q);
    }
  for (std::size_t i = 0; i < phi.dim(); ++i) {
    PolyMatrix rebuilt = f.alpha[i] * phi0 + PolyMatrix::scalar(2, half_trace(phi[i]));
    if (rebuilt != phi[i])
      fail(ErrorKind::FactorizationMismatch,
           "B_" + std::to_string(i + 1) + " = " + phi[i].to_string() + " is not alpha_" + std::to_string(i + 1) +
               " * " + phi0.to_string() + " + tr/2");
  }
  return phi0;
}

Poly tuple_power(const SquarefreeDecomposition& branch, const std::vector<unsigned>& a, std::size_t nvars) {
  Poly p = Poly::constant(nvars, 1);
  for (std::size_t i = 0; i < a.size(); ++i) p *= branch.factors[i].factor.pow(a[i]);
  return p;
}

}  // namespace

RankOneFactorization::RankOneFactorization(OneForm a, Poly t) : alpha(std::move(a)), tau(std::move(t)) {
  if (alpha.is_zero()) fail(ErrorKind::ZeroInput, "alpha is zero");
  if (tau.is_zero()) fail(ErrorKind::ZeroInput, "tau is zero");
  if (tau.nvars() != alpha.nvars()) fail(ErrorKind::DimensionMismatch, "alpha and tau in different rings");
  if (!is_primitive_vector(alpha))
    fail(ErrorKind::FactorizationInconsistent, "alpha has nontrivial common factor " +
                                                   gcd(std::span<const Poly>(alpha.entries())).to_string());
  if (sgn(alpha[alpha.first_nonzero()].leading_coefficient()) < 0)
    fail(ErrorKind::FactorizationInconsistent, "first nonzero entry of alpha has negative leading coefficient");
}

SymDiff RankOneFactorization::expand() const { return tau * SymDiff::outer(alpha); }

SpectralDatum::SpectralDatum(OneForm first, SymDiff second) : s1(std::move(first)), s2(std::move(second)) {
  if (s1.dim() != s2.dim() || s1.nvars() != s2.nvars())
    fail(ErrorKind::DimensionMismatch, "s1 and s2 live on different charts");
}

HiggsField::HiggsField(std::vector<PolyMatrix> matrices) : b_(std::move(matrices)) {
  if (b_.empty()) fail(ErrorKind::DimensionMismatch, "Higgs field without matrices");
  if (b_.size() > kMaxVars)
    fail(ErrorKind::CapExceeded, "chart dimension " + std::to_string(b_.size()) + " exceeds " + std::to_string(kMaxVars));
  for (const auto& b : b_)
    if (b.size() != b_.front().size() || b.nvars() != b_.front().nvars())
      fail(ErrorKind::DimensionMismatch, "Higgs matrices differ in size or ring");
}

std::optional<MinorWitness> nonzero_minor(const SymDiff& s) {
  const std::size_t n = s.dim();
  for (std::size_t r0 = 0; r0 < n; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < n; ++r1)
      for (std::size_t c0 = 0; c0 < n; ++c0)
        for (std::size_t c1 = c0 + 1; c1 < n; ++c1) {
          Poly m = minor2(s.matrix(), r0, r1, c0, c1);
          if (!m.is_zero()) return MinorWitness{r0, r1, c0, c1, std::move(m)};
        }
  return std::nullopt;
}

bool rank_le_one(const SymDiff& s) { return !nonzero_minor(s).has_value(); }

std::size_t rank_at(const SymDiff& s, std::span<const Rational> point) {
  return rank(evaluate(s.matrix(), point));
}

RankOneFactorization factor_rank_one(const SymDiff& s) {
  if (s.is_zero()) fail(ErrorKind::ZeroInput, "symmetric differential is zero");
  if (auto w = nonzero_minor(s))
    fail(ErrorKind::NotRankOne, "minor rows {" + std::to_string(w->r0 + 1) + "," + std::to_string(w->r1 + 1) +
                                    "} cols {" + std::to_string(w->c0 + 1) + "," + std::to_string(w->c1 + 1) +
                                    "} = " + w->value.to_string());
  std::size_t i0 = 0;
  while (i0 < s.dim() && s(i0, i0).is_zero()) ++i0;
  if (i0 == s.dim()) fail(ErrorKind::FactorizationInconsistent, "nonzero rank-one form with zero diagonal");
  std::vector<Poly> row;
  for (std::size_t j = 0; j < s.dim(); ++j) row.push_back(s(i0, j));
  OneForm alpha = normalize_vector(OneForm(std::move(row)));
  auto tau = try_exact_div(s(i0, i0), alpha[i0] * alpha[i0]);
  if (!tau)
    fail(ErrorKind::FactorizationInconsistent, "alpha_" + std::to_string(i0 + 1) + "^2 does not divide S[" +
                                                   std::to_string(i0 + 1) + "][" + std::to_string(i0 + 1) + "]");
  RankOneFactorization f(std::move(alpha), std::move(*tau));
  if (f.expand() != s) fail(ErrorKind::FactorizationInconsistent, "tau * alpha * alpha^T does not reproduce S");
  return f;
}

SymDiff discriminant_form(const SpectralDatum& d) { return d.s2 - Rational(1, 4) * SymDiff::outer(d.s1); }

BaseVerdict spectral_base_check(const SpectralDatum& d) {
  SymDiff q = discriminant_form(d);
  if (q.is_zero()) return Nilpotent{};
  if (auto w = nonzero_minor(q)) {
    w->value *= Rational(16);  // same minor of 4*q
    return NotMember{std::move(*w)};
  }
  return Member{factor_rank_one(q)};
}

bool higgs_integrable(const HiggsField& phi) {
  for (std::size_t i = 0; i < phi.dim(); ++i)
    for (std::size_t j = i + 1; j < phi.dim(); ++j)
      if (!commutator(phi[i], phi[j]).is_zero()) return false;
  return true;
}

SpectralDatum hitchin_map(const HiggsField& phi) {
  if (phi.rank() != 2) fail(ErrorKind::RankUnsupported, "rank " + std::to_string(phi.rank()) + " field");
  const std::size_t n = phi.dim();
  std::vector<Poly> traces;
  for (const auto& b : phi.matrices()) traces.push_back(trace(b));
  PolyMatrix s2(n, phi.nvars());
  for (std::size_t i = 0; i < n; ++i) {
    s2(i, i) = det(phi[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly off = Rational(1, 2) * (traces[i] * traces[j] - trace(phi[i] * phi[j]));
      s2(i, j) = off;
      s2(j, i) = std::move(off);
    }
  }
  return SpectralDatum(OneForm(std::move(traces)), SymDiff(std::move(s2)));
}

PolyMatrix twisted_factor(const HiggsField& phi, const RankOneFactorization& f) {
  PolyMatrix phi0 = divide_out_alpha(phi, f);
  if (phi0 * phi0 != PolyMatrix::scalar(2, -f.tau))
    fail(ErrorKind::FactorizationMismatch, "Phi0^2 = " + (phi0 * phi0).to_string() + " is not -tau * Id");
  return phi0;
}

SpectralCover build_cover(const RankOneFactorization& f, const std::optional<SquarefreeDecomposition>& declared) {
  const std::size_t nv = f.tau.nvars();
  SquarefreeDecomposition branch;
  if (declared) {
    branch = *declared;
    for (std::size_t i = 0; i < branch.factors.size(); ++i) {
      const auto& [g, m] = branch.factors[i];
      if (g.nvars() != nv) fail(ErrorKind::DimensionMismatch, "declared component in a different ring");
      if (m == 0 || g.is_constant() || !is_squarefree(g) || primitive_part(g) != g)
        fail(ErrorKind::FactorizationInconsistent,
             "declared component " + g.to_string() + " must be a primitive squarefree nonconstant factor with m >= 1");
      for (std::size_t j = 0; j < i; ++j)
        if (!gcd(g, branch.factors[j].factor).is_constant())
          fail(ErrorKind::FactorizationInconsistent,
               "declared components " + branch.factors[j].factor.to_string() + " and " + g.to_string() + " share a factor");
    }
    if (branch.expand(nv) != f.tau)
      fail(ErrorKind::FactorizationInconsistent, "declared components multiply to " + branch.expand(nv).to_string() +
                                                     ", not tau = " + f.tau.to_string());
  } else {
    branch = squarefree_decompose(f.tau);
  }
  std::vector<unsigned> zero(branch.factors.size(), 0);
  return SpectralCover{f, std::move(branch), std::move(zero), f.tau};
}

SpectralCover cover_at(const SpectralCover& base, std::vector<unsigned> tuple_a) {
  const auto& factors = base.branch.factors;
  if (tuple_a.size() != factors.size())
    fail(ErrorKind::DimensionMismatch, "tuple of length " + std::to_string(tuple_a.size()) + " for " +
                                           std::to_string(factors.size()) + " branch components");
  const std::size_t nv = base.factorization.tau.nvars();
  Poly eff = Poly::constant(nv, base.branch.content);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (2 * tuple_a[i] > factors[i].multiplicity)
      fail(ErrorKind::PreconditionViolated, "a_" + std::to_string(i + 1) + " = " + std::to_string(tuple_a[i]) +
                                                " exceeds m/2 for m = " + std::to_string(factors[i].multiplicity));
    eff *= factors[i].factor.pow(factors[i].multiplicity - 2 * tuple_a[i]);
  }
  return SpectralCover{base.factorization, base.branch, std::move(tuple_a), std::move(eff)};
}

bool is_normal(const SpectralCover& c) { return is_squarefree(c.effective_tau); }

std::optional<bool> splits_over_q(const SpectralCover& c) {
  if (!c.effective_tau.is_constant()) return std::nullopt;
  return is_rational_square(-c.effective_tau.constant_term());
}

Tower tower_enumerate(const SpectralCover& c) {
  const auto& factors = c.branch.factors;
  const std::size_t k = factors.size();
  std::vector<unsigned> bound(k);
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    bound[i] = factors[i].multiplicity / 2;
    count *= bound[i] + 1;
  }
  // Mixed-radix index with the last coordinate varying fastest.
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * (bound[i] + 1);

  Tower t;
  std::vector<unsigned> a(k, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    t.covers.push_back(cover_at(c, a));
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] < bound[i]) t.edges.push_back({idx, idx + stride[i]});
    for (std::size_t i = k; i-- > 0;) {
      if (a[i] < bound[i]) {
        ++a[i];
        break;
      }
      a[i] = 0;
    }
  }
  t.normalization = count - 1;
  return t;
}

CoverModule::CoverModule(SpectralCover cover, PolyMatrix eta_action) : cover_(std::move(cover)), phi_(std::move(eta_action)) {
  if (phi_.size() != 2 || phi_.nvars() != cover_.effective_tau.nvars())
    fail(ErrorKind::DimensionMismatch, "eta action must be a 2x2 matrix over the chart ring");
  if (phi_ * phi_ != PolyMatrix::scalar(2, -cover_.effective_tau))
    fail(ErrorKind::CayleyHamiltonViolation, "Phi^2 = " + (phi_ * phi_).to_string() + " but -tau = " +
                                                 (-cover_.effective_tau).to_string());
}

CoverModule canonical_module(const SpectralCover& c) {
  const std::size_t nv = c.effective_tau.nvars();
  PolyMatrix phi(2, nv);
  phi(0, 1) = -c.effective_tau;
  phi(1, 0) = Poly::constant(nv, 1);
  return CoverModule(c, std::move(phi));
}

HiggsField pushforward(const CoverModule& m) {
  const auto& c = m.cover();
  Poly scale = tuple_power(c.branch, c.tuple_a, c.effective_tau.nvars());
  std::vector<PolyMatrix> b;
  for (const auto& a : c.factorization.alpha.entries()) b.push_back((a * scale) * m.eta_action());
  return HiggsField(std::move(b));
}

CoverModule module_from_higgs(const HiggsField& phi, const RankOneFactorization& f) {
  require_compatible(phi, f);
  for (std::size_t i = 0; i < phi.dim(); ++i)
    if (!trace(phi[i]).is_zero())
      fail(ErrorKind::PreconditionViolated, "tr B_" + std::to_string(i + 1) + " = " + trace(phi[i]).to_string());
  return CoverModule(build_cover(f), divide_out_alpha(phi, f));
}

std::vector<OneForm> annihilator_distribution(const OneForm& alpha) {
  if (alpha.is_zero()) fail(ErrorKind::ZeroInput, "alpha is zero");
  std::vector<OneForm> out;
  for (std::size_t i = 0; i < alpha.dim(); ++i)
    for (std::size_t j = i + 1; j < alpha.dim(); ++j) {
      OneForm v(alpha.dim(), alpha.nvars());
      v[i] = alpha[j];
      v[j] = -alpha[i];
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace higgs
