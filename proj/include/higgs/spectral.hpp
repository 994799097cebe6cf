#ifndef HIGGS_SPECTRAL_HPP
#define HIGGS_SPECTRAL_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "higgs/forms.hpp"
#include "higgs/matrix.hpp"
#include "higgs/poly.hpp"

namespace higgs {

// S = tau * alpha * alpha^T with alpha primitive (content 1) and the first
// nonzero entry of alpha having positive leading coefficient.
struct RankOneFactorization {
  OneForm alpha;
  Poly tau;

  // Validates the normalization of alpha; throws ZeroInput or
  // FactorizationInconsistent.
  RankOneFactorization(OneForm alpha, Poly tau);

  SymDiff expand() const;
  bool operator==(const RankOneFactorization&) const = default;
};

struct SpectralDatum {
  OneForm s1;
  SymDiff s2;

  SpectralDatum(OneForm s1, SymDiff s2);
  bool operator==(const SpectralDatum&) const = default;
};

// phi = sum_i B_i dz_i.
class HiggsField {
 public:
  explicit HiggsField(std::vector<PolyMatrix> matrices);

  std::size_t dim() const { return b_.size(); }
  std::size_t rank() const { return b_.front().size(); }
  std::size_t nvars() const { return b_.front().nvars(); }
  const PolyMatrix& operator[](std::size_t i) const { return b_[i]; }
  const std::vector<PolyMatrix>& matrices() const { return b_; }

  bool operator==(const HiggsField&) const = default;

 private:
  std::vector<PolyMatrix> b_;
};

// --- rank-one symmetric differentials --------------------------------------

struct MinorWitness {
  std::size_t r0, r1, c0, c1;
  Poly value;
};

// First nonzero 2x2 minor in row-major order of (r0<r1, c0<c1).
std::optional<MinorWitness> nonzero_minor(const SymDiff& s);
bool rank_le_one(const SymDiff& s);
std::size_t rank_at(const SymDiff& s, std::span<const Rational> point);
// Throws ZeroInput, NotRankOne (minor witness) or FactorizationInconsistent.
RankOneFactorization factor_rank_one(const SymDiff& s);

struct Nilpotent {};
struct Member {
  RankOneFactorization factorization;
};
struct NotMember {
  MinorWitness witness;  // a nonzero minor of 4*s2 - s1*s1^T
};
using BaseVerdict = std::variant<Nilpotent, Member, NotMember>;

// s2 - s1*s1^T/4.
SymDiff discriminant_form(const SpectralDatum& d);
BaseVerdict spectral_base_check(const SpectralDatum& d);

// --- Higgs fields ----------------------------------------------------------

bool higgs_integrable(const HiggsField& phi);
// (tr phi, det phi) as a 1-form and a quadratic form; rank 2 only.
SpectralDatum hitchin_map(const HiggsField& phi);
// Phi0 with B_i = alpha_i * Phi0 + tr(B_i)/2 * Id for every i.
PolyMatrix twisted_factor(const HiggsField& phi, const RankOneFactorization& f);

// --- covers ----------------------------------------------------------------

// eta^2 + effective_tau = 0 over the chart, for a tuple a of the tower.
struct SpectralCover {
  RankOneFactorization factorization;
  SquarefreeDecomposition branch;
  std::vector<unsigned> tuple_a;
  Poly effective_tau;

  bool operator==(const SpectralCover&) const = default;
};

// Branch components default to the squarefree decomposition of tau. A
// declared factorization must multiply back to tau and consist of
// squarefree, pairwise coprime factors; it replaces the default.
SpectralCover build_cover(const RankOneFactorization& f,
                          const std::optional<SquarefreeDecomposition>& declared = std::nullopt);
// Same cover with a different tuple; validates 0 <= a_i <= m_i / 2.
SpectralCover cover_at(const SpectralCover& base, std::vector<unsigned> tuple_a);
bool is_normal(const SpectralCover& c);

// Constant effective tau only: the cover is two disjoint copies of the
// chart over Q iff -tau is a rational square.
std::optional<bool> splits_over_q(const SpectralCover& c);

struct TowerEdge {
  std::size_t from, to;  // to has one coordinate larger by one
};

struct Tower {
  std::vector<SpectralCover> covers;  // tuples in lexicographic order
  std::vector<TowerEdge> edges;
  std::size_t normalization = 0;  // index of the maximal tuple
};

Tower tower_enumerate(const SpectralCover& c);

// A free rank-one module on the cover: eta acts through Phi on a basis.
class CoverModule {
 public:
  // Throws CayleyHamiltonViolation unless Phi^2 = -effective_tau * Id.
  CoverModule(SpectralCover cover, PolyMatrix eta_action);

  const SpectralCover& cover() const { return cover_; }
  const PolyMatrix& eta_action() const { return phi_; }
  bool operator==(const CoverModule&) const = default;

 private:
  SpectralCover cover_;
  PolyMatrix phi_;
};

CoverModule canonical_module(const SpectralCover& c);
// B_i = alpha_i * prod f_j^{a_j} * Phi; on the a = 0 cover this is
// alpha_i * Phi.
HiggsField pushforward(const CoverModule& m);
// Requires tr phi = 0; the module lives on the a = 0 cover of f.
CoverModule module_from_higgs(const HiggsField& phi, const RankOneFactorization& f);

// Koszul generators alpha_j e_i - alpha_i e_j, i < j.
std::vector<OneForm> annihilator_distribution(const OneForm& alpha);

}  // namespace higgs

#endif
