#ifndef HIGGS_MODULI_HPP
#define HIGGS_MODULI_HPP

#include <optional>
#include <string>
#include <vector>

#include "higgs/geometry.hpp"
#include "higgs/matrix.hpp"
#include "higgs/spectral.hpp"

namespace higgs {

enum class Stability { Stable, Polystable, NotStable };
std::string_view to_string(Stability s);

// --- stability of split shapes --------------------------------------------------

// (L1 + L2, phi) with phi strictly lower triangular and alpha: L1 -> L2 (x) Omega.
Stability hodge_stability(const Rational& d1, const Rational& d2, bool alpha_nonzero);

// E = L1 + L2 with phi = [[w, beta], [alpha, w]].
struct SplitHiggsDescription {
  NSClass l1;
  NSClass l2;
  bool omega_diag_nonzero = false;
  bool alpha_nonzero = false;
  bool beta_nonzero = false;
  // alpha and beta proportional; a zero entry counts as proportional.
  bool alpha_beta_proportional = false;
  bool l1_iso_l2 = false;
};

// Degrees are taken against the model polarization unless one is given.
Stability real_stability(const SplitHiggsDescription& desc, const SurfaceModel& model,
                         const std::optional<NSClass>& polarization = std::nullopt);

// --- Hitchin section ----------------------------------------------------------------

enum class SectionShape {
  Generic,   // E = O + L^-1, phi = [[s1/2, -alpha tau], [alpha, s1/2]]
  Diagonal,  // 4 s2 = s1^2 with s1 != 0: E = O + O, phi = s1/2 * Id
};

struct HitchinSectionOutput {
  SectionShape shape = SectionShape::Generic;
  std::optional<HiggsField> field;                        // chart backend
  std::optional<std::pair<NSClass, NSClass>> e_classes;  // lattice backend
  std::optional<RankOneFactorization> factorization;      // chart, generic shape
  Stability stability = Stability::Stable;
  bool real = true;
  std::optional<bool> psl2r_condition;
  std::optional<bool> sl2r_condition;
};

// Throws NilpotentDatum for (0, 0), NotInSpectralBase outside the base and
// SectionIdentityViolation if the emitted field does not map back to d.
HitchinSectionOutput hitchin_section(const SpectralDatum& d);

// Lattice backend. `d_class` is the branch divisor class of tau (absent when
// 4 s2 = s1^2); it must equal 2L.
HitchinSectionOutput hitchin_section(const NSClass& l_class, const std::optional<NSClass>& d_class, bool s1_nonzero,
                                     const SurfaceModel& model);

SpectralDatum cstar_scale(const SpectralDatum& d, const Rational& t);

// --- SL2(R) data ----------------------------------------------------------------------

struct DivisorComponent {
  NSClass cls;
  unsigned multiplicity = 0;
};

struct SL2RDatum {
  std::vector<unsigned> tuple_a;  // D1 = sum a_i D_i
  NSClass d1;
  NSClass d2;
  NSClass n_class;  // (D1 - L) / 2
  Integer torsion_multiplicity;
};

// All splittings D = D1 + D2 along the components with (D1 - D2)^2 = 0 and
// D1 - L divisible by 2, ordered by tuple.
std::vector<SL2RDatum> sl2r_enumerate(const std::vector<DivisorComponent>& components, const NSClass& l_class,
                                      const SurfaceModel& model);

// --- Milnor-Wood ----------------------------------------------------------------------

struct MilnorWoodResult {
  Rational toledo;
  Rational bound;
  bool holds = false;
};

MilnorWoodResult milnor_wood_check(const NSClass& w, const NSClass& gamma, const SurfaceModel& model, bool k_pseff);

// --- rigidity --------------------------------------------------------------------------

struct TopologicalData {
  bool picard_number_one = false;
  unsigned b1 = 0;
  std::optional<std::vector<unsigned>> double_cover_b1s;
  // Size of the order-2 subgroup; when given with the list, the list has
  // one entry per nontrivial element.
  std::optional<Integer> two_torsion_count;
};

enum class Rigidity { Rigid, NotRigid, Undecided };
std::string_view to_string(Rigidity r);

struct RigidityVerdict {
  Rigidity verdict = Rigidity::Undecided;
  std::string reason;
};

RigidityVerdict rigidity_verdict(const TopologicalData& t);

// --- higher rank -------------------------------------------------------------------------

// Companion-shaped n x n matrix: first row (0, c2, ..., cn), ones below the
// diagonal. Throws RankCap unless 2 <= n <= kMaxMatrixSize.
PolyMatrix higher_rank_build(std::size_t n, const std::vector<Poly>& c);

// Coefficients of det(lambda*I - phi) by cofactor expansion over the
// lambda-polynomial ring; entry k multiplies lambda^k.
std::vector<Poly> charpoly_cofactor(const PolyMatrix& phi);

// lambda^n - sum_k c_k lambda^(n-k), lowest degree first.
std::vector<Poly> expected_charpoly(std::size_t n, const std::vector<Poly>& c);

// Cofactor and Faddeev-LeVerrier characteristic polynomials both equal
// expected_charpoly(n, c).
bool higher_rank_charcheck(const PolyMatrix& phi, const std::vector<Poly>& c);

}  // namespace higgs

#endif
