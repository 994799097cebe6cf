#include <doctest.h>

#include "higgs/moduli.hpp"
#include "test_util.hpp"

using namespace higgs;
using testing::error_kind;
using testing::F;
using testing::M;
using testing::P;
using testing::S;

namespace {

NSClass C(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return NSClass(std::move(out));
}

SplitHiggsDescription split(NSClass l1, NSClass l2, bool a, bool b, bool prop, bool iso) {
  return SplitHiggsDescription{std::move(l1), std::move(l2), false, a, b, prop, iso};
}

}  // namespace

TEST_CASE("hodge stability") {
  CHECK(hodge_stability(1, -1, true) == Stability::Stable);
  CHECK(hodge_stability(0, 0, true) == Stability::NotStable);
  CHECK(hodge_stability(-1, 0, true) == Stability::NotStable);
  CHECK(error_kind([] { hodge_stability(1, 0, false); }) == ErrorKind::ZeroHiggsUnsupported);
}

TEST_CASE("real stability") {
  auto x = ProductOfCurves{2, 2}.model();
  const NSClass f1 = C({1, 0}), f2 = C({0, 1}), zero = C({0, 0});
  CHECK(real_stability(split(f1, -f1, true, false, true, false), x) == Stability::Stable);
  CHECK(real_stability(split(f1, -f1, false, true, true, false), x) == Stability::NotStable);
  CHECK(real_stability(split(zero, zero, true, true, true, true), x) == Stability::Polystable);
  CHECK(real_stability(split(zero, zero, true, true, false, true), x) == Stability::Stable);
  CHECK(real_stability(split(f1, f2, true, false, true, false), x) == Stability::NotStable);
  CHECK(real_stability(split(f1, f2, true, true, false, false), x) == Stability::Stable);
  CHECK(real_stability(split(zero, zero, false, false, true, true), x) == Stability::Polystable);
  CHECK(real_stability(split(zero, zero, true, false, true, true), x) == Stability::NotStable);
  CHECK(error_kind([&] { real_stability(split(-f1, f1, true, true, false, false), x); }) ==
        ErrorKind::DegreeOrderViolation);
  CHECK(error_kind([&] { real_stability(split(f1, -f1, true, true, false, true), x); }) == ErrorKind::UnsupportedShape);
  CHECK(error_kind([&] { real_stability(split(f1, -f1, true, false, false, false), x); }) ==
        ErrorKind::UnsupportedShape);
  // Against F1 alone both classes F1, F2 have degrees 0 and 1.
  CHECK(error_kind([&] { real_stability(split(f1, f2, true, true, false, false), x, f1); }) ==
        ErrorKind::DegreeOrderViolation);
}

TEST_CASE("hitchin section on the chart") {
  SpectralDatum d(F({"0", "0"}), S({{"x^2", "x*y"}, {"x*y", "y^2"}}));
  auto out = hitchin_section(d);
  CHECK(out.shape == SectionShape::Generic);
  CHECK(out.stability == Stability::Polystable);
  REQUIRE(out.field);
  CHECK((*out.field)[0] == M({{"0", "-x"}, {"x", "0"}}));
  CHECK((*out.field)[1] == M({{"0", "-y"}, {"y", "0"}}));
  CHECK(hitchin_map(*out.field) == d);

  SpectralDatum stable(F({"1", "0"}), S({{"1/4 + x", "0"}, {"0", "0"}}));
  out = hitchin_section(stable);
  CHECK(out.stability == Stability::Stable);
  CHECK(out.factorization->tau == P("x"));
  CHECK(hitchin_map(*out.field) == stable);

  SpectralDatum diag(F({"2*x", "2*y"}), S({{"x^2", "x*y"}, {"x*y", "y^2"}}));
  out = hitchin_section(diag);
  CHECK(out.shape == SectionShape::Diagonal);
  CHECK(out.stability == Stability::Polystable);
  CHECK((*out.field)[0] == M({{"x", "0"}, {"0", "x"}}));

  CHECK(error_kind([] { hitchin_section(SpectralDatum(F({"0", "0"}), S({{"0", "0"}, {"0", "0"}}))); }) ==
        ErrorKind::NilpotentDatum);
  CHECK(error_kind([] { hitchin_section(SpectralDatum(F({"0", "0"}), S({{"1", "0"}, {"0", "1"}}))); }) ==
        ErrorKind::NotInSpectralBase);
}

TEST_CASE("hitchin section on the lattice") {
  auto x = ProductOfCurves{2, 2}.model();
  auto out = hitchin_section(C({0, 0}), C({0, 0}), false, x);
  CHECK(out.stability == Stability::Polystable);
  CHECK(out.e_classes->second == C({0, 0}));
  CHECK(*out.psl2r_condition);
  CHECK(*out.sl2r_condition);

  out = hitchin_section(C({1, 0}), C({2, 0}), false, x);
  CHECK(out.stability == Stability::Stable);
  CHECK(out.e_classes->second == C({-1, 0}));
  CHECK(*out.psl2r_condition);
  CHECK_FALSE(*out.sl2r_condition);

  out = hitchin_section(C({1, 1}), C({2, 2}), false, x);
  CHECK_FALSE(*out.psl2r_condition);

  out = hitchin_section(C({0, 0}), std::nullopt, true, x);
  CHECK(out.shape == SectionShape::Diagonal);
  CHECK(out.stability == Stability::Polystable);

  CHECK(error_kind([&] { hitchin_section(C({0, 0}), std::nullopt, false, x); }) == ErrorKind::NilpotentDatum);
  CHECK(error_kind([&] { hitchin_section(C({1, 0}), C({1, 0}), false, x); }) == ErrorKind::InconsistentBranchData);
}

TEST_CASE("cstar scaling") {
  SpectralDatum d(F({"x", "1"}), S({{"x^2 + x", "x*y"}, {"x*y", "y^2 + 1/4"}}));
  CHECK(cstar_scale(d, 1) == d);
  auto z = cstar_scale(d, 0);
  CHECK(z.s1.is_zero());
  CHECK(z.s2.is_zero());
  SpectralDatum m(F({"0", "0"}), S({{"x^3", "x^2*y"}, {"x^2*y", "x*y^2"}}));
  auto v = spectral_base_check(cstar_scale(m, 2));
  REQUIRE(std::holds_alternative<Member>(v));
  CHECK(std::get<Member>(v).factorization.tau == P("4*x"));
}

TEST_CASE("sl2r enumeration") {
  auto x = ProductOfCurves{2, 2}.model();
  const NSClass f1 = C({1, 0});
  std::vector<DivisorComponent> fibres(4, DivisorComponent{f1, 1});
  auto data = sl2r_enumerate(fibres, C({2, 0}), x);
  CHECK(data.size() == 8);
  for (const auto& d : data) {
    unsigned k = 0;
    for (unsigned a : d.tuple_a) k += a;
    CHECK(k % 2 == 0);
    CHECK(d.torsion_multiplicity == 256);
    CHECK(Rational(2) * d.n_class == d.d1 - C({2, 0}));
  }

  // D = 2 D1 with D1^2 != 0: the balanced split always passes the square test.
  const NSClass diag = C({1, 1});
  auto balanced = sl2r_enumerate({{diag, 2}}, diag, x);
  REQUIRE(balanced.size() == 1);
  CHECK(balanced[0].tuple_a == std::vector<unsigned>{1});

  auto empty = sl2r_enumerate({}, C({0, 0}), x);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].d1 == C({0, 0}));

  CHECK(error_kind([&] { sl2r_enumerate(fibres, C({1, 0}), x); }) == ErrorKind::InconsistentBranchData);
}

TEST_CASE("milnor-wood") {
  auto x = ProductOfCurves{2, 2}.model();
  auto r = milnor_wood_check(C({1, 0}), C({1, 1}), x, true);
  CHECK(r.toledo == 1);
  CHECK(r.bound == 2);
  CHECK(r.holds);
  r = milnor_wood_check(C({3, 0}), C({0, 1}), x, true);
  CHECK(r.toledo == 3);
  CHECK(r.bound == 1);
  CHECK_FALSE(r.holds);
  CHECK(milnor_wood_check(C({0, 0}), C({0, 1}), x, true).holds);
  CHECK(error_kind([&] { milnor_wood_check(C({0, 0}), C({0, 1}), x, false); }) == ErrorKind::NotApplicable);
}

TEST_CASE("rigidity") {
  CHECK(rigidity_verdict({true, 0, std::vector<unsigned>{0, 0, 0}, Integer(4)}).verdict == Rigidity::Rigid);
  CHECK(rigidity_verdict({true, 2, std::nullopt, std::nullopt}).verdict == Rigidity::NotRigid);
  CHECK(rigidity_verdict({false, 2, std::nullopt, std::nullopt}).verdict == Rigidity::NotRigid);
  CHECK(rigidity_verdict({false, 0, std::vector<unsigned>{}, std::nullopt}).verdict == Rigidity::Undecided);
  CHECK(rigidity_verdict({true, 0, std::vector<unsigned>{0, 2, 0}, std::nullopt}).verdict == Rigidity::NotRigid);
  CHECK(error_kind([] { rigidity_verdict({true, 0, std::vector<unsigned>{0}, Integer(4)}); }) ==
        ErrorKind::PreconditionViolated);
}

TEST_CASE("higher rank companion") {
  auto phi = higher_rank_build(2, {P("x")});
  CHECK(phi == M({{"0", "x"}, {"1", "0"}}));
  auto cp = charpoly_cofactor(phi);
  CHECK(cp == std::vector<Poly>{P("-x"), P("0"), P("1")});
  CHECK(higher_rank_charcheck(phi, {P("x")}));

  auto phi3 = higher_rank_build(3, {P("x"), P("y")});
  CHECK(charpoly_cofactor(phi3) == std::vector<Poly>{P("-y"), P("-x"), P("0"), P("1")});
  CHECK(higher_rank_charcheck(phi3, {P("x"), P("y")}));

  auto nil = higher_rank_build(5, {P("0"), P("0"), P("0"), P("0")});
  auto cpn = charpoly_cofactor(nil);
  for (std::size_t k = 0; k < 5; ++k) CHECK(cpn[k].is_zero());
  CHECK(cpn[5] == P("1"));

  CHECK(error_kind([] { higher_rank_build(6, std::vector<Poly>(5, P("1"))); }) == ErrorKind::RankCap);
  CHECK(error_kind([] { higher_rank_build(1, {}); }) == ErrorKind::RankCap);
  CHECK_FALSE(higher_rank_charcheck(phi3, {P("y"), P("x")}));
}
