#include <doctest.h>

#include "higgs/moduli.hpp"
#include "higgs/random.hpp"
#include "higgs/selftest.hpp"
#include "higgs/spectral.hpp"
#include "test_util.hpp"

using namespace higgs;
using testing::error_kind;

namespace {

RankOneFactorization random_factorization(RandomSource& rng, int alpha_degree, int tau_degree) {
  return factor_rank_one(rng.nonconstant_poly(2, tau_degree, 3) * SymDiff::outer(rng.coprime_form(2, 2, alpha_degree)));
}

}  // namespace

TEST_CASE("selftest suites pass across seeds") {
  for (std::uint64_t seed : {1u, 7u, 2024u}) {
    for (const auto& r : run_selftest(seed)) {
      CAPTURE(seed);
      CAPTURE(r.name);
      CAPTURE(r.first_failure);
      CHECK(r.passed());
    }
  }
}

TEST_CASE("selftest is deterministic for a fixed seed") {
  auto a = run_selftest(99);
  auto b = run_selftest(99);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].cases == b[i].cases);
    CHECK(a[i].failures == b[i].failures);
  }
}

TEST_CASE("poly text and tree round trip") {
  RandomSource rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t nv = static_cast<std::size_t>(rng.uniform(1, 4));
    Poly p = rng.poly(nv, 5, 5) * rng.rational();
    CHECK(parse_poly(p.to_string(), nv) == p);
    CHECK(poly_from_json(to_json(p), nv, "p") == p);
    CHECK(to_json(poly_from_json(to_json(p), nv, "p")).dump() == to_json(p).dump());
  }
}

TEST_CASE("module_from_higgs rejects Cayley-Hamilton violations") {
  RandomSource rng(12);
  for (int i = 0; i < 50; ++i) {
    RankOneFactorization f = random_factorization(rng, 2, 2);
    PolyMatrix bad = canonical_module(build_cover(f)).eta_action();
    bad(0, 1) += Poly::constant(2, rng.nonzero_rational());
    std::vector<PolyMatrix> b;
    for (const auto& a : f.alpha.entries()) b.push_back(a * bad);
    HiggsField phi(std::move(b));
    CHECK(error_kind([&] { module_from_higgs(phi, f); }) == ErrorKind::CayleyHamiltonViolation);
  }
}

TEST_CASE("annihilator generators kill alpha") {
  RandomSource rng(13);
  for (int i = 0; i < 100; ++i) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(2, 4));
    OneForm alpha = rng.coprime_form(dim, 2, 2);
    auto gens = annihilator_distribution(alpha);
    CHECK(gens.size() == dim * (dim - 1) / 2);
    for (const auto& v : gens) CHECK(alpha.dot(v).is_zero());
  }
}

TEST_CASE("degree is bilinear and symmetric") {
  RandomSource rng(14);
  for (int i = 0; i < 100; ++i) {
    auto x = ProductOfCurves{static_cast<unsigned>(rng.uniform(0, 4)), static_cast<unsigned>(rng.uniform(0, 4))}.model();
    auto cls = [&] { return NSClass({rng.rational(), rng.rational()}); };
    NSClass a = cls(), b = cls(), c = cls();
    Rational t = rng.rational();
    CHECK(degree(a, b, x) == degree(b, a, x));
    CHECK(degree(a + t * c, b, x) == degree(a, b, x) + t * degree(c, b, x));
  }
}

TEST_CASE("bx components satisfy their kind invariants") {
  for (unsigned g1 = 0; g1 <= 5; ++g1)
    for (unsigned g2 = 0; g2 <= 5; ++g2) {
      for (const auto& c : bx_decomposition({g1, g2}).components) {
        CAPTURE(g1);
        CAPTURE(g2);
        CAPTURE(c.name);
        if (c.kind == BxKind::VType) CHECK(c.h0_Lsq == 1);
        if (c.kind == BxKind::LType) CHECK(c.h0_omega_twist == 1);
        if (c.kind == BxKind::Both) {
          CHECK(c.h0_Lsq == 1);
          CHECK(c.h0_omega_twist == 1);
          CHECK(c.dim == 1);
        }
      }
    }
}

TEST_CASE("cstar scaling preserves the base verdict") {
  RandomSource rng(15);
  for (int i = 0; i < 100; ++i) {
    OneForm s1(std::vector<Poly>{rng.poly(2, 2, 2), rng.poly(2, 2, 2)});
    SymDiff q = rng.coin() ? random_factorization(rng, 1, 2).expand()
                           : SymDiff::outer(OneForm(std::vector<Poly>{rng.poly(2, 1, 2), rng.poly(2, 1, 2)}),
                                            OneForm(std::vector<Poly>{rng.poly(2, 1, 2), rng.poly(2, 1, 2)}));
    SpectralDatum d(s1, Rational(1, 4) * SymDiff::outer(s1) + q);
    const Rational t = rng.nonzero_rational();
    CHECK(spectral_base_check(d).index() == spectral_base_check(cstar_scale(d, t)).index());
  }
}
