#ifndef HIGGS_RANDOM_HPP
#define HIGGS_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "higgs/forms.hpp"
#include "higgs/geometry.hpp"
#include "higgs/matrix.hpp"
#include "higgs/poly.hpp"

namespace higgs {

// Deterministic generators of small exact objects. Only the raw engine
// output is used, so a seed reproduces the same stream on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational(long num_range = 5, long den_max = 3) {
    Rational q(Integer(uniform(-num_range, num_range)), Integer(uniform(1, den_max)));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(long num_range = 5, long den_max = 3) {
    Rational q;
    do q = rational(num_range, den_max);
    while (q == 0);
    return q;
  }

  Poly poly(std::size_t nvars, int max_degree, int max_terms, long coeff_range = 5) {
    std::vector<std::pair<Monomial, Rational>> terms;
    const int count = static_cast<int>(uniform(1, max_terms));
    for (int t = 0; t < count; ++t) {
      Monomial m;
      int budget = static_cast<int>(uniform(0, max_degree));
      for (std::size_t i = 0; i < nvars && budget > 0; ++i) {
        const auto e = static_cast<unsigned>(uniform(0, budget));
        m.set(i, e);
        budget -= static_cast<int>(e);
      }
      Rational c(Integer(uniform(-coeff_range, coeff_range)));
      terms.emplace_back(m, c);
    }
    return Poly::from_terms(nvars, terms);
  }

  Poly nonzero_poly(std::size_t nvars, int max_degree, int max_terms, long coeff_range = 5) {
    Poly p(nvars);
    do p = poly(nvars, max_degree, max_terms, coeff_range);
    while (p.is_zero());
    return p;
  }

  Poly nonconstant_poly(std::size_t nvars, int max_degree, int max_terms, long coeff_range = 5) {
    Poly p(nvars);
    do p = poly(nvars, max_degree, max_terms, coeff_range);
    while (p.is_constant());
    return p;
  }

  // Entries with gcd 1: one pair (p, q p + c) with c a nonzero constant,
  // placed at random positions, other entries arbitrary.
  OneForm coprime_form(std::size_t dim, std::size_t nvars, int max_degree) {
    std::vector<Poly> e(dim, Poly(nvars));
    for (auto& p : e) p = poly(nvars, max_degree, 3);
    Poly p = nonconstant_poly(nvars, max_degree, 3);
    if (dim == 1) {
      e[0] = Poly::constant(nvars, nonzero_rational());
      return OneForm(std::move(e));
    }
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(dim) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(dim) - 2));
    if (j >= i) ++j;
    e[i] = p;
    e[j] = poly(nvars, 1, 2) * p + Poly::constant(nvars, nonzero_rational());
    return OneForm(std::move(e));
  }

  PolyMatrix invertible_constant(std::size_t nvars) {
    while (true) {
      PolyMatrix g(2, nvars);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) g(i, j) = Poly::constant(nvars, rational(4, 2));
      if (!det(g).is_zero()) return g;
    }
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Inverse of a 2x2 matrix with constant nonzero determinant.
inline PolyMatrix inverse_constant_2x2(const PolyMatrix& g) {
  const Rational d = det(g).constant_term();
  PolyMatrix adj(2, g.nvars());
  adj(0, 0) = g(1, 1);
  adj(0, 1) = -g(0, 1);
  adj(1, 0) = -g(1, 0);
  adj(1, 1) = g(0, 0);
  return Rational(1 / d) * adj;
}

}  // namespace higgs

#endif
