#ifndef HIGGS_MATRIX_HPP
#define HIGGS_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "higgs/poly.hpp"

namespace higgs {

// Square matrix of polynomials, r <= kMaxMatrixSize.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t size, std::size_t nvars);
  explicit PolyMatrix(std::vector<std::vector<Poly>> rows);

  static PolyMatrix identity(std::size_t size, std::size_t nvars);
  static PolyMatrix scalar(std::size_t size, const Poly& p);

  std::size_t size() const { return size_; }
  std::size_t nvars() const { return nvars_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;

  PolyMatrix& operator+=(const PolyMatrix& rhs);
  PolyMatrix& operator-=(const PolyMatrix& rhs);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& p, const PolyMatrix& m);
  friend PolyMatrix operator*(const Rational& c, const PolyMatrix& m);
  PolyMatrix operator-() const;

  bool operator==(const PolyMatrix&) const = default;

  std::vector<std::vector<Poly>> rows() const;
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Poly> entries_;
};

// Laplace expansion along the first row. Works over any commutative ring
// type with +, -, * and construction from a zero prototype.
template <class Ring>
Ring cofactor_det(const std::vector<std::vector<Ring>>& m, const Ring& zero) {
  const std::size_t n = m.size();
  if (n == 0) return zero;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Ring total = zero;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Ring>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Ring> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    Ring term = m[0][col] * cofactor_det(minor, zero);
    if (col % 2 == 0)
      total = total + term;
    else
      total = total - term;
  }
  return total;
}

Poly trace(const PolyMatrix& m);
Poly det(const PolyMatrix& m);
PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);
// Determinant of rows {r0, r1} and columns {c0, c1}.
Poly minor2(const PolyMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1);

// Coefficients of det(lambda*I - M) by Faddeev-LeVerrier; entry k is the
// coefficient of lambda^k, and the last entry is 1.
std::vector<Poly> charpoly(const PolyMatrix& m);

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point);
// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

}  // namespace higgs

#endif
