#ifndef HIGGS_FORMS_HPP
#define HIGGS_FORMS_HPP

#include <vector>

#include "higgs/matrix.hpp"
#include "higgs/poly.hpp"

namespace higgs {

// Chart 1-form: one polynomial coefficient per dz_i.
class OneForm {
 public:
  OneForm(std::size_t dim, std::size_t nvars);
  explicit OneForm(std::vector<Poly> entries);

  std::size_t dim() const { return entries_.size(); }
  std::size_t nvars() const { return nvars_; }
  const Poly& operator[](std::size_t i) const { return entries_[i]; }
  Poly& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Poly>& entries() const { return entries_; }

  bool is_zero() const;
  // Index of the first nonzero entry, or dim() if zero.
  std::size_t first_nonzero() const;

  OneForm operator*(const Poly& p) const;
  OneForm operator*(const Rational& c) const;
  friend OneForm operator+(const OneForm& a, const OneForm& b);
  Poly dot(const OneForm& rhs) const;

  bool operator==(const OneForm&) const = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Poly> entries_;
};

// Symmetric polynomial matrix of a quadratic form q(z) = z^T S z.
class SymDiff {
 public:
  SymDiff(std::size_t dim, std::size_t nvars);
  // Throws DimensionMismatch if m is not symmetric.
  explicit SymDiff(PolyMatrix m);

  // a * b^T + b * a^T, halved: symmetric product of two 1-forms.
  static SymDiff outer(const OneForm& a, const OneForm& b);
  static SymDiff outer(const OneForm& a) { return outer(a, a); }

  std::size_t dim() const { return m_.size(); }
  std::size_t nvars() const { return m_.nvars(); }
  const Poly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const PolyMatrix& matrix() const { return m_; }

  bool is_zero() const { return m_.is_zero(); }

  friend SymDiff operator+(const SymDiff& a, const SymDiff& b);
  friend SymDiff operator-(const SymDiff& a, const SymDiff& b);
  friend SymDiff operator*(const Poly& p, const SymDiff& s);
  friend SymDiff operator*(const Rational& c, const SymDiff& s);

  bool operator==(const SymDiff&) const = default;

 private:
  PolyMatrix m_;
};

}  // namespace higgs

#endif
