#include "higgs/forms.hpp"

#include "higgs/error.hpp"

namespace higgs {

OneForm::OneForm(std::size_t dim, std::size_t nvars) : nvars_(nvars), entries_(dim, Poly(nvars)) {
  if (dim == 0) fail(ErrorKind::DimensionMismatch, "1-form of dimension 0");
  if (dim > kMaxVars) fail(ErrorKind::CapExceeded, "chart dimension " + std::to_string(dim) + " exceeds " + std::to_string(kMaxVars));
}

OneForm::OneForm(std::vector<Poly> entries)
    : OneForm(entries.size(), entries.empty() ? 0 : entries[0].nvars()) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].nvars() != nvars_) fail(ErrorKind::DimensionMismatch, "1-form entries in different rings");
    entries_[i] = std::move(entries[i]);
  }
}

bool OneForm::is_zero() const { return first_nonzero() == dim(); }

std::size_t OneForm::first_nonzero() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!entries_[i].is_zero()) return i;
  return entries_.size();
}

OneForm OneForm::operator*(const Poly& p) const {
  OneForm r = *this;
  for (auto& e : r.entries_) e = p * e;
  return r;
}

OneForm OneForm::operator*(const Rational& c) const {
  OneForm r = *this;
  for (auto& e : r.entries_) e *= c;
  return r;
}

OneForm operator+(const OneForm& a, const OneForm& b) {
  if (a.dim() != b.dim() || a.nvars() != b.nvars()) fail(ErrorKind::DimensionMismatch, "1-form shapes differ");
  OneForm r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] += b[i];
  return r;
}

Poly OneForm::dot(const OneForm& rhs) const {
  if (dim() != rhs.dim() || nvars_ != rhs.nvars_) fail(ErrorKind::DimensionMismatch, "1-form shapes differ");
  Poly sum(nvars_);
  for (std::size_t i = 0; i < dim(); ++i) sum += entries_[i] * rhs.entries_[i];
  return sum;
}

SymDiff::SymDiff(std::size_t dim, std::size_t nvars) : m_(dim, nvars) {
  if (dim > kMaxVars) fail(ErrorKind::CapExceeded, "chart dimension " + std::to_string(dim) + " exceeds " + std::to_string(kMaxVars));
}

SymDiff::SymDiff(PolyMatrix m) : m_(std::move(m)) {
  if (m_.size() > kMaxVars)
    fail(ErrorKind::CapExceeded, "chart dimension " + std::to_string(m_.size()) + " exceeds " + std::to_string(kMaxVars));
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = i + 1; j < m_.size(); ++j)
      if (m_(i, j) != m_(j, i))
        fail(ErrorKind::DimensionMismatch, "S[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                                               m_(i, j).to_string() + " differs from S[" + std::to_string(j) +
                                               "][" + std::to_string(i) + "] = " + m_(j, i).to_string());
}

SymDiff SymDiff::outer(const OneForm& a, const OneForm& b) {
  if (a.dim() != b.dim() || a.nvars() != b.nvars()) fail(ErrorKind::DimensionMismatch, "1-form shapes differ");
  PolyMatrix m(a.dim(), a.nvars());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = Rational(1, 2) * (a[i] * b[j] + b[i] * a[j]);
  return SymDiff(std::move(m));
}

SymDiff operator+(const SymDiff& a, const SymDiff& b) { return SymDiff(a.m_ + b.m_); }
SymDiff operator-(const SymDiff& a, const SymDiff& b) { return SymDiff(a.m_ - b.m_); }
SymDiff operator*(const Poly& p, const SymDiff& s) { return SymDiff(p * s.m_); }
SymDiff operator*(const Rational& c, const SymDiff& s) { return SymDiff(c * s.m_); }

}  // namespace higgs
