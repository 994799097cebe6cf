#include "higgs/matrix.hpp"

#include <sstream>

#include "higgs/error.hpp"

namespace higgs {

PolyMatrix::PolyMatrix(std::size_t size, std::size_t nvars)
    : size_(size), nvars_(nvars), entries_(size * size, Poly(nvars)) {
  if (size == 0) fail(ErrorKind::DimensionMismatch, "empty matrix");
  if (size > kMaxMatrixSize)
    fail(ErrorKind::CapExceeded, "matrix size " + std::to_string(size) + " exceeds " + std::to_string(kMaxMatrixSize));
}

PolyMatrix::PolyMatrix(std::vector<std::vector<Poly>> rows)
    : PolyMatrix(rows.size(), rows.empty() || rows[0].empty() ? 0 : rows[0][0].nvars()) {
  for (std::size_t i = 0; i < size_; ++i) {
    if (rows[i].size() != size_)
      fail(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                             " entries, expected " + std::to_string(size_));
    for (std::size_t j = 0; j < size_; ++j) {
      if (rows[i][j].nvars() != nvars_) fail(ErrorKind::DimensionMismatch, "matrix entries in different rings");
      (*this)(i, j) = std::move(rows[i][j]);
    }
  }
}

PolyMatrix PolyMatrix::identity(std::size_t size, std::size_t nvars) {
  return scalar(size, Poly::constant(nvars, 1));
}

PolyMatrix PolyMatrix::scalar(std::size_t size, const Poly& p) {
  PolyMatrix m(size, p.nvars());
  for (std::size_t i = 0; i < size; ++i) m(i, i) = p;
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

static void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size() || a.nvars() != b.nvars())
    fail(ErrorKind::DimensionMismatch, "matrix shapes differ");
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix r(a.size(), a.nvars());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      Poly sum(a.nvars());
      for (std::size_t k = 0; k < a.size(); ++k) sum += a(i, k) * b(k, j);
      r(i, j) = std::move(sum);
    }
  return r;
}

PolyMatrix operator*(const Poly& p, const PolyMatrix& m) {
  PolyMatrix r = m;
  for (auto& e : r.entries_) e = p * e;
  return r;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& m) {
  PolyMatrix r = m;
  for (auto& e : r.entries_) e *= c;
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

std::vector<std::vector<Poly>> PolyMatrix::rows() const {
  std::vector<std::vector<Poly>> out(size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) out[i].push_back((*this)(i, j));
  return out;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < size_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < size_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Poly trace(const PolyMatrix& m) {
  Poly t(m.nvars());
  for (std::size_t i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

Poly det(const PolyMatrix& m) { return cofactor_det(m.rows(), Poly(m.nvars())); }

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

Poly minor2(const PolyMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
}

std::vector<Poly> charpoly(const PolyMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Poly> coeffs(n + 1, Poly(a.nvars()));
  coeffs[n] = Poly::constant(a.nvars(), 1);
  PolyMatrix acc(n, a.nvars());
  for (std::size_t k = 1; k <= n; ++k) {
    acc = a * acc + PolyMatrix::scalar(n, coeffs[n - k + 1]);
    Poly t = trace(a * acc);
    t *= Rational(-1, static_cast<long>(k));
    coeffs[n - k] = std::move(t);
  }
  return coeffs;
}

RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  RationalMatrix out(m.size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j).evaluate(point);
  return out;
}

std::size_t rank(RationalMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace higgs
