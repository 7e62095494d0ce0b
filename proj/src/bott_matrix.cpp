#include "bott/bott_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace bott {

BottMatrix::BottMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw DomainError("tower height must be positive");
  if (n > 64) throw DomainError("tower height exceeds 64 generators");
}

BottMatrix BottMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  BottMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DomainError("associated matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (sgn(rows[i][j]) == 0) continue;
      if (i >= j) {
        throw DomainError("associated matrix must be strictly upper triangular; entry (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is nonzero");
      }
      m.entries_[i * m.n_ + j] = rows[i][j];
    }
  }
  return m;
}

BottMatrix BottMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (long v : rows[i]) q[i].emplace_back(v);
  }
  return from_rows(q);
}

void BottMatrix::set(std::size_t row, std::size_t col, Rational value) {
  if (row >= col || col >= n_) throw DomainError("BottMatrix::set outside the strict upper triangle");
  entries_[row * n_ + col] = std::move(value);
}

std::vector<Rational> BottMatrix::column(std::size_t col) const {
  std::vector<Rational> f(col);
  for (std::size_t i = 0; i < col; ++i) f[i] = (*this)(i, col);
  return f;
}

bool BottMatrix::column_is_zero(std::size_t col) const {
  for (std::size_t i = 0; i < col; ++i) {
    if (sgn((*this)(i, col)) != 0) return false;
  }
  return true;
}

std::size_t BottMatrix::nonzero_columns() const {
  std::size_t count = 0;
  for (std::size_t j = 0; j < n_; ++j) count += column_is_zero(j) ? 0 : 1;
  return count;
}

bool BottMatrix::is_zero() const { return nonzero_columns() == 0; }

BottMatrix BottMatrix::prefix(std::size_t m) const {
  if (m == 0 || m > n_) throw DomainError("prefix height out of range");
  BottMatrix p(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) p.entries_[i * m + j] = (*this)(i, j);
  }
  return p;
}

bool BottMatrix::entries_in(CoeffRing ring) const {
  return std::all_of(entries_.begin(), entries_.end(), [ring](const Rational& v) { return in_ring(v, ring); });
}

std::vector<std::vector<Rational>> BottMatrix::rows() const {
  std::vector<std::vector<Rational>> r(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
  }
  return r;
}

std::string BottMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) out << (j ? "," : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

bool operator<(const BottMatrix& a, const BottMatrix& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    const int c = cmp(a.entries_[k], b.entries_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace bott
