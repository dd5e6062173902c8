#include "octaflag/homology/int_matrix.hpp"

#include "octaflag/error.hpp"

#include <optional>
#include <utility>

namespace octaflag {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("IntMatrix: ragged initializer");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("IntMatrix: shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& f) {
  if (f.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += f * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& f) {
  if (f.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += f * (*this)(r, src);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

namespace {

// Smallest nonzero |a(r, c)| with r, c >= t.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t r = t; r < a.rows(); ++r) {
    for (std::size_t c = t; c < a.cols(); ++c) {
      const Integer& v = a(r, c);
      if (v.is_zero()) continue;
      const Integer m = abs(v);
      if (!best || m < best_abs) {
        best = {r, c};
        best_abs = m;
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  SmithForm out;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      const auto pivot = min_pivot(a, t);
      if (!pivot) return out;
      a.swap_rows(t, pivot->first);
      a.swap_cols(t, pivot->second);
      const Integer p = a(t, t);
      bool remainder = false;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t).is_zero()) continue;
        a.add_row(r, t, -(a(r, t) / p));
        remainder |= !a(r, t).is_zero();
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c).is_zero()) continue;
        a.add_col(c, t, -(a(t, c) / p));
        remainder |= !a(t, c).is_zero();
      }
      if (remainder) continue;  // a smaller entry appeared in row or column t
      // Row and column are clear; the pivot must divide the rest.
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < a.rows() && !bad_row; ++r) {
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (!Integer(a(r, c) % p).is_zero()) {
            bad_row = r;
            break;
          }
        }
      }
      if (!bad_row) break;
      a.add_row(t, *bad_row, 1);
    }
    out.invariants.push_back(abs(a(t, t)));
  }
  return out;
}

}  // namespace octaflag
