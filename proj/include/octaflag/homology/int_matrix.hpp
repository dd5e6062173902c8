#pragma once

#include "octaflag/homology/group_ring.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace octaflag {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;
  /// Throws DomainError on a shape mismatch.
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f);
  /// col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& f);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Nonzero diagonal of the Smith normal form: positive, each dividing the next.
struct SmithForm {
  std::vector<Integer> invariants;
  std::size_t rank() const { return invariants.size(); }
};

/// Pivot-and-reduce with the smallest nonzero entry (in absolute value) as pivot.
SmithForm smith_normal_form(IntMatrix a);

}  // namespace octaflag
