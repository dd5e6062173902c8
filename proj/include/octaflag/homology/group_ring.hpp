#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace octaflag {

using Integer = boost::multiprecision::cpp_int;

/// Multiplication table of a finite group with the identity at index 0.
class GroupTable {
 public:
  /// mult[a * n + b] = index of a b. Throws DomainError unless the table is a
  /// group table with identity 0.
  GroupTable(std::string name, std::vector<std::string> labels, std::vector<std::size_t> mult);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return mult_[a * size() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /// Throws DomainError for an unknown label.
  std::size_t index_of(std::string_view label) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> inverse_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// The binary octahedral group in the order of binary_octahedral_group();
/// labels are the exact quaternions.
GroupPtr octahedral_group_table();
/// S3 in WeylElement::all() order with labels 1, s_a, s_b, s_a s_b, s_b s_a, w0.
GroupPtr weyl_group_table();

/// Element of Z[G] as a dense coefficient vector.
class GroupRingElement {
 public:
  explicit GroupRingElement(GroupPtr group);

  /// c g
  static GroupRingElement basis(GroupPtr group, std::size_t g, const Integer& c = 1);
  /// n 1
  static GroupRingElement integer(GroupPtr group, const Integer& n);

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Integer& coefficient(std::size_t g) const { return coeffs_.at(g); }
  void add_term(std::size_t g, const Integer& c);

  bool is_zero() const;
  /// Sum of coefficients; a ring map Z[G] -> Z.
  Integer augmentation() const;

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const Integer& n, const GroupRingElement& a);
  bool operator==(const GroupRingElement& o) const;

  /// Terms in index order, e.g. "s_a s_b - 1"; "0" for zero.
  std::string to_string() const;

 private:
  void require_same_group(const GroupRingElement& o) const;

  GroupPtr group_;
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const GroupRingElement& e);

/// Dense matrix over Z[G].
class GroupRingMatrix {
 public:
  GroupRingMatrix(GroupPtr group, std::size_t rows, std::size_t cols);
  GroupRingMatrix(GroupPtr group, std::size_t rows, std::size_t cols,
                  std::vector<GroupRingElement> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const GroupPtr& group_ptr() const { return group_; }
  const GroupRingElement& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  GroupRingElement& operator()(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }

  bool is_zero() const;
  bool operator==(const GroupRingMatrix& o) const;

  /// Ordinary product (A B)_{ij} = sum_k A_ik B_kj. Throws DomainError on a
  /// shape mismatch.
  friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b);

 private:
  GroupPtr group_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GroupRingElement> entries_;
};

/// Product with the ring multiplications reversed: sum_k B_kj A_ik.
GroupRingMatrix reversed_product(const GroupRingMatrix& a, const GroupRingMatrix& b);

}  // namespace octaflag
