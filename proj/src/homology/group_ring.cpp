#include "octaflag/homology/group_ring.hpp"

#include "octaflag/error.hpp"
#include "octaflag/flag/weyl.hpp"
#include "octaflag/quat/finite_group.hpp"

#include <sstream>

namespace octaflag {

GroupTable::GroupTable(std::string name, std::vector<std::string> labels,
                       std::vector<std::size_t> mult)
    : name_(std::move(name)), labels_(std::move(labels)), mult_(std::move(mult)) {
  const std::size_t n = labels_.size();
  if (n == 0 || mult_.size() != n * n) throw DomainError("GroupTable: table size mismatch");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (multiply(0, a) != a || multiply(a, 0) != a) throw DomainError("GroupTable: index 0 is not the identity");
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = multiply(a, b);
      if (ab >= n || seen[ab]) throw DomainError("GroupTable: row is not a permutation");
      seen[ab] = true;
      if (ab == 0) inverse_[a] = b;
    }
  }
}

std::size_t GroupTable::index_of(std::string_view label) const {
  for (std::size_t a = 0; a < size(); ++a) {
    if (labels_[a] == label) return a;
  }
  throw DomainError("GroupTable: unknown element " + std::string(label));
}

namespace {

std::string octahedral_label(const ExactQuat& g) {
  using namespace elements;
  const std::pair<ExactQuat, const char*> named[] = {
      {one(), "1"},         {i(), "i"},           {j(), "j"},           {k(), "k"},
      {tau_i(), "tau_i"},   {tau_j(), "tau_j"},   {tau_k(), "tau_k"},   {omega_0(), "omega_0"},
      {omega_i(), "omega_i"}, {omega_j(), "omega_j"}, {omega_k(), "omega_k"}};
  for (const auto& [q, name] : named) {
    if (q == g) return name;
  }
  std::ostringstream os;
  os << 'q' << g;
  return os.str();
}

}  // namespace

GroupPtr octahedral_group_table() {
  static const GroupPtr table = [] {
    const auto& o = binary_octahedral_group();
    std::vector<std::string> labels;
    for (const auto& g : o.elements()) labels.push_back(octahedral_label(g));
    std::vector<std::size_t> mult(o.size() * o.size());
    for (std::size_t a = 0; a < o.size(); ++a) {
      for (std::size_t b = 0; b < o.size(); ++b) mult[a * o.size() + b] = o.multiply(a, b);
    }
    return std::make_shared<const GroupTable>("O", std::move(labels), std::move(mult));
  }();
  return table;
}

GroupPtr weyl_group_table() {
  static const GroupPtr table = [] {
    const auto& all = WeylElement::all();
    std::vector<std::string> labels;
    for (const auto& w : all) labels.push_back(w.name());
    std::vector<std::size_t> mult;
    for (const auto& a : all) {
      for (const auto& b : all) mult.push_back((a * b).index());
    }
    return std::make_shared<const GroupTable>("S3", std::move(labels), std::move(mult));
  }();
  return table;
}

GroupRingElement::GroupRingElement(GroupPtr group)
    : group_(std::move(group)), coeffs_(group_->size()) {}

GroupRingElement GroupRingElement::basis(GroupPtr group, std::size_t g, const Integer& c) {
  GroupRingElement e(std::move(group));
  e.add_term(g, c);
  return e;
}

GroupRingElement GroupRingElement::integer(GroupPtr group, const Integer& n) {
  return basis(std::move(group), 0, n);
}

void GroupRingElement::add_term(std::size_t g, const Integer& c) {
  if (g >= coeffs_.size()) throw DomainError("group ring: element index outside the group");
  coeffs_[g] += c;
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Integer GroupRingElement::augmentation() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

void GroupRingElement::require_same_group(const GroupRingElement& o) const {
  if (group_ != o.group_) throw DomainError("group ring: elements of different groups");
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement e(*this);
  for (auto& c : e.coeffs_) c = -c;
  return e;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  require_same_group(o);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] += o.coeffs_[g];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  require_same_group(o);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] -= o.coeffs_[g];
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.require_same_group(b);
  GroupRingElement out(a.group_);
  const std::size_t n = a.coeffs_.size();
  for (std::size_t g = 0; g < n; ++g) {
    if (a.coeffs_[g].is_zero()) continue;
    for (std::size_t h = 0; h < n; ++h) {
      if (b.coeffs_[h].is_zero()) continue;
      out.coeffs_[a.group_->multiply(g, h)] += a.coeffs_[g] * b.coeffs_[h];
    }
  }
  return out;
}

GroupRingElement operator*(const Integer& n, const GroupRingElement& a) {
  GroupRingElement out(a);
  for (auto& c : out.coeffs_) c *= n;
  return out;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return group_ == o.group_ && coeffs_ == o.coeffs_;
}

std::string GroupRingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t g = 0; g < coeffs_.size(); ++g) {
    const Integer& c = coeffs_[g];
    if (c.is_zero()) continue;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = g == 0;
    if (mag != 1 || unit) os << mag;
    if (!unit) os << group_->label(g);
    first = false;
  }
  return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupRingElement& e) { return os << e.to_string(); }

GroupRingMatrix::GroupRingMatrix(GroupPtr group, std::size_t rows, std::size_t cols)
    : group_(group), rows_(rows), cols_(cols), entries_(rows * cols, GroupRingElement(group)) {}

GroupRingMatrix::GroupRingMatrix(GroupPtr group, std::size_t rows, std::size_t cols,
                                 std::vector<GroupRingElement> entries)
    : group_(std::move(group)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DomainError("GroupRingMatrix: entry count mismatch");
  for (const auto& e : entries_) {
    if (e.group_ptr() != group_) throw DomainError("GroupRingMatrix: entry from another group");
  }
}

bool GroupRingMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool GroupRingMatrix::operator==(const GroupRingMatrix& o) const {
  return group_ == o.group_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.cols_ != b.rows_ || a.group_ != b.group_) throw DomainError("GroupRingMatrix: shape mismatch");
  GroupRingMatrix out(a.group_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      for (std::size_t k = 0; k < a.cols_; ++k) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

GroupRingMatrix reversed_product(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.cols() != b.rows() || a.group_ptr() != b.group_ptr()) {
    throw DomainError("GroupRingMatrix: shape mismatch");
  }
  GroupRingMatrix out(a.group_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += b(k, j) * a(i, k);
    }
  }
  return out;
}

}  // namespace octaflag
