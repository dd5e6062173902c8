#pragma once

#include "octaflag/homology/group_ring.hpp"
#include "octaflag/homology/int_matrix.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace octaflag {

/// How a boundary matrix acts on chains.
enum class Side {
  /// Left modules, chains are row vectors, d(x) = x M; d_k is rank C_k x rank C_{k-1}.
  right_multiplication,
  /// Right modules, chains are column vectors, d(x) = M x; d_k is rank C_{k-1} x rank C_k.
  left_multiplication,
};

/// Length-3 complex C_3 -> C_2 -> C_1 -> C_0 of free Z[G]-modules.
class ChainComplex {
 public:
  /// Throws DomainError if the shapes do not compose under the side convention.
  ChainComplex(std::string name, Side side, GroupRingMatrix d1, GroupRingMatrix d2, GroupRingMatrix d3);

  const std::string& name() const { return name_; }
  Side side() const { return side_; }
  const GroupPtr& group_ptr() const { return d_[0].group_ptr(); }
  /// d_k for k = 1, 2, 3.
  const GroupRingMatrix& boundary(int k) const;
  /// Free ranks of C_0 .. C_3.
  std::array<std::size_t, 4> ranks() const;

 private:
  std::string name_;
  Side side_;
  std::array<GroupRingMatrix, 3> d_;
};

/// K_O over Z[O] (right multiplication):
///   d1 = (ti-1, tj-1, tk-1)^T,
///   d2 = [[wi, tk-1, 1], [1, wj, ti-1], [tj-1, 1, wk]],
///   d3 = (1-ti, 1-tj, 1-tk).
ChainComplex octahedral_complex();
/// K_S3 over Z[S3] (left multiplication):
///   d1 = (1-s_b, 1-w0, 1-s_a),
///   d2 = [[s_a s_b, 1, w0-1], [s_a-1, s_a s_b, 1], [1, s_b-1, s_a s_b]],
///   d3 = (1-s_b, 1-w0, 1-s_a)^T.
ChainComplex weyl_complex();

struct Complexes {
  ChainComplex octahedral;
  ChainComplex weyl;
};
Complexes build_complexes();

/// d_{k} d_{k+1} composed in the order dictated by the side: x d_{k+1} d_k
/// for right multiplication, d_k d_{k+1} x for left multiplication.
GroupRingMatrix compose_boundaries(const ChainComplex& c, int k);
/// Both compositions vanish.
bool verify_dd_zero(const ChainComplex& c);

/// Integer matrix, acting on column vectors of Z-coordinates, of x -> x M
/// (right multiplication) or x -> M x (left multiplication) on free modules
/// with Z-basis (block, group element), ordered block-major.
IntMatrix expand_regular(const GroupRingMatrix& m, Side side);

struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

  bool operator==(const AbelianGroup&) const = default;
  /// "Z", "0", "Z/2 + Z/2", "Z^2 + Z/3", ...
  std::string to_string() const;
};

/// Integer complex with d_k : Z^{dims[k]} -> Z^{dims[k-1]} acting on columns.
struct IntegerComplex {
  std::array<std::size_t, 4> dims{};
  std::array<IntMatrix, 3> d;  // d[k-1] = d_k
};

/// Throws DomainError if a matrix has the wrong shape.
void validate(const IntegerComplex& c);
std::vector<AbelianGroup> homology(const IntegerComplex& c);

/// Regular expansion of every boundary.
IntegerComplex expand_complex(const ChainComplex& c);
/// Homology of the underlying free abelian complex; throws DomainError
/// ("not a chain complex") unless verify_dd_zero holds.
std::vector<AbelianGroup> homology(const ChainComplex& c);

/// Entrywise augmentation: the complex Z (x)_{Z[G]} C of the quotient space.
IntegerComplex tensor_trivial(const ChainComplex& c);

/// Alternating sum of ranks.
long long euler_characteristic(const std::vector<AbelianGroup>& h);

}  // namespace octaflag
