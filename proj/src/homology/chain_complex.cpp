#include "octaflag/homology/chain_complex.hpp"

#include "octaflag/error.hpp"
#include "octaflag/flag/weyl.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/quaternion.hpp"

#include <sstream>

namespace octaflag {

namespace {

// Source and target ranks of a boundary matrix under the side convention.
std::pair<std::size_t, std::size_t> source_target(const GroupRingMatrix& m, Side side) {
  return side == Side::right_multiplication ? std::make_pair(m.rows(), m.cols())
                                            : std::make_pair(m.cols(), m.rows());
}

}  // namespace

ChainComplex::ChainComplex(std::string name, Side side, GroupRingMatrix d1, GroupRingMatrix d2,
                           GroupRingMatrix d3)
    : name_(std::move(name)), side_(side), d_{std::move(d1), std::move(d2), std::move(d3)} {
  for (int k = 1; k < 3; ++k) {
    if (d_[k].group_ptr() != d_[0].group_ptr()) throw DomainError("ChainComplex: mixed groups");
    if (source_target(d_[k - 1], side_).first != source_target(d_[k], side_).second) {
      throw DomainError("ChainComplex: boundary shapes do not compose");
    }
  }
}

const GroupRingMatrix& ChainComplex::boundary(int k) const {
  if (k < 1 || k > 3) throw DomainError("ChainComplex: boundary index must be 1..3");
  return d_[static_cast<std::size_t>(k - 1)];
}

std::array<std::size_t, 4> ChainComplex::ranks() const {
  std::array<std::size_t, 4> r{};
  r[0] = source_target(d_[0], side_).second;
  for (int k = 1; k <= 3; ++k) r[static_cast<std::size_t>(k)] = source_target(d_[k - 1], side_).first;
  return r;
}

namespace {

struct RingBuilder {
  GroupPtr group;

  GroupRingElement one() const { return GroupRingElement::integer(group, 1); }
  GroupRingElement g(std::size_t index) const { return GroupRingElement::basis(group, index); }

  GroupRingMatrix matrix(std::size_t rows, std::size_t cols,
                         std::vector<GroupRingElement> entries) const {
    return GroupRingMatrix(group, rows, cols, std::move(entries));
  }
};

}  // namespace

ChainComplex octahedral_complex() {
  const RingBuilder b{octahedral_group_table()};
  const auto& o = binary_octahedral_group();
  auto el = [&](const ExactQuat& q) { return b.g(o.require_index(q)); };
  using namespace elements;
  const auto ti = el(tau_i()), tj = el(tau_j()), tk = el(tau_k());
  const auto wi = el(omega_i()), wj = el(omega_j()), wk = el(omega_k());
  const auto one = b.one();
  return ChainComplex("K_O", Side::right_multiplication,
                      b.matrix(3, 1, {ti - one, tj - one, tk - one}),
                      b.matrix(3, 3, {wi, tk - one, one,
                                      one, wj, ti - one,
                                      tj - one, one, wk}),
                      b.matrix(1, 3, {one - ti, one - tj, one - tk}));
}

ChainComplex weyl_complex() {
  const RingBuilder b{weyl_group_table()};
  auto el = [&](const WeylElement& w) { return b.g(w.index()); };
  const auto sa = el(WeylElement::s_alpha()), sb = el(WeylElement::s_beta());
  const auto sasb = el(WeylElement::s_alpha() * WeylElement::s_beta());
  const auto w0 = el(WeylElement::w0());
  const auto one = b.one();
  return ChainComplex("K_S3", Side::left_multiplication,
                      b.matrix(1, 3, {one - sb, one - w0, one - sa}),
                      b.matrix(3, 3, {sasb, one, w0 - one,
                                      sa - one, sasb, one,
                                      one, sb - one, sasb}),
                      b.matrix(3, 1, {one - sb, one - w0, one - sa}));
}

Complexes build_complexes() { return {octahedral_complex(), weyl_complex()}; }

GroupRingMatrix compose_boundaries(const ChainComplex& c, int k) {
  if (k < 1 || k > 2) throw DomainError("compose_boundaries: k must be 1 or 2");
  const auto& lower = c.boundary(k);
  const auto& upper = c.boundary(k + 1);
  return c.side() == Side::right_multiplication ? upper * lower : lower * upper;
}

bool verify_dd_zero(const ChainComplex& c) {
  return compose_boundaries(c, 1).is_zero() && compose_boundaries(c, 2).is_zero();
}

IntMatrix expand_regular(const GroupRingMatrix& m, Side side) {
  const GroupTable& g = *m.group_ptr();
  const std::size_t n = g.size();
  const auto [src, tgt] = source_target(m, side);
  IntMatrix out(tgt * n, src * n);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const GroupRingElement& e = m(r, c);
      for (std::size_t h = 0; h < n; ++h) {
        const Integer& coeff = e.coefficient(h);
        if (coeff.is_zero()) continue;
        for (std::size_t x = 0; x < n; ++x) {
          if (side == Side::right_multiplication) {
            // x e_r -> sum_h m_h (x h) e_c
            out(c * n + g.multiply(x, h), r * n + x) += coeff;
          } else {
            // e_c x -> sum_h m_h e_r (h x)
            out(r * n + g.multiply(h, x), c * n + x) += coeff;
          }
        }
      }
    }
  }
  return out;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << '^' << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return first ? "0" : os.str();
}

void validate(const IntegerComplex& c) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const IntMatrix& d = c.d[k - 1];
    if (d.rows() != c.dims[k - 1] || d.cols() != c.dims[k]) {
      throw DomainError("IntegerComplex: d_" + std::to_string(k) + " has the wrong shape");
    }
  }
}

std::vector<AbelianGroup> homology(const IntegerComplex& c) {
  validate(c);
  for (std::size_t k = 1; k < 3; ++k) {
    if (!(c.d[k - 1] * c.d[k]).is_zero()) throw DomainError("not a chain complex: d o d is nonzero");
  }
  std::array<SmithForm, 5> snf;  // snf[k] for d_k, with d_0 = d_4 = 0
  for (std::size_t k = 1; k <= 3; ++k) snf[k] = smith_normal_form(c.d[k - 1]);
  std::vector<AbelianGroup> h(4);
  for (std::size_t k = 0; k <= 3; ++k) {
    const std::size_t out_rank = snf[k].rank();
    const std::size_t in_rank = k < 3 ? snf[k + 1].rank() : 0;
    if (out_rank + in_rank > c.dims[k]) throw DomainError("not a chain complex");
    h[k].rank = c.dims[k] - out_rank - in_rank;
    if (k < 3) {
      for (const auto& inv : snf[k + 1].invariants) {
        if (inv > 1) h[k].torsion.push_back(inv);
      }
    }
  }
  return h;
}

IntegerComplex expand_complex(const ChainComplex& c) {
  IntegerComplex out;
  const auto ranks = c.ranks();
  const std::size_t n = c.group_ptr()->size();
  for (std::size_t k = 0; k < 4; ++k) out.dims[k] = ranks[k] * n;
  for (int k = 1; k <= 3; ++k) out.d[static_cast<std::size_t>(k - 1)] = expand_regular(c.boundary(k), c.side());
  return out;
}

std::vector<AbelianGroup> homology(const ChainComplex& c) {
  if (!verify_dd_zero(c)) throw DomainError("not a chain complex: d o d is nonzero");
  return homology(expand_complex(c));
}

IntegerComplex tensor_trivial(const ChainComplex& c) {
  IntegerComplex out;
  out.dims = c.ranks();
  for (int k = 1; k <= 3; ++k) {
    const GroupRingMatrix& m = c.boundary(k);
    IntMatrix e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) e(r, col) = m(r, col).augmentation();
    }
    out.d[static_cast<std::size_t>(k - 1)] = c.side() == Side::right_multiplication ? e.transpose() : e;
  }
  return out;
}

long long euler_characteristic(const std::vector<AbelianGroup>& h) {
  long long chi = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h[k].rank);
  }
  return chi;
}

}  // namespace octaflag
