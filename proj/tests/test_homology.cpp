#include "octaflag/error.hpp"
#include "octaflag/flag/weyl.hpp"
#include "octaflag/homology/chain_complex.hpp"
#include "octaflag/homology/group_ring.hpp"
#include "octaflag/homology/int_matrix.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/random.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace octaflag;

namespace {

// Fraction-free elimination.
std::size_t bareiss_rank(IntMatrix a) {
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, rank);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      for (std::size_t k = c + 1; k < a.cols(); ++k) {
        a(r, k) = (a(rank, c) * a(r, k) - a(r, c) * a(rank, k)) / prev;
      }
      a(r, c) = 0;
    }
    prev = a(rank, c);
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, long long p) {
  std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer v = m(r, c) % p;
      if (v < 0) v += p;
      a[r][c] = static_cast<long long>(v);
    }
  const auto inv = [p](long long x) {
    long long r = 1, e = p - 2;
    for (x %= p; e; e >>= 1, x = x * x % p)
      if (e & 1) r = r * x % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const long long f = inv(a[rank][c]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const long long g = a[r][c] * f % p;
      for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = ((a[r][k] - g * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    det += (c % 2 ? -1 : 1) * m(0, c) * determinant(minor);
  }
  return det;
}

// gcd of k x k minors, k = 1..min(rows, cols).
std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  std::vector<Integer> out;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    std::vector<bool> rs(m.rows()), cs(m.cols());
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        IntMatrix sub(k, k);
        for (std::size_t r = 0, i = 0; r < m.rows(); ++r) {
          if (!rs[r]) continue;
          for (std::size_t c = 0, j = 0; c < m.cols(); ++c)
            if (cs[c]) sub(i, j++) = m(r, c);
          ++i;
        }
        g = boost::multiprecision::gcd(g, determinant(sub));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    out.push_back(boost::multiprecision::abs(g));
  }
  return out;
}

IntMatrix random_matrix(CounterRng& rng, std::size_t rows, std::size_t cols, int range) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<long long>(rng.next_u64() % (2 * range + 1)) - range;
  return m;
}

}  // namespace

TEST(Smith, KnownDiagonal) {
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).invariants,
            (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}).invariants, (std::vector<Integer>{1, 1, 2}));
  EXPECT_TRUE(smith_normal_form(IntMatrix(3, 2)).invariants.empty());
}

TEST(Smith, MatchesDeterminantalDivisors) {
  CounterRng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = random_matrix(rng, 3 + trial % 2, 4, 6);
    const SmithForm snf = smith_normal_form(m);
    const auto d = determinantal_divisors(m);
    Integer prev = 1;
    std::vector<Integer> want;
    for (const Integer& dk : d) {
      if (dk == 0) break;
      want.push_back(dk / prev);
      prev = dk;
    }
    EXPECT_EQ(snf.invariants, want) << m;
  }
}

TEST(Smith, RankMatchesBareissAndModP) {
  CounterRng rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = random_matrix(rng, 8, 10, 3);
    // Force dependencies.
    for (std::size_t c = 0; c < 10; ++c) m(7, c) = m(0, c) * 2 - m(3, c);
    const SmithForm snf = smith_normal_form(m);
    EXPECT_EQ(snf.rank(), bareiss_rank(m));
    std::size_t torsion_at_p = 0;
    for (const Integer& s : snf.invariants) torsion_at_p += s % 101 == 0 ? 1 : 0;
    EXPECT_EQ(rank_mod_p(m, 101), snf.rank() - torsion_at_p);
  }
}

TEST(Smith, InvariantsDivideSuccessively) {
  CounterRng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inv = smith_normal_form(random_matrix(rng, 5, 5, 20)).invariants;
    for (std::size_t n = 0; n + 1 < inv.size(); ++n) {
      EXPECT_GT(inv[n], 0);
      EXPECT_EQ(inv[n + 1] % inv[n], 0);
    }
  }
}

TEST(GroupRing, ArithmeticAndPrinting) {
  const GroupPtr w = weyl_group_table();
  const auto sa = GroupRingElement::basis(w, w->index_of("s_a"));
  const auto one = GroupRingElement::integer(w, 1);
  EXPECT_EQ((one - sa) * (one + sa), GroupRingElement(w));
  EXPECT_EQ(sa * sa, one);
  EXPECT_EQ((sa - one).to_string(), "-1 + s_a");
  EXPECT_EQ((Integer(3) * sa).augmentation(), 3);
  EXPECT_THROW(w->index_of("nope"), DomainError);
  EXPECT_THROW(GroupRingElement(w) + GroupRingElement(octahedral_group_table()), DomainError);
}

TEST(GroupRing, WeylTableMatchesPermutations) {
  const GroupPtr w = weyl_group_table();
  const auto& all = WeylElement::all();
  for (std::size_t a = 0; a < 6; ++a) {
    EXPECT_EQ(w->label(a), all[a].name());
    for (std::size_t b = 0; b < 6; ++b) EXPECT_EQ(w->multiply(a, b), (all[a] * all[b]).index());
  }
}

TEST(GroupRing, TableValidation) {
  EXPECT_THROW(GroupTable("bad", {"1", "a"}, {0, 1, 1, 1}), DomainError);
  EXPECT_NO_THROW(GroupTable("z2", {"1", "a"}, {0, 1, 1, 0}));
}

TEST(Complexes, VerbatimEntries) {
  const ChainComplex o = octahedral_complex();
  const GroupPtr g = o.group_ptr();
  const auto one = GroupRingElement::integer(g, 1);
  const auto b = [&](const char* l) { return GroupRingElement::basis(g, g->index_of(l)); };
  EXPECT_EQ(o.boundary(2)(0, 0), b("omega_i"));
  EXPECT_EQ(o.boundary(2)(0, 1), b("tau_k") - one);
  EXPECT_EQ(o.boundary(3)(0, 2), one - b("tau_k"));
  const ChainComplex w = weyl_complex();
  EXPECT_EQ(w.boundary(1)(0, 1).to_string(), "1 - w0");
  EXPECT_EQ(w.side(), Side::left_multiplication);
  EXPECT_EQ(o.side(), Side::right_multiplication);
}

TEST(Complexes, ShapeMismatchRejected) {
  const ChainComplex o = octahedral_complex();
  EXPECT_THROW(ChainComplex("bad", Side::left_multiplication, o.boundary(1), o.boundary(2), o.boundary(3)),
               DomainError);
}

// Exactly one composition order vanishes for each complex.
TEST(Complexes, CompositionOrderIsDetectable) {
  const ChainComplex o = octahedral_complex();
  EXPECT_TRUE((o.boundary(2) * o.boundary(1)).is_zero());
  EXPECT_FALSE(reversed_product(o.boundary(2), o.boundary(1)).is_zero());
  const ChainComplex w = weyl_complex();
  EXPECT_TRUE((w.boundary(1) * w.boundary(2)).is_zero());
  EXPECT_FALSE(reversed_product(w.boundary(1), w.boundary(2)).is_zero());
}

TEST(Homology, ExpandedRanks) {
  const IntegerComplex o = expand_complex(octahedral_complex());
  EXPECT_EQ(o.dims, (std::array<std::size_t, 4>{48, 144, 144, 48}));
  const IntegerComplex w = expand_complex(weyl_complex());
  EXPECT_EQ(w.dims, (std::array<std::size_t, 4>{6, 18, 18, 6}));
}

TEST(Homology, Values) {
  const auto fmt = [](const std::vector<AbelianGroup>& h) {
    std::string s;
    for (const auto& g : h) s += g.to_string() + "|";
    return s;
  };
  EXPECT_EQ(fmt(homology(octahedral_complex())), "Z|0|0|Z|");
  EXPECT_EQ(fmt(homology(weyl_complex())), "Z|Z/2 + Z/2|0|Z|");
  EXPECT_EQ(fmt(homology(tensor_trivial(weyl_complex()))), "Z|Z/2|0|Z|");
  EXPECT_EQ(fmt(homology(tensor_trivial(octahedral_complex()))), "Z|Z/2|0|Z|");
}

TEST(Homology, SmallComplexByHand) {
  // Circle with one vertex and one edge, then RP^2: Z, Z/2, 0.
  IntegerComplex c;
  c.dims = {1, 1, 1, 0};
  c.d = {IntMatrix{{0}}, IntMatrix{{2}}, IntMatrix(1, 0)};
  const auto h = homology(c);
  EXPECT_EQ(h[0], (AbelianGroup{1, {}}));
  EXPECT_EQ(h[1], (AbelianGroup{0, {2}}));
  EXPECT_EQ(h[2], (AbelianGroup{0, {}}));
  EXPECT_EQ(euler_characteristic(h), 1);
  c.d[0] = IntMatrix{{1}};
  EXPECT_THROW(homology(c), DomainError);
}

TEST(Homology, AbelianGroupNames) {
  EXPECT_EQ((AbelianGroup{0, {}}).to_string(), "0");
  EXPECT_EQ((AbelianGroup{2, {3}}).to_string(), "Z^2 + Z/3");
}
