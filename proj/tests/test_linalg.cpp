#include "lpcoh/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lpcoh/errors.hpp"
#include "lpcoh/rational.hpp"

using namespace lpcoh;

namespace {

// ---- independent rank oracle ----------------------------------------------
// Determinant by cofactor expansion and rank as the size of the largest
// nonsingular square minor. Exponential, used only on tiny matrices; kept
// deliberately independent of the elimination engine under test.

Rational det_cofactor(const MatQ& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  MatQ sub(n - 1, n - 1);
  for (Index k = 0; k < n; ++k) {
    if (m(0, k) == 0) continue;
    for (Index r = 1; r < n; ++r) {
      Index cc = 0;
      for (Index c = 0; c < n; ++c) {
        if (c == k) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    Rational term = m(0, k) * det_cofactor(sub);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

void choose_next(std::vector<std::vector<Index>>& out, std::vector<Index>& cur, Index from,
                 Index n, Index k) {
  if (static_cast<Index>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (Index i = from; i < n; ++i) {
    cur.push_back(i);
    choose_next(out, cur, i + 1, n, k);
    cur.pop_back();
  }
}

std::vector<std::vector<Index>> subsets(Index n, Index k) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur;
  choose_next(out, cur, 0, n, k);
  return out;
}

Index rank_by_minors(const MatQ& m) {
  for (Index k = std::min(m.rows(), m.cols()); k >= 1; --k) {
    for (const auto& rs : subsets(m.rows(), k)) {
      for (const auto& cs : subsets(m.cols(), k)) {
        MatQ minor(k, k);
        for (Index r = 0; r < k; ++r)
          for (Index c = 0; c < k; ++c) minor(r, c) = m(rs[r], cs[c]);
        if (det_cofactor(minor) != 0) return k;
      }
    }
  }
  return 0;
}

MatQ random_int_matrix(std::mt19937_64& rng, Index rows, Index cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  MatQ m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("rref of the identity is the identity", "[linalg]") {
  MatQ id = MatQ::Identity(3, 3);
  auto [r, pivots] = rref(id);
  REQUIRE(r == id);
  REQUIRE(pivots == std::vector<Index>{0, 1, 2});
}

TEST_CASE("rref of a zero matrix is itself with no pivots", "[linalg]") {
  MatQ z = MatQ::Zero(2, 4);
  auto [r, pivots] = rref(z);
  REQUIRE(r == z);
  REQUIRE(pivots.empty());
}

TEST_CASE("rank agrees with the determinant-of-minors oracle", "[linalg]") {
  std::mt19937_64 rng(20240517);
  for (int trial = 0; trial < 12; ++trial) {
    MatQ m = random_int_matrix(rng, 5, 5, -3, 3);
    Index expected = rank_by_minors(m);
    auto [r, pivots] = rref(m);
    REQUIRE(static_cast<Index>(pivots.size()) == expected);
    REQUIRE(rank(m) == expected);
  }
}

TEST_CASE("rref is idempotent", "[linalg]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    MatQ m = random_int_matrix(rng, 4, 6, -4, 4);
    MatQ once = rref(m).matrix;
    REQUIRE(rref(once).matrix == once);
  }
}

TEST_CASE("kernel of the identity is empty", "[linalg]") {
  REQUIRE(kernel_basis(MatQ::Identity(4, 4)).dim() == 0);
}

TEST_CASE("kernel of the zero map is the full space", "[linalg]") {
  Subspace k = kernel_basis(MatQ::Zero(3, 3));
  REQUIRE(k.dim() == 3);
  REQUIRE(k.basis() == MatQ::Identity(3, 3));
}

TEST_CASE("kernel of a rank-one row", "[linalg]") {
  MatQ m(1, 2);
  m << 1, 1;
  Subspace k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  REQUIRE((m * k.basis()).isZero(0));
}

TEST_CASE("rank plus nullity is the column count", "[linalg]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    MatQ m = random_int_matrix(rng, 4, 7, -3, 3);
    Subspace k = kernel_basis(m);
    REQUIRE(rank(m) + k.dim() == m.cols());
    REQUIRE((m * k.basis()).isZero(0));
  }
}

TEST_CASE("image basis of identity and zero maps", "[linalg]") {
  REQUIRE(image_basis(MatQ::Identity(3, 3)).basis() == MatQ::Identity(3, 3));
  REQUIRE(image_basis(MatQ::Zero(3, 2)).dim() == 0);
}

TEST_CASE("image dimension equals the pivot count", "[linalg]") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 10; ++trial) {
    MatQ m = random_int_matrix(rng, 5, 4, -2, 2);
    Subspace im = image_basis(m);
    REQUIRE(im.dim() == static_cast<Index>(rref(m).pivots.size()));
    for (Index c = 0; c < m.cols(); ++c) REQUIRE(contains(im, VecQ(m.col(c))));
  }
}

TEST_CASE("quotient of a space by itself is zero", "[linalg]") {
  MatQ b(3, 2);
  b << 1, 0, 0, 1, 2, -1;
  Subspace s(3, b);
  REQUIRE(quotient_dim(s, s) == 0);
}

TEST_CASE("quotient by the zero subspace is the full dimension", "[linalg]") {
  Subspace zero = Subspace::trusted(3, MatQ(3, 0));
  Subspace full(3, MatQ::Identity(3, 3));
  REQUIRE(quotient_dim(zero, full) == 3);
}

TEST_CASE("quotient detects a non-subspace", "[linalg]") {
  MatQ inside(3, 1), outside(3, 1);
  inside << 1, 0, 0;
  outside << 0, 0, 1;
  Subspace sub(3, outside);
  Subspace super(3, inside);
  REQUIRE_THROWS_AS(quotient_dim(sub, super), InvariantError);
}

TEST_CASE("exact three-term sequence has zero middle cohomology", "[linalg]") {
  // Random surjection d1 : Q^5 -> Q^2, then d0 = inclusion of ker(d1).
  std::mt19937_64 rng(4242);
  MatQ d1;
  do {
    d1 = random_int_matrix(rng, 2, 5, -3, 3);
  } while (rank(d1) != 2);
  Subspace ker = kernel_basis(d1);
  MatQ d0 = ker.basis();  // Q^3 -> Q^5
  REQUIRE((d1 * d0).isZero(0));
  REQUIRE(quotient_dim(image_basis(d0), kernel_basis(d1)) == 0);
}

TEST_CASE("solve returns b for the identity", "[linalg]") {
  VecQ b(3);
  b << Rational(1, 2), -3, Rational(7, 5);
  auto x = solve(MatQ::Identity(3, 3), b);
  REQUIRE(x.has_value());
  REQUIRE(*x == b);
}

TEST_CASE("solve reports inconsistency for the zero matrix", "[linalg]") {
  VecQ b(2);
  b << 1, 0;
  REQUIRE_FALSE(solve(MatQ::Zero(2, 3), b).has_value());
}

TEST_CASE("solve has exactly zero residual on consistent systems", "[linalg]") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    MatQ m = random_int_matrix(rng, 4, 6, -3, 3);
    VecQ x0 = random_int_matrix(rng, 6, 1, -5, 5).col(0);
    VecQ b = m * x0;
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    REQUIRE(m * *x == b);
  }
}

TEST_CASE("rational arithmetic is exact and canonical", "[linalg]") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 20);
  for (int trial = 0; trial < 50; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a + b) * c == a * c + b * c);
    Rational s = a + b;
    REQUIRE(gcd(numerator(s), denominator(s)) == 1);
    REQUIRE(denominator(s) > 0);
  }
}

TEST_CASE("sparse and dense faces agree", "[linalg]") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 6; ++trial) {
    MatQ m = random_int_matrix(rng, 6, 8, -2, 2);
    SpMatQ s = m.sparseView();
    REQUIRE(rank(s) == rank(m));
    REQUIRE(kernel_basis(s).basis() == kernel_basis(m).basis());
    VecQ x0 = random_int_matrix(rng, 8, 1, -3, 3).col(0);
    VecQ b = m * x0;
    auto xs = solve(s, b);
    REQUIRE(xs.has_value());
    REQUIRE(*xs == *solve(m, b));
  }
}

TEST_CASE("same_subspace compares by double inclusion", "[linalg]") {
  MatQ b1(3, 2), b2(3, 2);
  b1 << 1, 0, 0, 1, 0, 0;
  b2 << 1, 1, 1, -1, 0, 0;
  REQUIRE(same_subspace(Subspace(3, b1), Subspace(3, b2)));
  MatQ b3(3, 2);
  b3 << 1, 0, 0, 0, 0, 1;
  REQUIRE_FALSE(same_subspace(Subspace(3, b1), Subspace(3, b3)));
}

TEST_CASE("rational parsing canonicalizes and rejects junk", "[linalg]") {
  REQUIRE(parse_rational("-7/21") == Rational(-1, 3));
  REQUIRE(parse_rational("4/2") == 2);
  REQUIRE(format_rational(parse_rational("-7/21")) == "-1/3");
  REQUIRE(format_rational(Rational(5)) == "5");
  REQUIRE_THROWS_AS(parse_rational("1/0"), ParseError);
  REQUIRE_THROWS_AS(parse_rational("a/b"), ParseError);
  REQUIRE_THROWS_AS(parse_rational(""), ParseError);
  REQUIRE_THROWS_AS(parse_rational("1.5"), ParseError);
}
