#pragma once

#include <span>
#include <vector>

#include "lpcoh/rational.hpp"

namespace lpcoh {

// A finite-dimensional unital associative algebra given by structure
// constants in a fixed ordered basis. mult[i] is the matrix of left
// multiplication by e_i, so e_i e_j = sum_k mult[i](k, j) e_k and the raw
// tensor is c(i, j, k) = mult[i](k, j).
struct AssocAlgebra {
  Index dim = 0;
  std::vector<MatQ> mult;
  VecQ unit;

  const Rational& c(Index i, Index j, Index k) const { return mult[i](k, j); }
  // Matrix of left multiplication by the element with coefficients `a`.
  MatQ left_mult(const VecQ& a) const;
  // Matrix of right multiplication by e_j.
  MatQ right_mult_basis(Index j) const;
  VecQ multiply(const VecQ& a, const VecQ& b) const;

  bool operator==(const AssocAlgebra&) const = default;
};

// bracket[i] is the matrix of ad e_i: [e_i, e_j] = sum_k bracket[i](k, j) e_k.
struct LieAlgebra {
  Index dim = 0;
  std::vector<MatQ> bracket;

  VecQ bracket_of(Index i, Index j) const { return bracket[i].col(j); }

  bool operator==(const LieAlgebra&) const = default;
};

// The structure map of a Leibniz pair: one derivation matrix per Lie basis
// element.
struct LieAction {
  std::vector<MatQ> maps;

  bool operator==(const LieAction&) const = default;
};

// A validated (A, L, mu) triple. Construction goes through validate_pair,
// which checks every axiom exhaustively over basis tuples, so a LeibnizPair
// value always satisfies them. Immutable and freely shareable.
class LeibnizPair {
 public:
  const AssocAlgebra& algebra() const { return a_; }
  const LieAlgebra& lie() const { return l_; }
  const LieAction& action() const { return mu_; }
  Index a_dim() const { return a_.dim; }
  Index l_dim() const { return l_.dim; }

  bool operator==(const LeibnizPair&) const = default;

 private:
  friend LeibnizPair validate_pair(AssocAlgebra a, LieAlgebra l, LieAction mu);
  LeibnizPair(AssocAlgebra a, LieAlgebra l, LieAction mu)
      : a_(std::move(a)), l_(std::move(l)), mu_(std::move(mu)) {}

  AssocAlgebra a_;
  LieAlgebra l_;
  LieAction mu_;
};

// Checks, over all basis tuples: associativity and the two-sided unit of A,
// antisymmetry and the Jacobi identity of L, that every mu(x) is a derivation
// of A, and that mu is a Lie algebra homomorphism. Throws AxiomError with one
// of the identifiers not_associative / no_unit / not_antisymmetric /
// jacobi_fails / not_derivation / not_lie_hom, carrying the failing tuple.
LeibnizPair validate_pair(AssocAlgebra a, LieAlgebra l, LieAction mu);

// Row-major lexicographic enumeration of a tensor-product basis: the first
// factor varies slowest. The empty factor list has dimension 1.
class TensorBasis {
 public:
  explicit TensorBasis(std::vector<Index> factor_dims);
  static TensorBasis power(Index dim, Index exponent);

  Index dim() const { return dim_; }
  Index factors() const { return static_cast<Index>(factor_dims_.size()); }
  const std::vector<Index>& factor_dims() const { return factor_dims_; }

  Index flat(std::span<const Index> multi) const;
  std::vector<Index> multi(Index flat) const;

 private:
  std::vector<Index> factor_dims_;
  Index dim_ = 1;
};

// Strictly increasing degree-j tuples in {0, ..., n-1}, ordered
// lexicographically. count() = C(n, j).
class ExteriorBasis {
 public:
  ExteriorBasis(Index n, Index degree);

  Index n() const { return n_; }
  Index degree() const { return degree_; }
  Index count() const { return static_cast<Index>(tuples_.size()); }
  const std::vector<Index>& tuple(Index t) const { return tuples_[static_cast<size_t>(t)]; }
  Index index_of(std::span<const Index> sorted_tuple) const;

 private:
  Index n_ = 0;
  Index degree_ = 0;
  std::vector<std::vector<Index>> tuples_;
};

// sign = 0 when the tuple has a repeated entry; otherwise the parity of the
// sorting permutation, with `index` the position of the sorted tuple.
struct WedgeNormalized {
  Index index = -1;
  int sign = 0;
};

WedgeNormalized wedge_normalize(const ExteriorBasis& basis, std::vector<Index> tuple);

Index binomial(Index n, Index k);

// Matrix of sum_p (id x ... x mu(x) x ... x id) on A^{tensor i}, i >= 1.
SpMatQ act_on_tensor_matrix(const LeibnizPair& pair, Index x, Index tensor_power);

VecQ act_on_tensor(const LeibnizPair& pair, Index x, Index tensor_power, const VecQ& t);

}  // namespace lpcoh
