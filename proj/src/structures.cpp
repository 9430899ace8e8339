#include "lpcoh/structures.hpp"

#include <algorithm>

#include "lpcoh/errors.hpp"

namespace lpcoh {

MatQ AssocAlgebra::left_mult(const VecQ& a) const {
  MatQ out = MatQ::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i)
    if (a(i) != 0) out += a(i) * mult[i];
  return out;
}

MatQ AssocAlgebra::right_mult_basis(Index j) const {
  MatQ out(dim, dim);
  for (Index i = 0; i < dim; ++i) out.col(i) = mult[i].col(j);
  return out;
}

VecQ AssocAlgebra::multiply(const VecQ& a, const VecQ& b) const {
  return left_mult(a) * b;
}

namespace {

void check_shapes(const AssocAlgebra& a, const LieAlgebra& l, const LieAction& mu) {
  if (static_cast<Index>(a.mult.size()) != a.dim || a.unit.size() != a.dim)
    throw std::invalid_argument("algebra: structure data does not match dim");
  for (const MatQ& m : a.mult)
    if (m.rows() != a.dim || m.cols() != a.dim)
      throw std::invalid_argument("algebra: multiplication table shape mismatch");
  if (static_cast<Index>(l.bracket.size()) != l.dim)
    throw std::invalid_argument("lie algebra: bracket table does not match dim");
  for (const MatQ& m : l.bracket)
    if (m.rows() != l.dim || m.cols() != l.dim)
      throw std::invalid_argument("lie algebra: bracket table shape mismatch");
  if (static_cast<Index>(mu.maps.size()) != l.dim)
    throw std::invalid_argument("action: one matrix per Lie basis element required");
  for (const MatQ& m : mu.maps)
    if (m.rows() != a.dim || m.cols() != a.dim)
      throw std::invalid_argument("action: matrix shape mismatch");
}

}  // namespace

LeibnizPair validate_pair(AssocAlgebra a, LieAlgebra l, LieAction mu) {
  check_shapes(a, l, mu);
  const Index n = a.dim;
  const Index m = l.dim;
  const MatQ id = MatQ::Identity(n, n);

  // (e_i e_j) e_k = e_i (e_j e_k)
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      MatQ lhs = MatQ::Zero(n, n);
      for (Index t = 0; t < n; ++t)
        if (a.mult[i](t, j) != 0) lhs += a.mult[i](t, j) * a.mult[t];
      MatQ rhs = a.mult[i] * a.mult[j];
      if (lhs != rhs)
        for (Index k = 0; k < n; ++k)
          if (lhs.col(k) != rhs.col(k)) throw AxiomError("not_associative", {i, j, k});
    }

  // 1_A e_i = e_i 1_A = e_i
  MatQ left_unit = a.left_mult(a.unit);
  for (Index i = 0; i < n; ++i) {
    if (left_unit.col(i) != id.col(i)) throw AxiomError("no_unit", {i});
    if (VecQ(a.mult[i] * a.unit) != VecQ(id.col(i))) throw AxiomError("no_unit", {i});
  }

  // [x, y] = -[y, x]
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      if (VecQ(l.bracket[i].col(j)) != VecQ(-l.bracket[j].col(i)))
        throw AxiomError("not_antisymmetric", {i, j});

  // [[x, y], z] + [[y, z], x] + [[z, x], y] = 0
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < m; ++k) {
        VecQ acc = VecQ::Zero(m);
        for (Index t = 0; t < m; ++t) {
          if (l.bracket[i](t, j) != 0) acc += l.bracket[i](t, j) * l.bracket[t].col(k);
          if (l.bracket[j](t, k) != 0) acc += l.bracket[j](t, k) * l.bracket[t].col(i);
          if (l.bracket[k](t, i) != 0) acc += l.bracket[k](t, i) * l.bracket[t].col(j);
        }
        if (!acc.isZero(0)) throw AxiomError("jacobi_fails", {i, j, k});
      }

  // mu(x)(e_i e_j) = e_i mu(x)(e_j) + mu(x)(e_i) e_j
  for (Index x = 0; x < m; ++x)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        VecQ lhs = mu.maps[x] * a.mult[i].col(j);
        VecQ rhs = a.mult[i] * mu.maps[x].col(j);
        for (Index t = 0; t < n; ++t)
          if (mu.maps[x](t, i) != 0) rhs += mu.maps[x](t, i) * a.mult[t].col(j);
        if (lhs != rhs) throw AxiomError("not_derivation", {x, i, j});
      }

  // mu([x, y]) = mu(x) mu(y) - mu(y) mu(x)
  for (Index x = 0; x < m; ++x)
    for (Index y = 0; y < m; ++y) {
      MatQ lhs = MatQ::Zero(n, n);
      for (Index t = 0; t < m; ++t)
        if (l.bracket[x](t, y) != 0) lhs += l.bracket[x](t, y) * mu.maps[t];
      MatQ rhs = mu.maps[x] * mu.maps[y] - mu.maps[y] * mu.maps[x];
      if (lhs != rhs) throw AxiomError("not_lie_hom", {x, y});
    }

  return LeibnizPair(std::move(a), std::move(l), std::move(mu));
}

TensorBasis::TensorBasis(std::vector<Index> factor_dims)
    : factor_dims_(std::move(factor_dims)) {
  for (Index d : factor_dims_) {
    if (d < 0) throw std::invalid_argument("TensorBasis: negative factor dimension");
    dim_ *= d;
  }
}

TensorBasis TensorBasis::power(Index dim, Index exponent) {
  return TensorBasis(std::vector<Index>(static_cast<size_t>(exponent), dim));
}

Index TensorBasis::flat(std::span<const Index> multi) const {
  if (static_cast<Index>(multi.size()) != factors())
    throw std::invalid_argument("TensorBasis: multi-index length mismatch");
  Index out = 0;
  for (size_t k = 0; k < multi.size(); ++k) {
    if (multi[k] < 0 || multi[k] >= factor_dims_[k])
      throw std::invalid_argument("TensorBasis: index out of range");
    out = out * factor_dims_[k] + multi[k];
  }
  return out;
}

std::vector<Index> TensorBasis::multi(Index flat) const {
  if (flat < 0 || flat >= dim_) throw std::invalid_argument("TensorBasis: flat index out of range");
  std::vector<Index> out(factor_dims_.size());
  for (size_t k = factor_dims_.size(); k-- > 0;) {
    out[k] = flat % factor_dims_[k];
    flat /= factor_dims_[k];
  }
  return out;
}

ExteriorBasis::ExteriorBasis(Index n, Index degree) : n_(n), degree_(degree) {
  if (n < 0 || degree < 0) throw std::invalid_argument("ExteriorBasis: negative parameter");
  if (degree > n) return;  // C(n, j) = 0, no tuples
  std::vector<Index> cur(static_cast<size_t>(degree));
  for (Index k = 0; k < degree; ++k) cur[static_cast<size_t>(k)] = k;
  while (true) {
    tuples_.push_back(cur);
    Index k = degree - 1;
    while (k >= 0 && cur[static_cast<size_t>(k)] == n - degree + k) --k;
    if (k < 0) break;
    ++cur[static_cast<size_t>(k)];
    for (Index t = k + 1; t < degree; ++t)
      cur[static_cast<size_t>(t)] = cur[static_cast<size_t>(t - 1)] + 1;
  }
}

Index ExteriorBasis::index_of(std::span<const Index> sorted_tuple) const {
  // Combinatorial rank in the lexicographic order.
  if (static_cast<Index>(sorted_tuple.size()) != degree_)
    throw std::invalid_argument("ExteriorBasis: tuple length mismatch");
  Index rank = 0;
  Index prev = -1;
  for (Index k = 0; k < degree_; ++k) {
    const Index v = sorted_tuple[static_cast<size_t>(k)];
    if (v <= prev || v >= n_) throw std::invalid_argument("ExteriorBasis: bad tuple");
    for (Index u = prev + 1; u < v; ++u) rank += binomial(n_ - 1 - u, degree_ - 1 - k);
    prev = v;
  }
  return rank;
}

WedgeNormalized wedge_normalize(const ExteriorBasis& basis, std::vector<Index> tuple) {
  int sign = 1;
  // Insertion sort, tracking the permutation parity.
  for (size_t i = 1; i < tuple.size(); ++i) {
    size_t k = i;
    while (k > 0 && tuple[k - 1] > tuple[k]) {
      std::swap(tuple[k - 1], tuple[k]);
      sign = -sign;
      --k;
    }
  }
  for (size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i - 1] == tuple[i]) return {-1, 0};
  return {basis.index_of(tuple), sign};
}

Index binomial(Index n, Index k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Index out = 1;
  for (Index t = 0; t < k; ++t) out = out * (n - t) / (t + 1);
  return out;
}

SpMatQ act_on_tensor_matrix(const LeibnizPair& pair, Index x, Index tensor_power) {
  if (tensor_power < 1) throw std::invalid_argument("act_on_tensor: tensor power must be >= 1");
  const Index n = pair.a_dim();
  const MatQ& d = pair.action().maps[static_cast<size_t>(x)];
  TensorBasis basis = TensorBasis::power(n, tensor_power);
  std::vector<Eigen::Triplet<Rational>> trip;
  for (Index col = 0; col < basis.dim(); ++col) {
    std::vector<Index> multi = basis.multi(col);
    for (Index pos = 0; pos < tensor_power; ++pos) {
      const Index orig = multi[static_cast<size_t>(pos)];
      for (Index r = 0; r < n; ++r) {
        if (d(r, orig) == 0) continue;
        multi[static_cast<size_t>(pos)] = r;
        trip.emplace_back(basis.flat(multi), col, d(r, orig));
      }
      multi[static_cast<size_t>(pos)] = orig;
    }
  }
  SpMatQ out(basis.dim(), basis.dim());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

VecQ act_on_tensor(const LeibnizPair& pair, Index x, Index tensor_power, const VecQ& t) {
  return act_on_tensor_matrix(pair, x, tensor_power) * t;
}

}  // namespace lpcoh
