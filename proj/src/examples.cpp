#include "lpcoh/examples.hpp"

#include "lpcoh/errors.hpp"

namespace lpcoh {

namespace catalog {

namespace {

std::vector<MatQ> zero_tensor(Index dim) {
  return std::vector<MatQ>(static_cast<size_t>(dim), MatQ::Zero(dim, dim));
}

std::vector<MatQ> zero_maps(Index count, Index dim) {
  return std::vector<MatQ>(static_cast<size_t>(count), MatQ::Zero(dim, dim));
}

}  // namespace

AssocAlgebra rational_field() {
  AssocAlgebra a;
  a.dim = 1;
  a.mult = {MatQ::Identity(1, 1)};
  a.unit = VecQ::Ones(1);
  return a;
}

AssocAlgebra matrix_algebra2() {
  // Basis e11, e12, e21, e22; e_{ab} e_{cd} = [b == c] e_{ad}.
  AssocAlgebra a;
  a.dim = 4;
  a.mult = zero_tensor(4);
  auto idx = [](Index r, Index c) { return 2 * r + c; };
  for (Index r = 0; r < 2; ++r)
    for (Index s = 0; s < 2; ++s)
      for (Index t = 0; t < 2; ++t)
        for (Index u = 0; u < 2; ++u)
          if (s == t) a.mult[idx(r, s)](idx(r, u), idx(t, u)) = 1;
  a.unit = VecQ::Zero(4);
  a.unit(idx(0, 0)) = 1;
  a.unit(idx(1, 1)) = 1;
  return a;
}

AssocAlgebra dual_numbers() {
  AssocAlgebra a;
  a.dim = 2;
  a.mult = zero_tensor(2);
  a.mult[0] = MatQ::Identity(2, 2);  // 1 * x = x
  a.mult[1](1, 0) = 1;               // t * 1 = t, t * t = 0
  a.unit = VecQ::Zero(2);
  a.unit(0) = 1;
  return a;
}

AssocAlgebra split_pair() {
  AssocAlgebra a;
  a.dim = 2;
  a.mult = zero_tensor(2);
  a.mult[0](0, 0) = 1;
  a.mult[1](1, 1) = 1;
  a.unit = VecQ::Ones(2);
  return a;
}

AssocAlgebra truncated_polynomials3() {
  AssocAlgebra a;
  a.dim = 3;
  a.mult = zero_tensor(3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      if (i + j < 3) a.mult[i](i + j, j) = 1;
  a.unit = VecQ::Zero(3);
  a.unit(0) = 1;
  return a;
}

AssocAlgebra upper_triangular2() {
  // Basis e11, e12, e22.
  AssocAlgebra a;
  a.dim = 3;
  a.mult = zero_tensor(3);
  a.mult[0](0, 0) = 1;  // e11 e11 = e11
  a.mult[0](1, 1) = 1;  // e11 e12 = e12
  a.mult[1](1, 2) = 1;  // e12 e22 = e12
  a.mult[2](2, 2) = 1;  // e22 e22 = e22
  a.unit = VecQ::Zero(3);
  a.unit(0) = 1;
  a.unit(2) = 1;
  return a;
}

LieAlgebra zero_lie() { return LieAlgebra{0, {}}; }

LieAlgebra abelian_lie(Index dim) {
  return LieAlgebra{dim, zero_tensor(dim)};
}

LieAlgebra sl2() {
  // Basis e, f, h: [e, f] = h, [h, e] = 2e, [h, f] = -2f.
  LieAlgebra l;
  l.dim = 3;
  l.bracket = zero_tensor(3);
  l.bracket[0](2, 1) = 1;   // [e, f] = h
  l.bracket[1](2, 0) = -1;  // [f, e] = -h
  l.bracket[2](0, 0) = 2;   // [h, e] = 2e
  l.bracket[0](0, 2) = -2;  // [e, h] = -2e
  l.bracket[2](1, 1) = -2;  // [h, f] = -2f
  l.bracket[1](1, 2) = 2;   // [f, h] = 2f
  return l;
}

LieAlgebra solvable2() {
  LieAlgebra l;
  l.dim = 2;
  l.bracket = zero_tensor(2);
  l.bracket[0](1, 1) = 1;   // [x, y] = y
  l.bracket[1](1, 0) = -1;  // [y, x] = -y
  return l;
}

LieAlgebra heisenberg3() {
  LieAlgebra l;
  l.dim = 3;
  l.bracket = zero_tensor(3);
  l.bracket[0](2, 1) = 1;   // [x, y] = z
  l.bracket[1](2, 0) = -1;  // [y, x] = -z
  return l;
}

LieAction zero_action(Index l_dim, Index a_dim) {
  return LieAction{zero_maps(l_dim, a_dim)};
}

MatQ sl2_embedding() {
  MatQ e = MatQ::Zero(4, 3);
  e(1, 0) = 1;   // e -> e12
  e(2, 1) = 1;   // f -> e21
  e(0, 2) = 1;   // h -> e11 - e22
  e(3, 2) = -1;
  return e;
}

Bimodule regular_bimodule(const AssocAlgebra& a) {
  Bimodule m;
  m.dim = a.dim;
  m.left = a.mult;
  m.right.reserve(static_cast<size_t>(a.dim));
  for (Index j = 0; j < a.dim; ++j) m.right.push_back(a.right_mult_basis(j));
  return m;
}

LeibnizPair m2_sl2_pair() {
  AssocAlgebra a = matrix_algebra2();
  LieAlgebra l = sl2();
  MatQ emb = sl2_embedding();
  LieAction mu;
  Bimodule reg = regular_bimodule(a);
  for (Index x = 0; x < 3; ++x) {
    VecQ xa = emb.col(x);
    mu.maps.push_back(reg.left_of(xa) - reg.right_of(xa));
  }
  return validate_pair(std::move(a), std::move(l), std::move(mu));
}

LPModule m2_sl2_adjoint() {
  LeibnizPair pair = m2_sl2_pair();
  Bimodule m = regular_bimodule(pair.algebra());
  LieModule m_lie{4, pair.action().maps};
  LieModule p{3, pair.lie().bracket};
  MatQ emb = sl2_embedding();
  SigmaMap sigma{4, 3, 4, MatQ::Zero(4, 12)};
  for (Index a = 0; a < 4; ++a)
    sigma.matrix.middleCols(a * 3, 3) = (m.left[a] - m.right[a]) * emb;
  return validate_module(std::move(pair), std::move(m), std::move(m_lie), std::move(p),
                         std::move(sigma));
}

LPModule trivial_module_over(const LeibnizPair& pair) {
  Bimodule m{0, zero_maps(pair.a_dim(), 0), zero_maps(pair.a_dim(), 0)};
  LieModule m_lie{0, zero_maps(pair.l_dim(), 0)};
  LieModule p{1, zero_maps(pair.l_dim(), 1)};
  return validate_module(pair, std::move(m), std::move(m_lie), std::move(p),
                         SigmaMap::zero(pair.a_dim(), 1, 0));
}

LPModule regular_l_zero(const AssocAlgebra& a) {
  LeibnizPair pair = validate_pair(a, zero_lie(), LieAction{});
  Bimodule m = regular_bimodule(a);
  return validate_module(std::move(pair), std::move(m), LieModule{a.dim, {}}, LieModule{0, {}},
                         SigmaMap::zero(a.dim, 0, a.dim));
}

}  // namespace catalog

PairDescription describe(const LeibnizPair& pair) {
  PairDescription d;
  d.algebra = pair.algebra();
  d.lie = pair.lie();
  d.mu = pair.action();
  return d;
}

PairDescription describe(const LPModule& module) {
  PairDescription d = describe(module.pair());
  d.module = ModuleDescription{module.m(), module.m_lie(), module.p(), module.sigma()};
  return d;
}

std::vector<std::string> example_names() {
  return {"m2_sl2",  "sl2_trivial",          "abelian_trivial",
          "l_zero_m2", "dual_numbers_poisson", "trivial_module"};
}

PairDescription example_description(const std::string& name) {
  using namespace catalog;
  if (name == "m2_sl2") return describe(m2_sl2_adjoint());
  if (name == "sl2_trivial") {
    LeibnizPair pair = validate_pair(rational_field(), sl2(), zero_action(3, 1));
    return describe(trivial_module_over(pair));
  }
  if (name == "abelian_trivial") {
    LeibnizPair pair = validate_pair(rational_field(), abelian_lie(2), zero_action(2, 1));
    Bimodule m = regular_bimodule(pair.algebra());
    LPModule mod = validate_module(pair, std::move(m), LieModule{1, zero_maps(2, 1)},
                                   LieModule{1, zero_maps(2, 1)}, SigmaMap::zero(1, 1, 1));
    return describe(mod);
  }
  if (name == "l_zero_m2") return describe(regular_l_zero(matrix_algebra2()));
  if (name == "dual_numbers_poisson") {
    PoissonAlgebra pa{dual_numbers(), abelian_lie(2)};
    QuasiPoissonModule qm{regular_bimodule(pa.algebra), LieModule{2, zero_maps(2, 2)}};
    return describe(from_quasi_poisson(pa, qm));
  }
  if (name == "trivial_module") return describe(catalog::trivial_module_over(catalog::m2_sl2_pair()));
  throw UnknownExampleError(name);
}

}  // namespace lpcoh
