#include "lpcoh/lp_module.hpp"

#include "lpcoh/errors.hpp"

namespace lpcoh {

MatQ Bimodule::left_of(const VecQ& a) const {
  MatQ out = MatQ::Zero(dim, dim);
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != 0) out += a(i) * left[static_cast<size_t>(i)];
  return out;
}

MatQ Bimodule::right_of(const VecQ& a) const {
  MatQ out = MatQ::Zero(dim, dim);
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != 0) out += a(i) * right[static_cast<size_t>(i)];
  return out;
}

SigmaMap SigmaMap::zero(Index a_dim, Index p_dim, Index m_dim) {
  return {a_dim, p_dim, m_dim, MatQ::Zero(m_dim, a_dim * p_dim)};
}

namespace {

void check_module_shapes(const LeibnizPair& pair, const Bimodule& m, const LieModule& m_lie,
                         const LieModule& p, const SigmaMap& sigma) {
  auto square = [](const std::vector<MatQ>& mats, Index d, Index count, const char* what) {
    if (static_cast<Index>(mats.size()) != count) throw std::invalid_argument(what);
    for (const MatQ& mat : mats)
      if (mat.rows() != d || mat.cols() != d) throw std::invalid_argument(what);
  };
  square(m.left, m.dim, pair.a_dim(), "module: left action shape mismatch");
  square(m.right, m.dim, pair.a_dim(), "module: right action shape mismatch");
  square(m_lie.action, m.dim, pair.l_dim(), "module: Lie action on M shape mismatch");
  square(p.action, p.dim, pair.l_dim(), "module: Lie action on P shape mismatch");
  if (sigma.a_dim != pair.a_dim() || sigma.p_dim != p.dim || sigma.m_dim != m.dim ||
      sigma.matrix.rows() != m.dim || sigma.matrix.cols() != pair.a_dim() * p.dim)
    throw std::invalid_argument("module: sigma shape mismatch");
}

void check_lie_module(const LieAlgebra& l, const LieModule& mod, const char* axiom) {
  for (Index x = 0; x < l.dim; ++x)
    for (Index y = 0; y < l.dim; ++y) {
      MatQ lhs = MatQ::Zero(mod.dim, mod.dim);
      for (Index t = 0; t < l.dim; ++t)
        if (l.bracket[x](t, y) != 0) lhs += l.bracket[x](t, y) * mod.action[t];
      MatQ rhs = mod.action[x] * mod.action[y] - mod.action[y] * mod.action[x];
      if (lhs != rhs) throw AxiomError(axiom, {x, y});
    }
}

}  // namespace

LPModule validate_module(LeibnizPair pair, Bimodule m, LieModule m_lie, LieModule p,
                         SigmaMap sigma) {
  check_module_shapes(pair, m, m_lie, p, sigma);
  const AssocAlgebra& alg = pair.algebra();
  const Index na = pair.a_dim();
  const Index nl = pair.l_dim();
  const MatQ id = MatQ::Identity(m.dim, m.dim);

  // left[ab] = left[a] left[b], right[ab] = right[b] right[a]
  for (Index a = 0; a < na; ++a)
    for (Index b = 0; b < na; ++b) {
      MatQ lab = MatQ::Zero(m.dim, m.dim);
      MatQ rab = MatQ::Zero(m.dim, m.dim);
      for (Index t = 0; t < na; ++t) {
        if (alg.c(a, b, t) != 0) {
          lab += alg.c(a, b, t) * m.left[t];
          rab += alg.c(a, b, t) * m.right[t];
        }
      }
      if (lab != MatQ(m.left[a] * m.left[b])) throw AxiomError("bimodule_left", {a, b});
      if (rab != MatQ(m.right[b] * m.right[a])) throw AxiomError("bimodule_right", {a, b});
    }
  if (m.left_of(alg.unit) != id || m.right_of(alg.unit) != id)
    throw AxiomError("bimodule_unit", {});
  for (Index a = 0; a < na; ++a)
    for (Index b = 0; b < na; ++b)
      if (MatQ(m.left[a] * m.right[b]) != MatQ(m.right[b] * m.left[a]))
        throw AxiomError("bimodule_commute", {a, b});

  check_lie_module(pair.lie(), m_lie, "m_lie_module");
  check_lie_module(pair.lie(), p, "p_lie_module");

  // {x, a m} = {x, a} m + a {x, m}  and  {x, m a} = m {x, a} + {x, m} a
  for (Index x = 0; x < nl; ++x) {
    const MatQ& d = pair.action().maps[static_cast<size_t>(x)];
    for (Index a = 0; a < na; ++a) {
      MatQ da_left = MatQ::Zero(m.dim, m.dim);
      MatQ da_right = MatQ::Zero(m.dim, m.dim);
      for (Index t = 0; t < na; ++t) {
        if (d(t, a) != 0) {
          da_left += d(t, a) * m.left[t];
          da_right += d(t, a) * m.right[t];
        }
      }
      if (MatQ(m_lie.action[x] * m.left[a]) != MatQ(da_left + m.left[a] * m_lie.action[x]))
        throw AxiomError("lie_bimodule_left", {x, a});
      if (MatQ(m_lie.action[x] * m.right[a]) != MatQ(da_right + m.right[a] * m_lie.action[x]))
        throw AxiomError("lie_bimodule_right", {x, a});
    }
  }

  // sigma(ab (x) p) = a sigma(b (x) p) + sigma(a (x) p) b
  for (Index a = 0; a < na; ++a)
    for (Index b = 0; b < na; ++b) {
      MatQ sab = MatQ::Zero(m.dim, p.dim);
      for (Index t = 0; t < na; ++t)
        if (alg.c(a, b, t) != 0) sab += alg.c(a, b, t) * sigma.block(t);
      if (sab != MatQ(m.left[a] * sigma.block(b) + m.right[b] * sigma.block(a)))
        throw AxiomError("sigma_derivation", {a, b});
    }

  // {x, sigma(a (x) p)} = sigma({x, a} (x) p) + sigma(a (x) [x, p])
  for (Index x = 0; x < nl; ++x) {
    const MatQ& d = pair.action().maps[static_cast<size_t>(x)];
    for (Index a = 0; a < na; ++a) {
      MatQ sda = MatQ::Zero(m.dim, p.dim);
      for (Index t = 0; t < na; ++t)
        if (d(t, a) != 0) sda += d(t, a) * sigma.block(t);
      if (MatQ(m_lie.action[x] * sigma.block(a)) != MatQ(sda + sigma.block(a) * p.action[x]))
        throw AxiomError("sigma_equivariance", {x, a});
    }
  }

  return LPModule(std::move(pair), std::move(m), std::move(m_lie), std::move(p),
                  std::move(sigma));
}

LPModuleHom validate_hom(const LPModule& from, const LPModule& to, MatQ g, MatQ f) {
  if (from.pair() != to.pair())
    throw std::invalid_argument("validate_hom: modules live over different pairs");
  if (g.rows() != to.m_dim() || g.cols() != from.m_dim() || f.rows() != to.p_dim() ||
      f.cols() != from.p_dim())
    throw std::invalid_argument("validate_hom: matrix shape mismatch");
  const Index na = from.pair().a_dim();
  const Index nl = from.pair().l_dim();
  for (Index a = 0; a < na; ++a) {
    if (MatQ(g * from.m().left[a]) != MatQ(to.m().left[a] * g))
      throw AxiomError("not_a_hom", {0, a});
    if (MatQ(g * from.m().right[a]) != MatQ(to.m().right[a] * g))
      throw AxiomError("not_a_hom", {1, a});
  }
  for (Index x = 0; x < nl; ++x) {
    if (MatQ(g * from.m_lie().action[x]) != MatQ(to.m_lie().action[x] * g))
      throw AxiomError("not_a_hom", {2, x});
    if (MatQ(f * from.p().action[x]) != MatQ(to.p().action[x] * f))
      throw AxiomError("not_a_hom", {3, x});
  }
  for (Index a = 0; a < na; ++a)
    if (MatQ(g * from.sigma().block(a)) != MatQ(to.sigma().block(a) * f))
      throw AxiomError("not_a_hom", {4, a});
  return LPModuleHom{std::move(g), std::move(f)};
}

namespace {

LeibnizPair poisson_pair(const PoissonAlgebra& a) {
  if (a.algebra.dim != a.bracket.dim)
    throw std::invalid_argument("poisson algebra: associative and Lie dimensions differ");
  const Index n = a.algebra.dim;
  // {ab, c} = a{b, c} + {a, c}b
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index c = 0; c < n; ++c) {
        VecQ lhs = VecQ::Zero(n);
        for (Index t = 0; t < n; ++t)
          if (a.algebra.c(i, j, t) != 0) lhs += a.algebra.c(i, j, t) * a.bracket.bracket_of(t, c);
        VecQ rhs = a.algebra.mult[i] * a.bracket.bracket_of(j, c);
        VecQ bic = a.bracket.bracket_of(i, c);
        for (Index t = 0; t < n; ++t)
          if (bic(t) != 0) rhs += bic(t) * a.algebra.mult[t].col(j);
        if (lhs != rhs) throw AxiomError("not_poisson_leibniz", {i, j, c});
      }
  // mu(x) = {x, -}, a derivation by the rule just checked
  return validate_pair(a.algebra, a.bracket, LieAction{a.bracket.bracket});
}

}  // namespace

LPModule from_quasi_poisson(const PoissonAlgebra& a, const QuasiPoissonModule& m) {
  LeibnizPair pair = poisson_pair(a);
  const Index n = a.algebra.dim;
  SigmaMap sigma{n, m.bimodule.dim, m.bimodule.dim,
                 MatQ::Zero(m.bimodule.dim, n * m.bimodule.dim)};
  for (Index i = 0; i < n; ++i)
    sigma.matrix.middleCols(i * m.bimodule.dim, m.bimodule.dim) =
        m.bimodule.left[i] - m.bimodule.right[i];
  return validate_module(std::move(pair), m.bimodule, m.lie, LieModule{m.bimodule.dim, m.lie.action},
                         std::move(sigma));
}

LPModule from_poisson(const PoissonAlgebra& a, const QuasiPoissonModule& m) {
  LeibnizPair pair = poisson_pair(a);
  const Index n = a.algebra.dim;
  // {ab, m} = a{b, m} + {a, m}b
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      MatQ lhs = MatQ::Zero(m.bimodule.dim, m.bimodule.dim);
      for (Index t = 0; t < n; ++t)
        if (a.algebra.c(i, j, t) != 0) lhs += a.algebra.c(i, j, t) * m.lie.action[t];
      MatQ rhs = m.bimodule.left[i] * m.lie.action[j] + m.bimodule.right[j] * m.lie.action[i];
      if (lhs != rhs) throw AxiomError("not_poisson_module", {i, j});
    }
  SigmaMap sigma{n, m.bimodule.dim, m.bimodule.dim,
                 MatQ::Zero(m.bimodule.dim, n * m.bimodule.dim)};
  for (Index i = 0; i < n; ++i)
    sigma.matrix.middleCols(i * m.bimodule.dim, m.bimodule.dim) = m.lie.action[i];
  return validate_module(std::move(pair), m.bimodule, m.lie, LieModule{m.bimodule.dim, m.lie.action},
                         std::move(sigma));
}

UALModuleData functor_f(const LPModule& module) {
  const Index na = module.pair().a_dim();
  const Index np = module.p_dim();
  const Index nm = module.m_dim();
  UALModuleData out{module.p(), module.m(), module.m_lie(), na,
                    MatQ::Zero(nm, na * na * na * np)};
  // sigma_tilde(a1 (x) a2 (x) a3 (x) p) = a1 sigma(a2 (x) p) a3
  for (Index a1 = 0; a1 < na; ++a1)
    for (Index a2 = 0; a2 < na; ++a2)
      for (Index a3 = 0; a3 < na; ++a3) {
        MatQ block = module.m().left[a1] * module.m().right[a3] * module.sigma().block(a2);
        out.sigma_tilde.middleCols(((a1 * na + a2) * na + a3) * np, np) = block;
      }
  return out;
}

LPModule functor_g(const LeibnizPair& pair, const UALModuleData& data) {
  const Index na = pair.a_dim();
  const Index np = data.p.dim;
  const Index nm = data.m.dim;
  if (data.a_dim != na) throw std::invalid_argument("functor_g: algebra dimension mismatch");
  const VecQ& unit = pair.algebra().unit;
  // sigma(b (x) p) = sigma_tilde(1 (x) b (x) 1 (x) p)
  SigmaMap sigma{na, np, nm, MatQ::Zero(nm, na * np)};
  for (Index b = 0; b < na; ++b) {
    MatQ block = MatQ::Zero(nm, np);
    for (Index i = 0; i < na; ++i) {
      if (unit(i) == 0) continue;
      for (Index k = 0; k < na; ++k) {
        if (unit(k) == 0) continue;
        block += unit(i) * unit(k) * data.sigma_tilde.middleCols(((i * na + b) * na + k) * np, np);
      }
    }
    sigma.matrix.middleCols(b * np, np) = block;
  }
  return validate_module(pair, data.m, data.m_lie, data.p, std::move(sigma));
}

UALHom functor_f_hom(const LPModuleHom& hom) { return UALHom{hom.f, hom.g}; }

LPModuleHom functor_g_hom(const UALHom& hom) { return LPModuleHom{hom.g, hom.f}; }

void validate_ual_hom(const UALModuleData& from, const UALModuleData& to, const UALHom& hom) {
  const Index na = from.a_dim;
  const MatQ& f = hom.f;
  const MatQ& g = hom.g;
  for (Index a = 0; a < na; ++a) {
    if (MatQ(g * from.m.left[a]) != MatQ(to.m.left[a] * g))
      throw AxiomError("not_a_ual_hom", {0, a});
    if (MatQ(g * from.m.right[a]) != MatQ(to.m.right[a] * g))
      throw AxiomError("not_a_ual_hom", {1, a});
  }
  for (size_t x = 0; x < from.m_lie.action.size(); ++x) {
    if (MatQ(g * from.m_lie.action[x]) != MatQ(to.m_lie.action[x] * g))
      throw AxiomError("not_a_ual_hom", {2, static_cast<long>(x)});
    if (MatQ(f * from.p.action[x]) != MatQ(to.p.action[x] * f))
      throw AxiomError("not_a_ual_hom", {3, static_cast<long>(x)});
  }
  const Index np_from = from.p.dim;
  const Index np_to = to.p.dim;
  const Index triples = na * na * na;
  for (Index t = 0; t < triples; ++t)
    if (MatQ(g * from.sigma_tilde.middleCols(t * np_from, np_from)) !=
        MatQ(to.sigma_tilde.middleCols(t * np_to, np_to) * f))
      throw AxiomError("not_a_ual_hom", {4, t});
}

}  // namespace lpcoh
