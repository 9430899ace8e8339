#pragma once

#include <vector>

#include "lpcoh/structures.hpp"

namespace lpcoh {

// An A-A-bimodule by generator actions: left[a] and right[a] are the matrices
// of e_a acting on the left and on the right.
struct Bimodule {
  Index dim = 0;
  std::vector<MatQ> left;
  std::vector<MatQ> right;

  MatQ left_of(const VecQ& a) const;
  MatQ right_of(const VecQ& a) const;

  bool operator==(const Bimodule&) const = default;
};

// A Lie module by generator actions, one matrix per Lie basis element.
struct LieModule {
  Index dim = 0;
  std::vector<MatQ> action;

  bool operator==(const LieModule&) const = default;
};

// sigma : A (x) P -> M as one dim(M) x (dim(A)·dim(P)) matrix over the
// row-major basis of A (x) P (column a·dim(P) + p is e_a (x) e_p).
struct SigmaMap {
  Index a_dim = 0;
  Index p_dim = 0;
  Index m_dim = 0;
  MatQ matrix;

  static SigmaMap zero(Index a_dim, Index p_dim, Index m_dim);
  // sigma(e_a (x) -) : P -> M.
  MatQ block(Index a) const { return matrix.middleCols(a * p_dim, p_dim); }

  bool operator==(const SigmaMap&) const = default;
};

// A validated module (M, P, sigma) over a Leibniz pair: M carries commuting
// unital left/right A-actions plus an L-action compatible with both, P is an
// L-module, and sigma intertwines everything. Built via validate_module.
class LPModule {
 public:
  const LeibnizPair& pair() const { return pair_; }
  const Bimodule& m() const { return m_; }
  const LieModule& m_lie() const { return m_lie_; }
  const LieModule& p() const { return p_; }
  const SigmaMap& sigma() const { return sigma_; }
  Index m_dim() const { return m_.dim; }
  Index p_dim() const { return p_.dim; }

  bool operator==(const LPModule&) const = default;

 private:
  friend LPModule validate_module(LeibnizPair pair, Bimodule m, LieModule m_lie, LieModule p,
                                  SigmaMap sigma);
  LPModule(LeibnizPair pair, Bimodule m, LieModule m_lie, LieModule p, SigmaMap sigma)
      : pair_(std::move(pair)),
        m_(std::move(m)),
        m_lie_(std::move(m_lie)),
        p_(std::move(p)),
        sigma_(std::move(sigma)) {}

  LeibnizPair pair_;
  Bimodule m_;
  LieModule m_lie_;
  LieModule p_;
  SigmaMap sigma_;
};

// Exhaustive validation over basis tuples. AxiomError identifiers, in check
// order: bimodule_left / bimodule_right / bimodule_unit / bimodule_commute /
// m_lie_module / p_lie_module / lie_bimodule_left / lie_bimodule_right /
// sigma_derivation / sigma_equivariance.
LPModule validate_module(LeibnizPair pair, Bimodule m, LieModule m_lie, LieModule p,
                         SigmaMap sigma);

// A homomorphism (g, f) of modules over the same pair: g : M -> M' intertwines
// both A-actions and the L-action, f : P -> P' intertwines the L-action, and
// g(sigma(a (x) p)) = sigma'(a (x) f(p)).
struct LPModuleHom {
  MatQ g;
  MatQ f;

  bool operator==(const LPModuleHom&) const = default;
};

// Throws AxiomError("not_a_hom", ...) naming the failing identity via the
// witness tuple's leading tag: 0 left, 1 right, 2 m-lie, 3 p-lie, 4 sigma.
LPModuleHom validate_hom(const LPModule& from, const LPModule& to, MatQ g, MatQ f);

// A noncommutative Poisson algebra: one space carrying both structures, the
// bracket acting by derivations of the product.
struct PoissonAlgebra {
  AssocAlgebra algebra;
  LieAlgebra bracket;
};

struct QuasiPoissonModule {
  Bimodule bimodule;
  LieModule lie;  // Lie action of A on the module
};

// The module (M, M, sigma) over the pair (A, A) with sigma the associative
// commutator sigma(a (x) m) = am - ma. Validates the quasi-Poisson axioms and
// the resulting module; throws AxiomError otherwise.
LPModule from_quasi_poisson(const PoissonAlgebra& a, const QuasiPoissonModule& m);

// As above with sigma the Lie action sigma(a (x) m) = {a, m}. Additionally
// requires the Poisson-module law {ab, m} = a{b, m} + {a, m}b
// (AxiomError "not_poisson_module" when it fails).
LPModule from_poisson(const PoissonAlgebra& a, const QuasiPoissonModule& m);

// A module over the enveloping algebra of the pair, recorded by generator
// actions only: P as an L-module, M with its A-bimodule and L-action
// generators, and the induced map on three algebra legs restricted to the
// identity of the Lie enveloping leg,
//   sigma_tilde(a1 (x) a2 (x) a3 (x) p) = a1 sigma(a2 (x) p) a3,
// stored over the row-major basis of A (x) A (x) A (x) P.
struct UALModuleData {
  LieModule p;
  Bimodule m;
  LieModule m_lie;
  Index a_dim = 0;
  MatQ sigma_tilde;

  bool operator==(const UALModuleData&) const = default;
};

UALModuleData functor_f(const LPModule& module);
LPModule functor_g(const LeibnizPair& pair, const UALModuleData& data);

// On homomorphisms the functors swap the two legs: (g, f) <-> (f, g).
struct UALHom {
  MatQ f;
  MatQ g;

  bool operator==(const UALHom&) const = default;
};

UALHom functor_f_hom(const LPModuleHom& hom);
LPModuleHom functor_g_hom(const UALHom& hom);

// Checks the enveloping-side homomorphism conditions on generators; throws
// AxiomError("not_a_ual_hom", ...) on failure.
void validate_ual_hom(const UALModuleData& from, const UALModuleData& to, const UALHom& hom);

}  // namespace lpcoh
