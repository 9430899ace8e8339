#pragma once

#include <string>
#include <vector>

#include "lpcoh/io.hpp"

namespace lpcoh {

// Bundled example inputs, in the order reported by `examples list`:
//   m2_sl2               2x2 matrices with sl2 acting by commutators,
//                        adjoint coefficients
//   sl2_trivial          A = Q, L = sl2, coefficients (0, Q trivial, 0)
//   abelian_trivial      A = Q, L abelian of dim 2, coefficients (Q, Q, 0)
//   l_zero_m2            A = M2(Q), L = 0, coefficients (A, 0, 0)
//   dual_numbers_poisson Q[t]/(t^2) as a Poisson algebra over itself
//   trivial_module       the m2_sl2 pair with coefficients (0, Q, 0)
std::vector<std::string> example_names();

PairDescription example_description(const std::string& name);  // UnknownExampleError

PairDescription describe(const LeibnizPair& pair);
PairDescription describe(const LPModule& module);

// Building blocks for the bundled examples, reused heavily by the tests.
namespace catalog {

AssocAlgebra rational_field();            // Q
AssocAlgebra matrix_algebra2();           // M2(Q), basis e11, e12, e21, e22
AssocAlgebra dual_numbers();              // Q[t]/(t^2), basis 1, t
AssocAlgebra split_pair();                // Q x Q
AssocAlgebra truncated_polynomials3();    // Q[t]/(t^3)
AssocAlgebra upper_triangular2();         // basis e11, e12, e22

LieAlgebra zero_lie();
LieAlgebra abelian_lie(Index dim);
LieAlgebra sl2();                         // basis e, f, h
LieAlgebra solvable2();                   // [x, y] = y
LieAlgebra heisenberg3();                 // [x, y] = z central

LieAction zero_action(Index l_dim, Index a_dim);

// Columns are the images of e, f, h in M2(Q).
MatQ sl2_embedding();

Bimodule regular_bimodule(const AssocAlgebra& a);

LeibnizPair m2_sl2_pair();
LPModule m2_sl2_adjoint();

// (0, Q trivial, 0) over an arbitrary pair.
LPModule trivial_module_over(const LeibnizPair& pair);

// (A, 0, 0) over (A, 0): the regular bimodule with no Lie leg.
LPModule regular_l_zero(const AssocAlgebra& a);

}  // namespace catalog

}  // namespace lpcoh
