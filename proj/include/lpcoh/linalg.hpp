#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lpcoh/rational.hpp"

namespace lpcoh {

// A linear subspace of Q^ambient spanned by linearly independent columns.
class Subspace {
 public:
  // Checks linear independence of the columns; throws std::invalid_argument
  // on a dependent or misshaped basis.
  Subspace(Index ambient_dim, MatQ basis);

  // Skips the independence check; for internal constructions whose output is
  // independent by construction (kernel/image extraction).
  static Subspace trusted(Index ambient_dim, MatQ basis);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const MatQ& basis() const { return basis_; }

 private:
  Subspace() = default;
  Index ambient_ = 0;
  MatQ basis_;
};

// Row-echelon data produced by exact Gauss elimination with leftmost-column
// pivoting. Pivot rows are ordered by strictly increasing pivot column, so
// rank, kernel and solutions read off deterministically. Columns at index
// >= pivot_limit (the augmented block, if any) never hold pivots; rows whose
// leading entry falls there are collected in residual_rows.
struct EchelonForm {
  using Row = std::vector<std::pair<Index, Rational>>;  // sorted by column

  Index rows = 0;
  Index pivot_limit = 0;
  Index stored_cols = 0;
  bool reduced = false;
  std::vector<Row> pivot_rows;
  std::vector<Index> pivot_cols;
  std::vector<Row> residual_rows;

  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

EchelonForm echelon_form(const MatQ& m, bool reduced);
EchelonForm echelon_form(const SpMatQ& m, bool reduced);

struct RrefResult {
  MatQ matrix;
  std::vector<Index> pivots;
};

// Reduced row echelon form, same shape as the input. rank = pivots.size().
RrefResult rref(const MatQ& m);

Index rank(const MatQ& m);
Index rank(const SpMatQ& m);

// Basis of { v : m v = 0 }; dim = cols - rank. The basis is the canonical
// one read off the reduced echelon form, one vector per free column in
// ascending column order.
Subspace kernel_basis(const MatQ& m);
Subspace kernel_basis(const SpMatQ& m);

// Basis of the column space: the original columns at the pivot indices.
Subspace image_basis(const MatQ& m);
Subspace image_basis(const SpMatQ& m);

// dim(super) - dim(sub) after verifying, by solving, that every basis vector
// of `sub` lies in `super`. Throws InvariantError("not_a_subspace") when
// membership fails; this signals a broken complex upstream.
Index quotient_dim(const Subspace& sub, const Subspace& super);

// Some x with m x = b, or nullopt when the system is inconsistent. The
// returned solution is the canonical one with all free variables zero, so it
// is deterministic. Satisfies m x = b exactly.
std::optional<VecQ> solve(const MatQ& m, const VecQ& b);
std::optional<VecQ> solve(const SpMatQ& m, const VecQ& b);

// Columnwise solve with a single elimination; nullopt if any column of `rhs`
// is inconsistent.
std::optional<MatQ> solve_columns(const MatQ& m, const MatQ& rhs);
std::optional<MatQ> solve_columns(const SpMatQ& m, const MatQ& rhs);

bool contains(const Subspace& space, const VecQ& v);

// Subspace equality by double inclusion (membership of each basis vector both
// ways), not by dimension comparison alone.
bool same_subspace(const Subspace& a, const Subspace& b);

}  // namespace lpcoh
