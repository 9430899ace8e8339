#include "lpcoh/linalg.hpp"

#include <algorithm>
#include <limits>

#include "lpcoh/errors.hpp"

namespace lpcoh {

namespace {

using Row = EchelonForm::Row;

// r - f * p, merging sorted rows. p's leading column must cancel exactly when
// called from the elimination loop, but the routine itself is general.
Row row_axpy(const Row& r, const Rational& f, const Row& p) {
  Row out;
  out.reserve(r.size() + p.size());
  size_t a = 0, b = 0;
  while (a < r.size() && b < p.size()) {
    if (r[a].first < p[b].first) {
      out.push_back(r[a++]);
    } else if (r[a].first > p[b].first) {
      Rational v = -f * p[b].second;
      if (v != 0) out.emplace_back(p[b].first, std::move(v));
      ++b;
    } else {
      Rational v = r[a].second - f * p[b].second;
      if (v != 0) out.emplace_back(r[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  for (; a < r.size(); ++a) out.push_back(r[a]);
  for (; b < p.size(); ++b) {
    Rational v = -f * p[b].second;
    if (v != 0) out.emplace_back(p[b].first, std::move(v));
  }
  return out;
}

const Rational* row_entry(const Row& row, Index col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, Index c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// Exact Gauss elimination. Pivots are chosen in the leftmost nonzero column
// (so pivot columns are the canonical rref ones); within a column the row
// with fewest nonzeros wins, which keeps fill-in low on the sparse
// differential matrices this engine mostly sees.
EchelonForm eliminate(std::vector<Row> rows, Index pivot_limit, Index stored_cols,
                      bool reduced) {
  EchelonForm ech;
  ech.rows = static_cast<Index>(rows.size());
  ech.pivot_limit = pivot_limit;
  ech.stored_cols = stored_cols;
  ech.reduced = reduced;

  std::vector<std::vector<size_t>> bucket(static_cast<size_t>(pivot_limit));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    Index lead = rows[r].front().first;
    if (lead >= pivot_limit)
      ech.residual_rows.push_back(std::move(rows[r]));
    else
      bucket[static_cast<size_t>(lead)].push_back(r);
  }

  for (Index col = 0; col < pivot_limit; ++col) {
    auto& cand = bucket[static_cast<size_t>(col)];
    if (cand.empty()) continue;
    size_t best = 0;
    for (size_t k = 1; k < cand.size(); ++k)
      if (rows[cand[k]].size() < rows[cand[best]].size()) best = k;
    const size_t piv = cand[best];
    const Rational lead = rows[piv].front().second;
    for (size_t k = 0; k < cand.size(); ++k) {
      if (k == best) continue;
      const size_t r = cand[k];
      Rational f = rows[r].front().second / lead;
      rows[r] = row_axpy(rows[r], f, rows[piv]);
      if (rows[r].empty()) continue;
      Index new_lead = rows[r].front().first;
      if (new_lead >= pivot_limit)
        ech.residual_rows.push_back(std::move(rows[r]));
      else
        bucket[static_cast<size_t>(new_lead)].push_back(r);
    }
    cand.clear();
    ech.pivot_cols.push_back(col);
    ech.pivot_rows.push_back(std::move(rows[piv]));
  }

  if (reduced) {
    for (auto& row : ech.pivot_rows) {
      const Rational lead = row.front().second;
      if (lead != 1)
        for (auto& e : row) e.second /= lead;
    }
    for (size_t k = ech.pivot_rows.size(); k-- > 1;) {
      const Index pc = ech.pivot_cols[k];
      for (size_t r = 0; r < k; ++r) {
        const Rational* v = row_entry(ech.pivot_rows[r], pc);
        if (v) ech.pivot_rows[r] = row_axpy(ech.pivot_rows[r], *v, ech.pivot_rows[k]);
      }
    }
  }
  return ech;
}

std::vector<Row> rows_of(const MatQ& m) {
  std::vector<Row> rows(static_cast<size_t>(m.rows()));
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) rows[static_cast<size_t>(r)].emplace_back(c, m(r, c));
  return rows;
}

std::vector<Row> rows_of(const SpMatQ& m) {
  std::vector<Row> rows(static_cast<size_t>(m.rows()));
  for (Index k = 0; k < m.outerSize(); ++k)
    for (SpMatQ::InnerIterator it(m, k); it; ++it)
      rows[static_cast<size_t>(it.row())].emplace_back(it.col(), it.value());
  for (auto& row : rows)
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  return rows;
}

std::vector<Row> rows_of_augmented(const std::vector<Row>& rows, const MatQ& rhs, Index cols) {
  std::vector<Row> out = rows;
  for (Index r = 0; r < rhs.rows(); ++r)
    for (Index c = 0; c < rhs.cols(); ++c)
      if (rhs(r, c) != 0) out[static_cast<size_t>(r)].emplace_back(cols + c, rhs(r, c));
  return out;
}

Subspace kernel_from(const EchelonForm& ech, Index cols) {
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Index p : ech.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;
  const Index nullity = cols - ech.rank();
  MatQ basis = MatQ::Zero(cols, nullity);
  Index v = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    basis(f, v) = 1;
    for (size_t r = 0; r < ech.pivot_rows.size(); ++r) {
      const Rational* e = row_entry(ech.pivot_rows[r], f);
      if (e) basis(ech.pivot_cols[r], v) = -*e;
    }
    ++v;
  }
  return Subspace::trusted(cols, std::move(basis));
}

// Per-column solutions of m x = rhs from a reduced augmented echelon form.
std::optional<MatQ> solutions_from(const EchelonForm& ech, Index cols, Index nrhs) {
  if (!ech.residual_rows.empty()) return std::nullopt;
  MatQ x = MatQ::Zero(cols, nrhs);
  for (size_t r = 0; r < ech.pivot_rows.size(); ++r) {
    for (const auto& [c, v] : ech.pivot_rows[r])
      if (c >= cols) x(ech.pivot_cols[r], c - cols) = v;
  }
  return x;
}

template <typename Mat>
std::optional<MatQ> solve_columns_impl(const Mat& m, const MatQ& rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: shape mismatch");
  auto rows = rows_of_augmented(rows_of(m), rhs, m.cols());
  EchelonForm ech = eliminate(std::move(rows), m.cols(), m.cols() + rhs.cols(), true);
  return solutions_from(ech, m.cols(), rhs.cols());
}

}  // namespace

Subspace::Subspace(Index ambient_dim, MatQ basis) {
  if (basis.rows() != ambient_dim && basis.cols() != 0)
    throw std::invalid_argument("Subspace: basis rows do not match ambient dimension");
  if (basis.cols() > 0 && rank(basis) != basis.cols())
    throw std::invalid_argument("Subspace: basis columns are linearly dependent");
  ambient_ = ambient_dim;
  basis_ = std::move(basis);
  if (basis_.rows() != ambient_dim) basis_.resize(ambient_dim, 0);
}

Subspace Subspace::trusted(Index ambient_dim, MatQ basis) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = std::move(basis);
  if (s.basis_.rows() != ambient_dim) s.basis_.resize(ambient_dim, 0);
  return s;
}

EchelonForm echelon_form(const MatQ& m, bool reduced) {
  return eliminate(rows_of(m), m.cols(), m.cols(), reduced);
}

EchelonForm echelon_form(const SpMatQ& m, bool reduced) {
  return eliminate(rows_of(m), m.cols(), m.cols(), reduced);
}

RrefResult rref(const MatQ& m) {
  EchelonForm ech = echelon_form(m, true);
  MatQ out = MatQ::Zero(m.rows(), m.cols());
  for (size_t r = 0; r < ech.pivot_rows.size(); ++r)
    for (const auto& [c, v] : ech.pivot_rows[r]) out(static_cast<Index>(r), c) = v;
  return {std::move(out), ech.pivot_cols};
}

Index rank(const MatQ& m) { return echelon_form(m, false).rank(); }
Index rank(const SpMatQ& m) { return echelon_form(m, false).rank(); }

Subspace kernel_basis(const MatQ& m) { return kernel_from(echelon_form(m, true), m.cols()); }
Subspace kernel_basis(const SpMatQ& m) { return kernel_from(echelon_form(m, true), m.cols()); }

Subspace image_basis(const MatQ& m) {
  EchelonForm ech = echelon_form(m, false);
  MatQ basis(m.rows(), ech.rank());
  for (size_t k = 0; k < ech.pivot_cols.size(); ++k)
    basis.col(static_cast<Index>(k)) = m.col(ech.pivot_cols[k]);
  return Subspace::trusted(m.rows(), std::move(basis));
}

Subspace image_basis(const SpMatQ& m) {
  EchelonForm ech = echelon_form(m, false);
  MatQ basis = MatQ::Zero(m.rows(), ech.rank());
  for (size_t k = 0; k < ech.pivot_cols.size(); ++k)
    basis.col(static_cast<Index>(k)) = MatQ(m.col(ech.pivot_cols[k]));
  return Subspace::trusted(m.rows(), std::move(basis));
}

Index quotient_dim(const Subspace& sub, const Subspace& super) {
  if (sub.ambient_dim() != super.ambient_dim())
    throw std::invalid_argument("quotient_dim: ambient dimensions differ");
  if (sub.dim() > 0) {
    auto sol = solve_columns(super.basis(), sub.basis());
    if (!sol)
      throw InvariantError("not_a_subspace",
                           "a basis vector of the claimed subspace is outside the ambient span");
  }
  return super.dim() - sub.dim();
}

std::optional<VecQ> solve(const MatQ& m, const VecQ& b) {
  auto x = solve_columns_impl(m, MatQ(b));
  if (!x) return std::nullopt;
  return VecQ(x->col(0));
}

std::optional<VecQ> solve(const SpMatQ& m, const VecQ& b) {
  auto x = solve_columns_impl(m, MatQ(b));
  if (!x) return std::nullopt;
  return VecQ(x->col(0));
}

std::optional<MatQ> solve_columns(const MatQ& m, const MatQ& rhs) {
  return solve_columns_impl(m, rhs);
}

std::optional<MatQ> solve_columns(const SpMatQ& m, const MatQ& rhs) {
  return solve_columns_impl(m, rhs);
}

bool contains(const Subspace& space, const VecQ& v) {
  if (v.size() != space.ambient_dim())
    throw std::invalid_argument("contains: vector size does not match ambient dimension");
  return solve_columns(space.basis(), MatQ(v)).has_value();
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  if (a.dim() != b.dim()) return false;
  return solve_columns(a.basis(), b.basis()).has_value() &&
         solve_columns(b.basis(), a.basis()).has_value();
}

}  // namespace lpcoh
