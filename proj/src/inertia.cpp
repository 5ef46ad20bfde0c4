#include "inertia.hpp"

namespace apc {

SymmetricForm::SymmetricForm(Matrix<Rational> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (const auto& row : entries_)
    if (row.size() != n) fail(ErrorCode::malformed_input, "symmetric form must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = i + 1; jj < n; ++jj)
      if (entries_[i][jj] != entries_[jj][i])
        fail(ErrorCode::malformed_input, "matrix is not exactly symmetric");
}

SymmetricForm SymmetricForm::zero(int dim) {
  return SymmetricForm(Matrix<Rational>(dim, std::vector<Rational>(dim, Rational(0))));
}

namespace {

// Congruence column operation col_j += c * col_i applied to both the working
// matrix (columns then rows, keeping symmetry) and the accumulated transform.
void add_column(Matrix<Rational>& m, Matrix<Rational>& p, int j, int i, const Rational& c) {
  const int n = static_cast<int>(m.size());
  for (int r = 0; r < n; ++r) m[r][j] += c * m[r][i];
  for (int cc = 0; cc < n; ++cc) m[j][cc] += c * m[i][cc];
  for (int r = 0; r < n; ++r) p[r][j] += c * p[r][i];
}

void swap_basis(Matrix<Rational>& m, Matrix<Rational>& p, int i, int j) {
  const int n = static_cast<int>(m.size());
  for (int r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
  std::swap(m[i], m[j]);
  for (int r = 0; r < n; ++r) std::swap(p[r][i], p[r][j]);
}

}  // namespace

InertiaDecomposition sylvester_diagonalize(const SymmetricForm& c) {
  const int n = c.dim();
  Matrix<Rational> m = c.entries();
  Matrix<Rational> p = identity_matrix<Rational>(n);

  for (int i = 0; i < n; ++i) {
    if (m[i][i] == 0) {
      int diag = -1, off = -1;
      for (int j = i + 1; j < n && diag < 0; ++j)
        if (m[j][j] != 0) diag = j;
      for (int j = i + 1; j < n && off < 0; ++j)
        if (m[i][j] != 0) off = j;
      if (diag >= 0) {
        swap_basis(m, p, i, diag);
      } else if (off >= 0) {
        // All remaining diagonal entries vanish; col_i += col_off turns
        // m[i][i] into 2 m[i][off] != 0.
        add_column(m, p, i, off, Rational(1));
      } else {
        continue;  // row and column i are clear
      }
    }
    const Rational pivot = m[i][i];
    for (int j = i + 1; j < n; ++j) {
      if (m[i][j] == 0) continue;
      add_column(m, p, j, i, Rational(-m[i][j] / pivot));
    }
  }

  InertiaDecomposition out;
  out.transform = std::move(p);
  out.diagonal.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.diagonal.push_back(m[i][i]);
    if (m[i][i] > 0)
      ++out.signature.plus;
    else if (m[i][i] < 0)
      ++out.signature.minus;
    else
      ++out.signature.zero;
  }
  return out;
}

std::vector<SquareTerm> squares_decomposition(const SymmetricForm& c) {
  const InertiaDecomposition dec = sylvester_diagonalize(c);
  auto pinv = inverse(dec.transform);
  if (!pinv) fail(ErrorCode::internal, "congruence transform must be invertible");

  // P^T C P = D means C = (P^-1)^T D P^-1, so p(x) = sum_j d_j (row_j(P^-1) . x)^2.
  std::vector<SquareTerm> terms;
  for (int j = 0; j < c.dim(); ++j) {
    if (dec.diagonal[j] == 0) continue;
    terms.push_back(SquareTerm{dec.diagonal[j], (*pinv)[j]});
  }
  return terms;
}

SymmetricForm riss_form_of(const MonomialForm& p) {
  const int k = p.free_rank();
  Matrix<Rational> entries(k, std::vector<Rational>(k, Rational(0)));
  for (const auto& [idx, value] : p.coeffs()) {
    if (idx.order() != 2)
      fail(ErrorCode::not_homogeneous_degree_2,
           "form has a term of order " + std::to_string(idx.order()));
    if (!value.is_real())
      fail(ErrorCode::not_homogeneous_degree_2,
           "form has a non-real coefficient; symmetric forms are rational");
    int a = -1, b = -1;
    for (int i = 0; i < k; ++i) {
      if (idx[i] == 2) a = b = i;
      if (idx[i] == 1) (a < 0 ? a : b) = i;
    }
    if (a == b) {
      entries[a][a] = value.re;
    } else {
      entries[a][b] = value.re / 2;
      entries[b][a] = entries[a][b];
    }
  }
  return SymmetricForm(std::move(entries));
}

MonomialForm quadratic_polynomial(const SymmetricForm& c, const GroupDescriptor& g) {
  if (g.free_rank() != c.dim())
    fail(ErrorCode::descriptor_mismatch, "matrix dimension does not match free rank");
  MonomialForm out(g);
  for (int i = 0; i < c.dim(); ++i) {
    for (int j = 0; j < c.dim(); ++j) {
      if (c.at(i, j) == 0) continue;
      std::vector<int> e(g.free_rank(), 0);
      e[i] += 1;
      e[j] += 1;
      MultiIndex idx(std::move(e));
      out.set_coeff(idx, out.coeff(idx) + Scalar(c.at(i, j)));
    }
  }
  return out;
}

MonomialForm expand_squares(const std::vector<SquareTerm>& terms, const GroupDescriptor& g) {
  MonomialForm out(g);
  for (const auto& term : terms) {
    if (static_cast<int>(term.functional.size()) != g.free_rank())
      fail(ErrorCode::descriptor_mismatch, "functional length does not match free rank");
    MonomialForm linear(g);
    for (int i = 0; i < g.free_rank(); ++i) {
      if (term.functional[i] == 0) continue;
      std::vector<int> e(g.free_rank(), 0);
      e[i] = 1;
      linear.set_coeff(MultiIndex(std::move(e)), Scalar(term.functional[i]));
    }
    out += linear.multiplied(linear).scaled(Scalar(term.coefficient));
  }
  return out;
}

}  // namespace apc
