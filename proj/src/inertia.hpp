#pragma once

#include <vector>

#include "linalg.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"

namespace apc {

// Homogeneous degree-2 forms as rational symmetric matrices, and their exact
// congruence diagonalization. Diagonal entries stay rational: normalizing to
// +-1 would need square roots, and the signature already carries the sign
// data losslessly.

class SymmetricForm {
 public:
  explicit SymmetricForm(Matrix<Rational> entries);
  static SymmetricForm zero(int dim);

  int dim() const { return static_cast<int>(entries_.size()); }
  const Rational& at(int i, int j) const { return entries_[i][j]; }
  const Matrix<Rational>& entries() const { return entries_; }

  friend bool operator==(const SymmetricForm& a, const SymmetricForm& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Matrix<Rational> entries_;
};

struct Signature {
  int plus = 0;
  int minus = 0;
  int zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct InertiaDecomposition {
  Matrix<Rational> transform;      // invertible P with P^T C P diagonal
  std::vector<Rational> diagonal;  // entries of P^T C P
  Signature signature;
};

// Exact rational congruence diagonalization by symmetric elimination; when a
// pivot is missing but an off-diagonal entry survives, the rank-2 column/row
// substitution exposes one.
InertiaDecomposition sylvester_diagonalize(const SymmetricForm& c);

struct SquareTerm {
  Rational coefficient;
  std::vector<Rational> functional;  // row functional alpha; the square is (alpha . x)^2
};

// p(x) = sum_j d_j (alpha_j . x)^2 with the alpha_j linearly independent;
// zero-coefficient directions are dropped, so the term count is
// n_plus + n_minus.
std::vector<SquareTerm> squares_decomposition(const SymmetricForm& c);

// Coefficient bookkeeping from a homogeneous degree-2 monomial form:
// c_ii = coeff(t_i^2), c_ij = coeff(t_i t_j)/2.
SymmetricForm riss_form_of(const MonomialForm& p);

// sum_{i,j} c_ij t_i t_j as a monomial form (the inverse direction).
MonomialForm quadratic_polynomial(const SymmetricForm& c, const GroupDescriptor& g);

// Symbolic expansion of sum_j d_j (alpha_j . t)^2.
MonomialForm expand_squares(const std::vector<SquareTerm>& terms, const GroupDescriptor& g);

}  // namespace apc
