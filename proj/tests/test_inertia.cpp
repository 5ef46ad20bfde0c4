#include <doctest.h>

#include <random>

#include "inertia.hpp"
#include "oracles.hpp"

using namespace apc;

namespace {

Matrix<Rational> to_matrix(std::vector<std::vector<int>> rows) {
  Matrix<Rational> out;
  for (auto& r : rows) {
    std::vector<Rational> row;
    for (int v : r) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

SymmetricForm random_symmetric(std::mt19937& rng, int n) {
  Matrix<Rational> m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m[i][j] = oracles::random_rational(rng);
      m[j][i] = m[i][j];
    }
  return SymmetricForm(std::move(m));
}

Matrix<Rational> random_invertible(std::mt19937& rng, int n) {
  for (;;) {
    Matrix<Rational> q(n, std::vector<Rational>(n, Rational(0)));
    for (auto& row : q)
      for (auto& v : row) v = oracles::random_rational(rng);
    if (inverse(q)) return q;
  }
}

Matrix<Rational> congruent(const Matrix<Rational>& q, const SymmetricForm& c) {
  return multiply(transpose(q), multiply(c.entries(), q));
}

bool is_diagonal(const Matrix<Rational>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && m[i][j] != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("already-diagonal input") {
  const SymmetricForm c(to_matrix({{2, 0}, {0, -3}}));
  const auto dec = sylvester_diagonalize(c);
  CHECK(dec.signature == Signature{1, 1, 0});
  CHECK(congruent(dec.transform, c)[0][0] == dec.diagonal[0]);
}

TEST_CASE("hyperbolic plane needs the rank-2 substitution") {
  const SymmetricForm c(to_matrix({{0, 1}, {1, 0}}));
  const auto dec = sylvester_diagonalize(c);
  CHECK(dec.signature == Signature{1, 1, 0});
  const auto d = congruent(dec.transform, c);
  CHECK(is_diagonal(d));
  CHECK(((d[0][0] > 0 && d[1][1] < 0) || (d[0][0] < 0 && d[1][1] > 0)));
  CHECK(inverse(dec.transform).has_value());
}

TEST_CASE("zero matrix") {
  const auto dec = sylvester_diagonalize(SymmetricForm::zero(3));
  CHECK(dec.signature == Signature{0, 0, 3});
  CHECK(dec.transform == identity_matrix<Rational>(3));
  for (const auto& d : dec.diagonal) CHECK(d == 0);
}

TEST_CASE("hollow matrix with an isolated zero row") {
  const SymmetricForm c(to_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  const auto dec = sylvester_diagonalize(c);
  CHECK(dec.signature == Signature{1, 1, 1});
  const auto d = congruent(dec.transform, c);
  CHECK(is_diagonal(d));
  CHECK(inverse(dec.transform).has_value());
}

TEST_CASE("congruence transform is exact and invertible on random input") {
  std::mt19937 rng(1337);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const SymmetricForm c = random_symmetric(rng, n);
    const auto dec = sylvester_diagonalize(c);
    const auto d = congruent(dec.transform, c);
    CHECK(is_diagonal(d));
    for (int i = 0; i < n; ++i) CHECK(d[i][i] == dec.diagonal[i]);
    CHECK(inverse(dec.transform).has_value());
    CHECK(dec.signature.plus + dec.signature.minus + dec.signature.zero == n);

    // rank = n_plus + n_minus, against the independent elimination oracle.
    CHECK(oracles::echelon_rank(c.entries()) ==
          static_cast<std::size_t>(dec.signature.plus + dec.signature.minus));
  }
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const SymmetricForm c = random_symmetric(rng, n);
    const auto base = sylvester_diagonalize(c).signature;
    const auto q = random_invertible(rng, n);
    const SymmetricForm conj(congruent(q, c));
    CHECK(sylvester_diagonalize(conj).signature == base);
  }
}

TEST_CASE("squares decomposition of 2xy") {
  const GroupDescriptor g(2, {});
  const SymmetricForm c(to_matrix({{0, 1}, {1, 0}}));
  const auto terms = squares_decomposition(c);
  REQUIRE(terms.size() == 2);
  CHECK(expand_squares(terms, g) == quadratic_polynomial(c, g));
}

TEST_CASE("squares decomposition, diagonal cases") {
  const GroupDescriptor g1(1, {});
  const auto single = squares_decomposition(SymmetricForm(to_matrix({{5}})));
  REQUIRE(single.size() == 1);
  CHECK(single[0].coefficient == 5);
  CHECK(single[0].functional == std::vector<Rational>{Rational(1)});

  const GroupDescriptor g2(2, {});
  const auto rank1 = squares_decomposition(SymmetricForm(to_matrix({{1, 0}, {0, 0}})));
  REQUIRE(rank1.size() == 1);
  CHECK(expand_squares(rank1, g2) == quadratic_polynomial(SymmetricForm(to_matrix({{1, 0}, {0, 0}})), g2));
}

TEST_CASE("squares re-expand exactly, with independent functionals") {
  std::mt19937 rng(5555);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const GroupDescriptor g(n, {});
    const SymmetricForm c = random_symmetric(rng, n);
    const auto terms = squares_decomposition(c);
    CHECK(expand_squares(terms, g) == quadratic_polynomial(c, g));

    const auto sig = sylvester_diagonalize(c).signature;
    CHECK(terms.size() == static_cast<std::size_t>(sig.plus + sig.minus));

    Matrix<Rational> rows;
    for (const auto& term : terms) rows.push_back(term.functional);
    if (!rows.empty()) CHECK(oracles::echelon_rank(rows) == rows.size());
  }
}

TEST_CASE("riss form of a quadratic") {
  const GroupDescriptor g(2, {});
  MonomialForm p(g);
  p.set_coeff(MultiIndex({2, 0}), Scalar(1));
  p.set_coeff(MultiIndex({1, 1}), Scalar(4));
  const SymmetricForm c = riss_form_of(p);
  CHECK(c.at(0, 0) == 1);
  CHECK(c.at(0, 1) == 2);
  CHECK(c.at(1, 0) == 2);
  CHECK(c.at(1, 1) == 0);

  CHECK(riss_form_of(MonomialForm(g)) == SymmetricForm::zero(2));

  std::mt19937 rng(6666);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const GroupDescriptor gn(n, {});
    const SymmetricForm c2 = random_symmetric(rng, n);
    const MonomialForm quad = quadratic_polynomial(c2, gn);
    CHECK(riss_form_of(quad) == c2);
    CHECK(quadratic_polynomial(riss_form_of(quad), gn) == quad);
  }
}

TEST_CASE("riss form rejects non-quadratics") {
  const GroupDescriptor g(2, {});
  MonomialForm linear(g);
  linear.set_coeff(MultiIndex({1, 0}), Scalar(1));
  CHECK_THROWS_AS(riss_form_of(linear), Error);

  MonomialForm complex_quad(g);
  complex_quad.set_coeff(MultiIndex({2, 0}), Scalar(Rational(0), Rational(1)));
  CHECK_THROWS_AS(riss_form_of(complex_quad), Error);
}
