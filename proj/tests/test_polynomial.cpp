#include <doctest.h>

#include <random>

#include "difference.hpp"
#include "oracles.hpp"
#include "polynomial.hpp"

using namespace apc;

namespace {

const GroupDescriptor kZ(1, {});
const GroupDescriptor kZ2(2, {});

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

}  // namespace

TEST_CASE("graded-lex ordering") {
  const auto indices = multi_indices_up_to(2, 2);
  REQUIRE(indices.size() == 6);
  CHECK(indices[0] == mi({0, 0}));
  CHECK(indices[1] == mi({1, 0}));
  CHECK(indices[2] == mi({0, 1}));
  CHECK(indices[3] == mi({2, 0}));
  CHECK(indices[4] == mi({1, 1}));
  CHECK(indices[5] == mi({0, 2}));
}

TEST_CASE("newton evaluation with generalized binomials") {
  NewtonForm p(kZ, 2);
  p.set_coeff(mi({2}), Scalar(1));  // p(t) = C(t, 2)
  CHECK(p.eval(kZ.element({4}, {})) == Scalar(6));
  CHECK(p.eval(kZ.element({0}, {})) == Scalar());
  CHECK(p.eval(kZ.element({-2}, {})) == Scalar(3));

  NewtonForm q(kZ, 1);
  q.set_coeff(mi({0}), Scalar(Rational(5, 2)));
  CHECK(q.eval(kZ.element({0}, {})) == Scalar(Rational(5, 2)));
}

TEST_CASE("torsion coordinates are ignored by evaluation") {
  const GroupDescriptor g(1, {4});
  NewtonForm p(g, 2);
  p.set_coeff(mi({2}), Scalar(1));
  for (std::int64_t tau = 0; tau < 4; ++tau)
    CHECK(p.eval(g.element({5}, {tau})) == Scalar(10));
}

TEST_CASE("newton_from_oracle samples differences at zero") {
  const GroupFunction square(kZ, [](const GroupElement& t) {
    return Scalar(Integer(Integer(t.free[0]) * Integer(t.free[0])));
  });
  const NewtonForm p = newton_from_oracle(square, 2);
  CHECK(p.coeff(mi({0})) == Scalar());
  CHECK(p.coeff(mi({1})) == Scalar(1));
  CHECK(p.coeff(mi({2})) == Scalar(2));

  const GroupFunction c = GroupFunction::constant(kZ, Scalar(Rational(-7, 3)));
  const NewtonForm pc = newton_from_oracle(c, 3);
  CHECK(pc.coeff(mi({0})) == Scalar(Rational(-7, 3)));
  CHECK(pc.degree() == 0);

  // Non-polynomial tables are rejected.
  const GroupFunction weird(kZ, [](const GroupElement& t) {
    const std::int64_t v = t.free[0];
    return Scalar(Integer(v < 0 ? -v : v));  // |t|
  });
  CHECK_THROWS_AS(newton_from_oracle(weird, 2), Error);
}

TEST_CASE("oracle round-trip, negative coordinates included") {
  std::mt19937 rng(909);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    const int degree = std::uniform_int_distribution<int>(0, 4)(rng);
    const GroupDescriptor g(k, {});
    const NewtonForm p = oracles::random_newton(rng, g, degree);
    const NewtonForm back = newton_from_oracle(p.as_function(), degree);
    CHECK(back == p);
    for (int probe = 0; probe < 8; ++probe) {
      const auto t = oracles::random_element(rng, g, 4);
      CHECK(back.eval(t) == p.eval(t));
    }
  }
}

TEST_CASE("basis conversions match the worked examples") {
  NewtonForm p(kZ, 2);
  p.set_coeff(mi({2}), Scalar(1));
  const MonomialForm m = newton_to_monomial(p);
  CHECK(m.coeff(mi({2})) == Scalar(Rational(1, 2)));
  CHECK(m.coeff(mi({1})) == Scalar(Rational(-1, 2)));
  CHECK(m.coeff(mi({0})) == Scalar());

  MonomialForm square(kZ);
  square.set_coeff(mi({2}), Scalar(1));
  const NewtonForm n = monomial_to_newton(square);
  CHECK(n.coeff(mi({1})) == Scalar(1));
  CHECK(n.coeff(mi({2})) == Scalar(2));

  MonomialForm c(kZ);
  c.set_coeff(mi({0}), Scalar(Rational(9, 4)));
  CHECK(newton_to_monomial(monomial_to_newton(c)) == c);
}

TEST_CASE("conversions are mutual inverses") {
  std::mt19937 rng(111);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    const int degree = std::uniform_int_distribution<int>(0, 4)(rng);
    const GroupDescriptor g(k, {});
    const NewtonForm p = oracles::random_newton(rng, g, degree);
    CHECK(monomial_to_newton(newton_to_monomial(p)) == p);

    const MonomialForm q = newton_to_monomial(oracles::random_newton(rng, g, degree));
    CHECK(newton_to_monomial(monomial_to_newton(q)) == q);
  }
}

TEST_CASE("monomial and newton evaluation agree") {
  std::mt19937 rng(222);
  for (int trial = 0; trial < 30; ++trial) {
    const GroupDescriptor g(2, {});
    const NewtonForm p = oracles::random_newton(rng, g, 4);
    const MonomialForm m = newton_to_monomial(p);
    const auto t = oracles::random_element(rng, g, 4);
    CHECK(p.eval(t) == m.eval(t));
  }
}

TEST_CASE("homogeneous parts of t^2 + 3t + 5") {
  MonomialForm q(kZ);
  q.set_coeff(mi({2}), Scalar(1));
  q.set_coeff(mi({1}), Scalar(3));
  q.set_coeff(mi({0}), Scalar(5));
  const NewtonForm p = monomial_to_newton(q);
  const auto parts = homogeneous_parts(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].coeff(mi({0})) == Scalar(5));
  CHECK(parts[1].coeff(mi({1})) == Scalar(3));
  CHECK(parts[2].coeff(mi({2})) == Scalar(1));
}

TEST_CASE("homogeneous parts of st + s") {
  MonomialForm q(kZ2);
  q.set_coeff(mi({1, 1}), Scalar(1));
  q.set_coeff(mi({1, 0}), Scalar(1));
  const NewtonForm p = monomial_to_newton(q);
  const auto parts = homogeneous_parts(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].is_zero());
  CHECK(parts[1].coeff(mi({1, 0})) == Scalar(1));
  CHECK(parts[2].coeff(mi({1, 1})) == Scalar(1));

  // a_2(3t) = 9 a_2(t) at t = (1,1).
  const auto t = kZ2.element({1, 1}, {});
  const auto t3 = scalar_mul(kZ2, 3, t);
  CHECK(parts[2].eval(t3) == Scalar(9) * parts[2].eval(t));
}

TEST_CASE("homogeneous decomposition properties and the Vandermonde oracle") {
  std::mt19937 rng(333);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 2)(rng);
    const int degree = std::uniform_int_distribution<int>(1, 4)(rng);
    const GroupDescriptor g(k, {});
    const NewtonForm p = oracles::random_newton(rng, g, degree);
    const auto parts = homogeneous_parts(p);

    // The parts sum back to p.
    MonomialForm sum(g);
    for (const auto& part : parts) sum += part;
    CHECK(sum == newton_to_monomial(p));

    // Scaling law for every integer -3..3.
    const auto t = oracles::random_element(rng, g, 3);
    for (std::int64_t mval = -3; mval <= 3; ++mval) {
      const auto mt = scalar_mul(g, mval, t);
      for (int j = 0; j <= degree; ++j) {
        Integer mpow(1);
        for (int rep = 0; rep < j; ++rep) mpow *= Integer(mval);
        CHECK(parts[j].eval(mt) == Scalar(mpow) * parts[j].eval(t));
      }
    }

    // Brute-force decomposition: solve the Vandermonde system in m.
    const auto oracle_values = oracles::vandermonde_parts_at(p.as_function(), degree, t);
    for (int j = 0; j <= degree; ++j) CHECK(parts[j].eval(t) == oracle_values[j]);
  }
}

TEST_CASE("leading coefficient in a direction") {
  NewtonForm p = monomial_to_newton(MonomialForm::monomial(kZ, mi({2})));  // t^2
  CHECK(leading_coefficient(p, kZ.element({1}, {})) == Scalar(1));
  CHECK(leading_coefficient(p, kZ.element({3}, {})) == Scalar(9));
  CHECK(leading_coefficient(p, kZ.zero()) == Scalar());
}

TEST_CASE("top difference is independent of the base point") {
  std::mt19937 rng(444);
  for (int trial = 0; trial < 20; ++trial) {
    const GroupDescriptor g(2, {});
    const int degree = std::uniform_int_distribution<int>(1, 4)(rng);
    const NewtonForm p = oracles::random_newton(rng, g, degree);
    const auto s = oracles::random_element(rng, g, 3);
    const GroupFunction f = p.as_function();
    const Scalar at_zero = iterated_delta(f, s, degree, g.zero());
    for (int probe = 0; probe < 10; ++probe) {
      const auto t = oracles::random_element(rng, g, 4);
      CHECK(iterated_delta(f, s, degree, t) == at_zero);
    }
    CHECK(leading_coefficient(p, s) ==
          at_zero / Scalar(factorial(static_cast<unsigned long>(degree))));
  }
}

TEST_CASE("degree_reduce_check certifies homogeneity") {
  NewtonForm p = monomial_to_newton(MonomialForm::monomial(kZ, mi({2})));  // t^2, bound 2
  CHECK_FALSE(degree_reduce_check(p, 1));
  CHECK_THROWS_AS(degree_reduce_check(p, 2), Error);  // k must be < the bound

  // Homogeneous st inside a looser bound: certified at k = 2.
  MonomialForm st(kZ2);
  st.set_coeff(mi({1, 1}), Scalar(1));
  NewtonForm loose(kZ2, 3, monomial_to_newton(st).coeffs());
  CHECK(degree_reduce_check(loose, 2));

  NewtonForm c(kZ, 1);
  c.set_coeff(mi({0}), Scalar(4));
  CHECK(degree_reduce_check(c, 0));
}

TEST_CASE("degree equals the least passing difference test") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 10; ++trial) {
    const GroupDescriptor g(2, {});
    const int degree = std::uniform_int_distribution<int>(1, 3)(rng);
    const NewtonForm p = oracles::random_newton_exact_degree(rng, g, degree);
    CHECK(p.degree() == degree);
    CHECK(newton_to_monomial(p).degree() == degree);
    const GroupFunction f = p.as_function();
    int least = -1;
    for (int n = 0; n <= degree; ++n) {
      if (degree_test(f, n)) {
        least = n;
        break;
      }
    }
    CHECK(least == degree);
  }
}

TEST_CASE("zero polynomial has no degree") {
  const NewtonForm z(kZ, 3);
  CHECK_FALSE(z.degree().has_value());
  CHECK(z.is_zero());
  CHECK(newton_to_monomial(z).is_zero());
}
