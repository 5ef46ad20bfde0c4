#include <doctest.h>

#include <random>

#include "difference.hpp"
#include "oracles.hpp"
#include "polynomial.hpp"

using namespace apc;

namespace {

GroupFunction square_on_z() {
  const GroupDescriptor z(1, {});
  return GroupFunction(z, [](const GroupElement& t) {
    return Scalar(Integer(Integer(t.free[0]) * Integer(t.free[0])));
  });
}

GroupFunction cube_on_z() {
  const GroupDescriptor z(1, {});
  return GroupFunction(z, [](const GroupElement& t) {
    const Integer v(t.free[0]);
    return Scalar(Integer(v * v * v));
  });
}

}  // namespace

TEST_CASE("delta of t^2 with step 1 is 2t+1") {
  const GroupDescriptor z(1, {});
  const GroupFunction f = square_on_z();
  const GroupFunction d = delta(f, z.element({1}, {}));
  for (std::int64_t t = -5; t <= 5; ++t)
    CHECK(d(z.element({t}, {})) == Scalar(Integer(2 * t + 1)));
}

TEST_CASE("delta of a constant, and delta with step zero, vanish") {
  const GroupDescriptor z(1, {});
  const GroupFunction c = GroupFunction::constant(z, Scalar(Rational(5, 3)));
  const GroupFunction dc = delta(c, z.element({1}, {}));
  const GroupFunction d0 = delta(square_on_z(), z.zero());
  for (std::int64_t t = -3; t <= 3; ++t) {
    CHECK(dc(z.element({t}, {})).is_zero());
    CHECK(d0(z.element({t}, {})).is_zero());
  }
}

TEST_CASE("iterated delta closed form") {
  const GroupDescriptor z(1, {});
  const GroupFunction f = cube_on_z();
  const GroupElement s = z.element({2}, {});
  for (std::int64_t t = -2; t <= 2; ++t)
    CHECK(iterated_delta(f, s, 3, z.element({t}, {})) == Scalar(48));
  CHECK(iterated_delta(f, s, 0, z.element({5}, {})) == Scalar(125));
}

TEST_CASE("order n+1 differences of degree-n forms vanish") {
  std::mt19937 rng(101);
  const GroupDescriptor g(2, {});
  for (int trial = 0; trial < 20; ++trial) {
    const NewtonForm p = oracles::random_newton(rng, g, 4);
    const GroupFunction f = p.as_function();
    const auto s = oracles::random_element(rng, g, 3);
    const auto t = oracles::random_element(rng, g, 3);
    CHECK(iterated_delta(f, s, 5, t).is_zero());
  }
}

TEST_CASE("closed form matches the nested oracle") {
  std::mt19937 rng(202);
  const GroupDescriptor g(1, {});
  for (int m = 0; m <= 6; ++m) {
    const NewtonForm p = oracles::random_newton(rng, g, 4);
    const GroupFunction f = p.as_function();
    const auto s = oracles::random_element(rng, g, 3);
    const auto t = oracles::random_element(rng, g, 3);
    CHECK(iterated_delta(f, s, m, t) == oracles::nested_delta(f, s, m, t));
  }
  const GroupDescriptor g2(2, {});
  for (int m = 0; m <= 4; ++m) {
    const NewtonForm p = oracles::random_newton(rng, g2, 3);
    const GroupFunction f = p.as_function();
    const auto s = oracles::random_element(rng, g2, 3);
    const auto t = oracles::random_element(rng, g2, 3);
    CHECK(iterated_delta(f, s, m, t) == oracles::nested_delta(f, s, m, t));
  }
}

TEST_CASE("difference operators commute") {
  std::mt19937 rng(303);
  const GroupDescriptor g(2, {});
  for (int trial = 0; trial < 15; ++trial) {
    const NewtonForm p = oracles::random_newton(rng, g, 3);
    const GroupFunction f = p.as_function();
    const auto s1 = oracles::random_element(rng, g, 2);
    const auto s2 = oracles::random_element(rng, g, 2);
    for (const auto& t : probe_box(g, 2)) {
      const Scalar one_way = oracles::nested_delta(delta(f, s1), s2, 0, t);
      const Scalar other_way = oracles::nested_delta(delta(f, s2), s1, 0, t);
      CHECK(delta(delta(f, s1), s2)(t) == delta(delta(f, s2), s1)(t));
      CHECK(one_way == delta(f, s1)(t));
      CHECK(other_way == delta(f, s2)(t));
    }
  }
}

TEST_CASE("shift_expand reproduces forward evaluation") {
  const GroupDescriptor z(1, {});
  const GroupFunction f = square_on_z();
  CHECK(shift_expand(f, z.element({1}, {}), z.element({1}, {}), 3, 2) == Scalar(16));
  CHECK(shift_expand(f, z.element({7}, {}), z.element({2}, {}), 0, 2) == Scalar(49));
  // m = 1 telescopes to f(t+s) even with a generous bound.
  CHECK(shift_expand(f, z.element({3}, {}), z.element({4}, {}), 1, 5) == Scalar(49));

  std::mt19937 rng(404);
  const GroupDescriptor g(2, {});
  for (int m = 0; m <= 8; ++m) {
    const NewtonForm p = oracles::random_newton(rng, g, 4);
    const GroupFunction pf = p.as_function();
    const auto t = oracles::random_element(rng, g, 3);
    const auto s = oracles::random_element(rng, g, 3);
    CHECK(shift_expand(pf, t, s, m, 4) == pf(add(g, t, scalar_mul(g, m, s))));
  }
}

TEST_CASE("backward_eval reaches t - s through forward calls only") {
  const GroupDescriptor z(1, {});
  const GroupFunction f = square_on_z();
  CHECK(backward_eval(f, z.element({0}, {}), z.element({2}, {}), 2) == Scalar(4));
  CHECK(backward_eval(f, z.element({5}, {}), z.zero(), 2) == Scalar(25));
  const GroupFunction c = GroupFunction::constant(z, Scalar(Rational(7, 2)));
  CHECK(backward_eval(c, z.element({9}, {}), z.element({4}, {}), 6) ==
        Scalar(Rational(7, 2)));

  std::mt19937 rng(505);
  const GroupDescriptor g(2, {});
  for (int trial = 0; trial < 25; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 4)(rng);
    const NewtonForm p = oracles::random_newton(rng, g, n);
    const GroupFunction pf = p.as_function();
    const auto t = oracles::random_element(rng, g, 3);
    const auto s = oracles::random_element(rng, g, 3);
    CHECK(backward_eval(pf, t, s, n) == p.eval(sub(g, t, s)));
  }
}

TEST_CASE("degree test on closed forms") {
  const GroupDescriptor z(1, {});
  const GroupFunction f = square_on_z();
  CHECK(degree_test(f, 2));
  CHECK_FALSE(degree_test(f, 1));

  const GroupDescriptor z5(0, {5});
  const GroupFunction c5 = GroupFunction::constant(z5, Scalar(3));
  CHECK(degree_test(c5, 0));

  const GroupDescriptor g2(2, {});
  const GroupFunction st(g2, [](const GroupElement& t) {
    return Scalar(Integer(Integer(t.free[0]) * Integer(t.free[1])));
  });
  CHECK(degree_test(st, 2));
  CHECK_FALSE(degree_test(st, 1));
}

TEST_CASE("degree test brackets the exact degree of random forms") {
  std::mt19937 rng(606);
  const GroupDescriptor g(2, {});
  for (int trial = 0; trial < 10; ++trial) {
    const int degree = std::uniform_int_distribution<int>(1, 3)(rng);
    const NewtonForm p = oracles::random_newton_exact_degree(rng, g, degree);
    const GroupFunction f = p.as_function();
    CHECK(degree_test(f, degree));
    CHECK_FALSE(degree_test(f, degree - 1));
  }
}

TEST_CASE("binomial identity suite") {
  const IdentityReport report = verify_binomial_identities(10);
  CHECK(report.ok);
  CHECK(report.checked == 2 * 66);  // two identities, all 0 <= k <= m <= 10
  CHECK(report.failure.empty());

  // Hand checks behind the report: n = 3 row of the monomial identity.
  auto row_sum = [](int n, int k) {
    Integer sum = 0;
    for (int j = 0; j <= n; ++j) {
      Integer power = (j == 0 && k == 0) ? Integer(1) : int_pow(Integer(j), k);
      Integer term = binomial(n, j) * power;
      if ((n - j) % 2 != 0) term = -term;
      sum += term;
    }
    return sum;
  };
  CHECK(row_sum(3, 3) == 6);
  CHECK(row_sum(3, 0) == 0);
  CHECK(row_sum(3, 1) == 0);
  CHECK(row_sum(3, 2) == 0);
}
