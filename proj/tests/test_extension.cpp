#include <doctest.h>

#include <random>

#include "extension.hpp"
#include "oracles.hpp"

using namespace apc;

namespace {

const GroupDescriptor kZ(1, {});
const GroupDescriptor kZ2(2, {});

SemigroupDescriptor orthant(const GroupDescriptor& g) {
  return SemigroupDescriptor(g, SemigroupKind::standard_orthant);
}

// A fresh decomposition of t: the canonical one shifted by a random
// non-negative vector on both sides.
Decomposition random_decomposition(std::mt19937& rng, const SemigroupDescriptor& j,
                                   const GroupElement& t) {
  const auto base = orthant_decompose(j, t);
  GroupElement shift = j.ambient().zero();
  for (auto& c : shift.free) c = std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
  return Decomposition{add(j.ambient(), base.u, shift), add(j.ambient(), base.v, shift)};
}

GroupFunction restrict_to(const SemigroupDescriptor&, const NewtonForm& p) {
  return p.as_function();  // extension code only queries points inside J
}

}  // namespace

TEST_CASE("extension of t^2 from N to Z") {
  const auto j = orthant(kZ);
  GroupFunction q(kZ, [](const GroupElement& t) {
    return Scalar(Integer(Integer(t.free[0]) * Integer(t.free[0])));
  });
  CHECK(extend_eval(j, q, 2, kZ.element({-2}, {})) == Scalar(4));
  CHECK(extend_eval(j, q, 2, kZ.element({3}, {})) == Scalar(9));
  CHECK(extend_eval(j, q, 2, kZ.element({0}, {})) == Scalar());
}

TEST_CASE("extension of st from N^2") {
  const auto j = orthant(kZ2);
  GroupFunction q(kZ2, [](const GroupElement& t) {
    return Scalar(Integer(Integer(t.free[0]) * Integer(t.free[1])));
  });
  CHECK(extend_eval(j, q, 2, kZ2.element({-1, 2}, {})) == Scalar(-2));
  CHECK(extend_eval(j, q, 2, kZ2.element({-2, -3}, {})) == Scalar(6));
}

TEST_CASE("extension agreement with the original form on a box") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 12; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 2)(rng);
    const int degree = std::uniform_int_distribution<int>(0, 4)(rng);
    const GroupDescriptor g(k, {});
    const auto j = orthant(g);
    const NewtonForm p = oracles::random_newton(rng, g, degree);
    const GroupFunction q = restrict_to(j, p);
    for (const auto& t : probe_box(g, 4))
      CHECK(extend_eval(j, q, degree, t) == p.eval(t));
  }
}

TEST_CASE("extension is independent of the decomposition") {
  std::mt19937 rng(888);
  const auto j = orthant(kZ2);
  for (int trial = 0; trial < 10; ++trial) {
    const NewtonForm p = oracles::random_newton(rng, kZ2, 3);
    const GroupFunction q = restrict_to(j, p);
    const auto t = oracles::random_element(rng, kZ2, 4);
    const Scalar canonical = extend_eval(j, q, 3, t);
    for (int alt = 0; alt < 10; ++alt) {
      const auto d = random_decomposition(rng, j, t);
      CHECK(extend_eval(j, q, 3, t, d) == canonical);
    }
  }
}

TEST_CASE("extension preserves degree") {
  std::mt19937 rng(999);
  for (int trial = 0; trial < 6; ++trial) {
    const int degree = std::uniform_int_distribution<int>(1, 3)(rng);
    const NewtonForm p = oracles::random_newton_exact_degree(rng, kZ, degree);
    const auto j = orthant(kZ);
    const GroupFunction q = restrict_to(j, p);
    GroupFunction extended(kZ, [&j, q, degree](const GroupElement& t) {
      return extend_eval(j, q, degree, t);
    });
    CHECK(degree_test(extended, degree));
    CHECK_FALSE(degree_test(extended, degree - 1));
  }
}

TEST_CASE("extension is linear in q") {
  std::mt19937 rng(123);
  const auto j = orthant(kZ2);
  const auto t = kZ2.element({-3, 2}, {});
  const auto d = random_decomposition(rng, j, t);
  for (int trial = 0; trial < 10; ++trial) {
    const NewtonForm a = oracles::random_newton(rng, kZ2, 3);
    const NewtonForm b = oracles::random_newton(rng, kZ2, 3);
    const Scalar lambda = oracles::random_scalar(rng);
    NewtonForm combo = a.scaled(lambda);
    combo += b;
    CHECK(extend_eval(j, combo.as_function(), 3, t, d) ==
          lambda * extend_eval(j, a.as_function(), 3, t, d) +
              extend_eval(j, b.as_function(), 3, t, d));
  }
}

TEST_CASE("well-definedness across decompositions") {
  const auto j = orthant(kZ);
  GroupFunction cube(kZ, [](const GroupElement& t) {
    const Integer v(t.free[0]);
    return Scalar(Integer(v * v * v));
  });
  const auto t1 = kZ.element({1}, {});
  CHECK(well_definedness_check(j, cube, 3, t1,
                               Decomposition{kZ.element({3}, {}), kZ.element({2}, {})},
                               Decomposition{kZ.element({5}, {}), kZ.element({4}, {})}));

  // t = 0 via (w, w).
  CHECK(well_definedness_check(j, cube, 3, kZ.zero(),
                               Decomposition{kZ.element({2}, {}), kZ.element({2}, {})},
                               Decomposition{kZ.element({7}, {}), kZ.element({7}, {})}));

  std::mt19937 rng(321);
  const auto j2 = orthant(kZ2);
  for (int trial = 0; trial < 20; ++trial) {
    const NewtonForm p = oracles::random_newton(rng, kZ2, 3);
    const GroupFunction q = restrict_to(j2, p);
    const auto t = oracles::random_element(rng, kZ2, 4);
    const auto d1 = random_decomposition(rng, j2, t);
    const auto d2 = random_decomposition(rng, j2, t);
    CHECK(well_definedness_check(j2, q, 3, t, d1, d2));
    CHECK(extend_eval(j2, q, 3, t, d1) == p.eval(t));
  }
}

TEST_CASE("the functional L") {
  const auto j = orthant(kZ);
  const GroupFunction c = GroupFunction::constant(kZ, Scalar(Rational(5, 7)));
  const Decomposition d1{kZ.element({3}, {}), kZ.element({2}, {})};
  const Decomposition d2{kZ.element({5}, {}), kZ.element({4}, {})};
  CHECK(l_functional(j, c, d1, d2) == Scalar(Rational(5, 7)));

  GroupFunction identity(kZ, [](const GroupElement& t) { return Scalar(Integer(t.free[0])); });
  CHECK(l_functional(j, identity, d1, d2) == Scalar(1));

  std::mt19937 rng(654);
  for (int trial = 0; trial < 20; ++trial) {
    const NewtonForm p = oracles::random_newton(rng, kZ, 3);
    const GroupFunction q = p.as_function();
    // Both defining expressions computed by hand must match l_functional.
    const Scalar lhs = q(d1.u) - (q(add(kZ, d2.u, d1.v)) - q(d2.u));
    const Scalar rhs = q(d2.u) - (q(add(kZ, d1.u, d2.v)) - q(d1.u));
    CHECK(lhs == rhs);
    CHECK(l_functional(j, q, d1, d2) == lhs);
  }

  const Decomposition bad{kZ.element({4}, {}), kZ.element({2}, {})};
  CHECK_THROWS_AS(l_functional(j, c, d1, bad), Error);
}

TEST_CASE("telescoping identity, both parity branches") {
  const auto j = orthant(kZ);
  const GroupFunction c = GroupFunction::constant(kZ, Scalar(9));
  const Decomposition d1{kZ.element({3}, {}), kZ.element({2}, {})};
  const Decomposition d2{kZ.element({6}, {}), kZ.element({5}, {})};
  CHECK(identity_1_6_check(j, c, 0, d1, d2, kZ.element({4}, {})));

  GroupFunction square(kZ, [](const GroupElement& t) {
    return Scalar(Integer(Integer(t.free[0]) * Integer(t.free[0])));
  });
  CHECK(identity_1_6_check(j, square, 2, d1, d2, kZ.element({0}, {})));
  CHECK(identity_1_6_check(j, square, 2, d1, d2, kZ.element({11}, {})));

  GroupFunction cube(kZ, [](const GroupElement& t) {
    const Integer v(t.free[0]);
    return Scalar(Integer(v * v * v));
  });
  CHECK(identity_1_6_check(j, cube, 3, d1, d2, kZ.element({2}, {})));

  std::mt19937 rng(987);
  const auto j2 = orthant(kZ2);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 4)(rng);
    const NewtonForm p = oracles::random_newton(rng, kZ2, n);
    const GroupFunction q = restrict_to(j2, p);
    const auto t = oracles::random_element(rng, kZ2, 3);
    const auto da = random_decomposition(rng, j2, t);
    const auto db = random_decomposition(rng, j2, t);
    GroupElement w = j2.ambient().zero();
    for (auto& coord : w.free) coord = std::uniform_int_distribution<std::int64_t>(0, 4)(rng);
    CHECK(identity_1_6_check(j2, q, n, da, db, w));
  }
}

TEST_CASE("restriction injectivity certificate") {
  const auto j = orthant(kZ);
  CHECK(restriction_injectivity_check(NewtonForm(kZ, 2), j));

  NewtonForm t_form(kZ, 1);
  t_form.set_coeff(MultiIndex({1}), Scalar(1));
  CHECK(restriction_injectivity_check(t_form, j));  // nonzero on the probe box

  std::mt19937 rng(246);
  const auto j2 = orthant(kZ2);
  for (int trial = 0; trial < 15; ++trial) {
    NewtonForm p = oracles::random_newton(rng, kZ2, 3);
    if (p.is_zero()) p.set_coeff(MultiIndex({1, 0}), Scalar(1));
    bool vanishes_on_box = true;
    for (const auto& t : probe_box(kZ2, 4)) {
      bool in_j = t.free[0] >= 0 && t.free[1] >= 0;
      if (in_j && !p.eval(t).is_zero()) vanishes_on_box = false;
    }
    CHECK_FALSE(vanishes_on_box);
    CHECK(restriction_injectivity_check(p, j2));
  }
}

TEST_CASE("extension error paths") {
  const auto g = kZ;
  const SemigroupDescriptor gens(g, SemigroupKind::generator_list, {g.element({2}, {})});
  GroupFunction q(g, [](const GroupElement& t) { return Scalar(Integer(t.free[0])); });

  // Generator lists have no canonical decomposition.
  try {
    extend_eval(gens, q, 1, g.element({-4}, {}));
    FAIL("expected no_decomposition_available");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_decomposition_available);
  }

  // Membership of supplied points is enforced.
  const auto j = orthant(g);
  try {
    extend_eval(j, q, 1, g.element({-1}, {}),
                Decomposition{g.element({-3}, {}), g.element({-2}, {})});
    FAIL("expected membership_violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::membership_violation);
  }

  // u - v must hit the target.
  try {
    extend_eval(j, q, 1, g.element({-1}, {}),
                Decomposition{g.element({3}, {}), g.element({2}, {})});
    FAIL("expected decomposition_mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::decomposition_mismatch);
  }
}
