#include <gtest/gtest.h>

#include <random>

#include "cubicloop/error.hpp"
#include "cubicloop/properties.hpp"
#include "support.hpp"

namespace cubicloop {
namespace {

using test::E;
using test::Pt;

const RingElt T = RingElt::theta();
const RingElt p = RingElt::uniformizer();

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Io;
}

TEST(EvalForm, Examples) {
  EXPECT_TRUE(eval_form(Pt("1:-1:0:0")).is_zero());
  EXPECT_TRUE(eval_form(Pt("0:1:-T:0")).is_zero());
  EXPECT_EQ(valuation(eval_form(Pt("1:-1+p^2:p:-p"))).value(), 5);
}

TEST(EvalForm, FourthCoefficientIsTheta) {
  // T*T3^3 with T0..T2 = 0: distinguishes the form from T0^3 + ... + T*T0^3.
  EXPECT_EQ(eval_form(Pt("0:0:0:1")), T);
  EXPECT_EQ(eval_form(Pt("1:0:0:0")), RingElt(1));
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(Pt("0:-T^2:1:0")), normalize(Pt("0:1:-T:0")));
  EXPECT_EQ(normalize(Pt("0:1:-T:0")).to_literal(), "0:1:-T:0");
  EXPECT_EQ(normalize(Pt("-T^2+p^2:T:p:-p*T^2")).to_literal(), "1:-T^2-p^2:-p+p^2:p");
  EXPECT_EQ(normalize(Pt("p:-p:0:0")).to_literal(), "1:-1:0:0");
  EXPECT_EQ(normalize(Pt("p:-p:0:0")).pivot, 0);
  EXPECT_EQ(normalize(Pt("p:1:0:0")).pivot, 1);
}

TEST(Normalize, PrecisionLoss) {
  ProjPoint P = Pt("p^2:p^3:p^2:0").truncated(Precision(4));
  EXPECT_EQ(kind_of([&] { normalize(P); }), ErrorKind::PrecisionExhausted);
  EXPECT_NO_THROW(normalize(P, 2));
}

TEST(Normalize, Idempotent) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    ProjPoint P = random_lift(ClassId{static_cast<int>(rng() % kClassCount)}, 12, rng());
    CanonicalForm f = normalize(P.scaled(E("2+T") * p.pow(3)));
    EXPECT_EQ(normalize(f.to_point()), f);
    EXPECT_EQ(f, normalize(P));
  }
}

TEST(Chord, ThroughU0SwapsFirstTwo) {
  ProjPoint R = lift_representative({Family::P, 1, {1, -1, 0}}, 12);
  ChordResult c = chord(Pt("1:-1:0:0"), R);
  EXPECT_TRUE(projectively_equal(c.point, R.swapped(0, 1)));
}

TEST(Chord, WorkedExamples) {
  ChordResult q1q2 = chord(Pt("1:0:-1:0"), Pt("0:1:-T:0"));
  EXPECT_TRUE(projectively_equal(q1q2.point, Pt("-T:1:0:0")));
  EXPECT_TRUE(q1q2.trace.margin.is_exact());
  EXPECT_TRUE(projectively_equal(chord(Pt("1:-1:0:0"), Pt("1:0:-1:0")).point, Pt("0:1:-1:0")));
}

TEST(Chord, SamePoint) {
  EXPECT_EQ(kind_of([] { chord(Pt("1:-1:0:0"), Pt("1:-1:0:0")); }), ErrorKind::PointsCoincide);
  ProjPoint R = lift_representative({Family::Q, 2, {0, 1, 1}}, 12);
  EXPECT_EQ(kind_of([&] { chord(R, R.scaled(T)); }), ErrorKind::PointsCoincide);
}

TEST(Chord, DegenerateExactLine) {
  // A = B = 0 for distinct exact points: the chord construction has no third
  // point to offer.  (Both points are off V; V itself carries no such line.)
  EXPECT_EQ(kind_of([] { chord(Pt("1:0:0:0"), Pt("0:1:0:0")); }), ErrorKind::DegenerateLine);
}

TEST(Chord, MarginTooSmall) {
  ProjPoint P = random_lift(ClassId{17}, 6, 1);
  ProjPoint Q = random_lift(ClassId{17}, 6, 2);
  EXPECT_EQ(kind_of([&] { chord(P, Q); }), ErrorKind::PrecisionExhausted);
}

TEST(Chord, SymmetryAndClosureOnRepresentatives) {
  std::vector<ProjPoint> reps;
  for (int id = 0; id < kClassCount; ++id) reps.push_back(lift_representative(class_params(ClassId{id}), 12));
  for (int a = 0; a < kClassCount; a += 2) {
    for (int b = a + 1; b < kClassCount; b += 3) {
      ChordResult r = chord(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]);
      ChordResult s = chord(reps[static_cast<std::size_t>(b)], reps[static_cast<std::size_t>(a)]);
      ASSERT_EQ(normalize(r.point), normalize(s.point));
      NormalizedPoint n = normalize_point(r.point, r.point.precision());
      ASSERT_TRUE(valuation(eval_form(n.point)).at_least(n.point.precision().digits())) << a << "," << b;
    }
  }
}

TEST(Chord, Involution) {
  std::mt19937_64 rng(2);
  int checked = 0;
  while (checked < 300) {
    ProjPoint P = random_lift(ClassId{static_cast<int>(rng() % kClassCount)}, 24, rng());
    ProjPoint Q = random_lift(ClassId{static_cast<int>(rng() % kClassCount)}, 24, rng());
    ChordResult r = chord(P, Q);
    NormalizedPoint R = normalize_point(r.point, r.trace.margin);
    if (projectively_equal_mod(R.point, Q, 3) || projectively_equal_mod(R.point, P, 3)) continue;
    ChordResult back = chord(R.point, Q);
    ASSERT_EQ(normalize(back.point), normalize(P));
    ++checked;
  }
}

TEST(Chord, EckhardtSwaps) {
  for (int k = 0; k < 3; ++k) {
    PropertyStats s = check_eckhardt(k, 200, 12, 11);
    EXPECT_TRUE(s.ok()) << s.first_failure.value_or("");
    EXPECT_EQ(s.checked, 200u);
  }
}

TEST(Tangent, EckhardtCollapse) {
  const ProjPoint U0 = Pt("1:-1:0:0");
  EXPECT_TRUE(projectively_equal(tangent_section_point(U0, {1, -1, 1, 0}), U0));
  EXPECT_TRUE(projectively_equal(tangent_section_point(U0, {0, 0, 0, 1}), U0));
  EXPECT_EQ(kind_of([&] { tangent_section_point(U0, {1, 0, 0, 0}); }), ErrorKind::NotTangentDirection);
}

TEST(Tangent, ThirdPointLiesOnSurface) {
  std::mt19937_64 rng(3);
  const auto& c = form_coefficients();
  for (int i = 0; i < 50; ++i) {
    ProjPoint P = random_lift(ClassId{static_cast<int>(rng() % kClassCount)}, 24, rng());
    auto D = random_tangent_direction(P, rng);
    ProjPoint R = tangent_section_point(P, D);
    NormalizedPoint n = normalize_point(R, R.precision());
    EXPECT_TRUE(valuation(eval_form(n.point)).at_least(n.point.precision().digits()));

    // Dropping the 3 in front of L2 moves the point off V.
    RingElt L2, L3 = eval_form(ProjPoint(D));
    for (std::size_t k = 0; k < 4; ++k) L2 += c[k] * P[k] * D[k] * D[k];
    ProjPoint wrong;
    for (std::size_t k = 0; k < 4; ++k) wrong[k] = L3 * P[k] - L2 * D[k];
    if (valuation(L2).at_least(P.precision().digits())) continue;
    NormalizedPoint w = normalize_point(wrong, wrong.precision());
    EXPECT_FALSE(valuation(eval_form(w.point)).at_least(w.point.precision().digits()));
  }
}

TEST(Tangent, Contraction) {
  PropertyStats s = check_tangent_contraction(20, 5, 24, 5);
  EXPECT_EQ(s.checked, 100u);
  EXPECT_TRUE(s.ok()) << s.first_failure.value_or("");
}

TEST(Case3, Contraction) {
  for (int i = 1; i <= 3; ++i) {
    PropertyStats s = check_case3_contraction(i, 100, 12, 6);
    EXPECT_TRUE(s.ok()) << s.first_failure.value_or("");
  }
}

TEST(Hensel, ExactRoot) {
  Polynomial g({RingElt(0), RingElt(-1), RingElt(0), RingElt(1)});
  EXPECT_EQ(hensel_lift_root(g, RingElt(1), 12), RingElt(1));
}

TEST(Hensel, LiftingEquationOfQ0) {
  // g(y) = F(1, -1+p^2+p^3 y, p, -p) / p^5; the root is forced to -1 mod p.
  const Polynomial X = Polynomial::linear(E("-1+p^2"), p.pow(3));
  Polynomial F = Polynomial::constant(RingElt(1) + p.pow(3) - T * p.pow(3)) + X.pow(3);
  Polynomial g = F.divided_by_uniformizer(5);
  EXPECT_TRUE(valuation(g(RingElt(-1))).at_least(1));
  RingElt y = hensel_lift_root(g, RingElt(-1), 9);
  EXPECT_TRUE(valuation(g(y)).at_least(9));
  EXPECT_TRUE(equal_mod(y, RingElt(-1), 1));
  // Leading behaviour (1+T) - T^2 y = 0 mod p.
  EXPECT_TRUE(valuation(RingElt(1) + T - T * T * y).at_least(1));
}

TEST(Hensel, CriterionFails) {
  Polynomial g({-p, RingElt(0), RingElt(1)});
  EXPECT_EQ(kind_of([&] { hensel_lift_root(g, RingElt(0), 10); }), ErrorKind::HenselCriterionFailed);
}

TEST(Hensel, RootPrecision) {
  // y^3 - 28 has a root near 1 with v(g'(1)) = v(3) = 2, so the root is
  // only pinned down to N - 2 digits.
  Polynomial g({RingElt(-1) - RingElt(27), RingElt(0), RingElt(0), RingElt(1)});
  RingElt y = hensel_lift_root(g, RingElt(1), 12);
  // Any integer representative of y leaves a residual of valuation >= 12.
  EXPECT_TRUE(valuation(g(RingElt(y.a(), y.b()))).at_least(12));
  EXPECT_EQ(y.precision(), Precision(10));
}

TEST(Lift, Representatives) {
  ProjPoint U0 = lift_representative({Family::P, 0, {0, 0, 0}}, 12);
  EXPECT_EQ(U0, Pt("1:-1:0:0"));
  ProjPoint U1 = lift_representative({Family::Q, 0, {0, 0, 0}}, 12);
  EXPECT_EQ(U1, Pt("1:0:-1:0"));
  ProjPoint Q0 = lift_representative({Family::P, 0, {1, 0, 0}}, 12);
  EXPECT_EQ(normalize(Q0).to_literal(), "1:-1+p^2:p:-p");
  EXPECT_TRUE(valuation(eval_form(Q0)).at_least(12));
}

TEST(Lift, EveryLabel) {
  for (int id = 0; id < kClassCount; ++id) {
    const LambdaParams lp = class_params(ClassId{id});
    ProjPoint P = lift_representative(lp, 12);
    ASSERT_TRUE(valuation(eval_form(P)).at_least(12)) << to_string(lp);
    ASSERT_EQ(normalize(P), normalize(lambda_tuple(lp))) << to_string(lp);
    ASSERT_EQ(class_id(lp).value, id);
  }
}

TEST(Lift, RandomLifts) {
  const ClassId u0 = test::cls("1:-1:0:0");
  ProjPoint a = random_lift(u0, 12, 1);
  ProjPoint b = random_lift(u0, 12, 2);
  EXPECT_EQ(normalize(a), normalize(b));
  EXPECT_NE(normalize(a, 5), normalize(b, 5));
  EXPECT_EQ(random_lift(u0, 12, 1), a);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    ClassId c{static_cast<int>(rng() % kClassCount)};
    ProjPoint P = random_lift(c, 12, rng());
    ASSERT_TRUE(valuation(eval_form(P)).at_least(12));
    ASSERT_EQ(class_of(P), c);
  }
}

TEST(Refine, ToSurface) {
  ProjPoint P = refine_to_surface(Pt("1:-1+p^2:p:-p"), 12);
  EXPECT_TRUE(valuation(eval_form(P)).at_least(12));
  EXPECT_EQ(normalize(P).to_literal(), "1:-1+p^2:p:-p");
  EXPECT_EQ(refine_to_surface(Pt("0:1:-T:0"), 12), Pt("0:1:-T:0"));
  EXPECT_EQ(kind_of([] { refine_to_surface(Pt("1:1:0:0"), 12); }), ErrorKind::NotOnSurface);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_classes(1).size(), 3u);
  EXPECT_EQ(enumerate_classes(2).size(), 27u);
  EXPECT_EQ(enumerate_classes(3).size(), 243u);
  EXPECT_THROW(enumerate_classes(4), std::invalid_argument);
}

TEST(Enumerate, ModPListed) {
  std::vector<std::string> got;
  for (const auto& f : enumerate_classes(1)) got.push_back(f.to_literal());
  EXPECT_EQ(got, (std::vector<std::string>{"1:-1:0:0", "1:0:-1:0", "0:1:-1:0"}));
}

TEST(Enumerate, MatchesBruteForce) {
  for (int n = 1; n <= 3; ++n) {
    auto listed = enumerate_classes(n);
    std::set<CanonicalForm> mine(listed.begin(), listed.end());
    EXPECT_EQ(mine.size(), listed.size());
    EXPECT_EQ(mine, test::brute_force_classes(n)) << "n = " << n;
  }
}

TEST(Enumerate, OrderFixesClassId) {
  auto forms = enumerate_classes(3);
  for (int id = 0; id < kClassCount; ++id) {
    ASSERT_EQ(forms[static_cast<std::size_t>(id)], class_form(ClassId{id}));
    ASSERT_EQ(find_class(forms[static_cast<std::size_t>(id)]), ClassId{id});
  }
  EXPECT_EQ(test::cls("1:-1:0:0").value, 13);
}

TEST(Parametric, Examples) {
  ParametricResult u = compose_parametric({Family::P, 0, {0, 0, 0}}, {Family::Q, 0, {0, 0, 0}});
  EXPECT_EQ(u.form, normalize(Pt("0:1:-1:0")));
  EXPECT_TRUE(u.tau_prime.is_zero());
  ParametricResult q = compose_parametric({Family::P, 0, {1, 0, 0}}, {Family::Q, 0, {0, 0, 0}});
  EXPECT_EQ(q.form, normalize(Pt("p:-1+p^2:1:-p")));
  EXPECT_THROW(compose_parametric({Family::Q, 0, {0, 0, 0}}, {Family::Q, 0, {0, 0, 0}}), std::invalid_argument);
}

TEST(Parametric, AgreesWithChordOnAllPairs) {
  PropertyStats s = check_parametric(test::shared_table());
  EXPECT_EQ(s.checked, 81u * 81u);
  EXPECT_TRUE(s.ok()) << s.first_failure.value_or("");
}

}  // namespace
}  // namespace cubicloop
