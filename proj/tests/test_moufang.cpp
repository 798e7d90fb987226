// The loop of 243 classes.

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "cubicloop/error.hpp"
#include "support.hpp"

namespace cubicloop {
namespace {

using test::cls;
using test::shared_loop;
using test::shared_table;

int id(const char* literal) { return cls(literal).value; }

TEST(ClassTable, KnownCells) {
  const ClassTable& t = shared_table();
  ASSERT_EQ(t.circ.order(), 243);
  // chord through U0 swaps the first two coordinates
  EXPECT_EQ(t.circ(id("1:-1:0:0"), id("1:0:-1:0")), id("0:1:-1:0"));
  // Q1 o Q2 = (-T, 1, 0, 0)
  EXPECT_EQ(t.circ(id("1:0:-1:0"), id("0:1:-T:0")), id("1:-T^2:0:0"));
  EXPECT_EQ(id("1:-T^2:0:0"), 67);
  const int u0 = id("1:-1:0:0"), u1 = id("1:0:-1:0");
  EXPECT_EQ(t.circ(u0, t.circ(u0, u1)), u1);
}

TEST(ClassTable, DiagonalAndSymmetry) {
  const ClassTable& t = shared_table();
  for (int s = 0; s < 243; ++s) {
    ASSERT_EQ(t.circ(s, s), s);
    for (int r = 0; r < 243; ++r) ASSERT_EQ(t.circ(s, r), t.circ(r, s));
  }
  EXPECT_TRUE(verify_idempotent(t).passed);
  EXPECT_TRUE(all_passed(verify_quasigroup(t)));
}

TEST(ClassTable, IndependentOfSeedAndThreads) {
  BuildOptions o;
  o.admissibility_cells = 0;
  o.seed = 99;
  o.threads = 1;
  EXPECT_TRUE(build_class_table(o).circ == shared_table().circ);
}

TEST(ClassTable, Admissibility) {
  BuildOptions o;
  o.admissibility_cells = 40;
  o.lift_samples = 5;
  o.seed = 3;
  const AdmissibilityStats s = sample_admissibility(shared_table(), o);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.cells, 40);
  EXPECT_EQ(s.pairs, 200u);
}

TEST(ClassTable, AdmissibilityCatchesCorruption) {
  ClassTable bad = shared_table();
  for (int a = 0; a < 243; ++a)
    for (int b = 0; b < 243; ++b) bad.circ.set(a, b, (bad.circ(a, b) + 1) % 243);
  BuildOptions o;
  o.admissibility_cells = 3;
  o.lift_samples = 1;
  EXPECT_FALSE(sample_admissibility(bad, o).ok());
  try {
    check_admissibility(bad, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AdmissibilityViolation);
  }
}

TEST(Loop243, UnitAndInverses) {
  const ClassTable& t = shared_table();
  const LoopTable& l = shared_loop();
  const int u = unit_class().value;
  EXPECT_EQ(u, 13);
  EXPECT_EQ(l.unit, u);
  EXPECT_EQ(l.inv[static_cast<std::size_t>(u)], u);
  for (int x = 0; x < 243; ++x) {
    ASSERT_EQ(l.mul(u, x), x);
    ASSERT_EQ(l.inv[static_cast<std::size_t>(x)], t.circ(x, u));
    ASSERT_EQ(l.mul(x, l.inv[static_cast<std::size_t>(x)]), u);
  }
  EXPECT_EQ(l.mul(id("1:0:-1:0"), id("0:1:-T:0")), id("1:-T:0:0"));
}

TEST(Loop243, CmlLaws) {
  for (const auto& c : verify_cml(shared_loop())) EXPECT_TRUE(c.passed) << c.law;
}

TEST(Loop243, ExponentAndSixthPowers) {
  const LoopTable& l = shared_loop();
  for (int x = 0; x < 243; ++x) ASSERT_EQ(power(l, x, 6), l.unit);
  const int e = exponent(l);
  EXPECT_EQ(6 % e, 0);
  EXPECT_EQ(e, 3);
}

TEST(Loop243, Nucleus) {
  const LoopTable& l = shared_loop();
  const auto n = nucleus(l);
  EXPECT_TRUE(std::binary_search(n.begin(), n.end(), l.unit));
  EXPECT_LT(n.size(), 243u);
  EXPECT_TRUE(is_power_of_three(n.size()));
  EXPECT_TRUE(is_associative_subloop(l, n));
  EXPECT_EQ(subloop(l, n), n);
}

TEST(Loop243, Witness) {
  const WitnessResult w = check_witness(shared_table(), shared_loop());
  EXPECT_TRUE(w.ok());
  EXPECT_EQ(w.triple.q0.value, 22);
  EXPECT_EQ(w.triple.q1.value, 94);
  EXPECT_EQ(w.triple.q2.value, 202);
  EXPECT_EQ(w.left_circ, cls(kWitnessLeftLiteral));
  EXPECT_EQ(w.right_circ, cls(kWitnessRightLiteral));
  EXPECT_NE(w.left, w.right);
  const std::vector<std::pair<int, int>> digit{{3, 2}};
  EXPECT_EQ(w.circ_difference, digit);
  EXPECT_EQ(w.loop_difference, digit);

  const Triple tr{w.triple.q0.value, w.triple.q1.value, w.triple.q2.value};
  EXPECT_FALSE(is_associative_triple(shared_loop(), tr));
}

TEST(Loop243, WitnessIsAmongNonAssociativeTriples) {
  const LoopTable& l = shared_loop();
  const auto first = find_nonassoc(l, 5);
  ASSERT_EQ(first.size(), 5u);
  for (const auto& tr : first) EXPECT_FALSE(is_associative_triple(l, tr));
  const WitnessTriple w = witness_triple();
  const auto all = find_nonassoc(l, std::numeric_limits<std::size_t>::max());
  EXPECT_EQ(all.size(), count_nonassoc(l));
  const bool found = std::any_of(all.begin(), all.end(), [&](const Triple& t) {
    return t.x == w.q0.value && t.y == w.q1.value && t.z == w.q2.value;
  });
  EXPECT_TRUE(found);
}

TEST(Loop243, Subloops) {
  const LoopTable& l = shared_loop();
  EXPECT_EQ(subloop(l, {l.unit}), std::vector<Element>{l.unit});
  for (int x = 0; x < 243; ++x) {
    if (x == l.unit) continue;
    ASSERT_EQ(subloop(l, {x}).size(), 3u);
  }
  const WitnessTriple w = witness_triple();
  EXPECT_TRUE(is_power_of_three(subloop(l, {w.q0.value, w.q1.value, w.q2.value}).size()));
}

TEST(Ch, Examples) {
  const ClassTable& t = shared_table();
  const int s = 100;
  const ChReport one = ch_check(t, {{s, s, s}});
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.largest_closure, 1u);
  EXPECT_EQ(subquasigroup(t, {s}), std::vector<Element>{s});

  const int u0 = id("1:-1:0:0"), u1 = id("1:0:-1:0"), u2 = id("0:1:-1:0");
  EXPECT_TRUE(ch_check(t, {{u0, u1, u2}}).ok());
}

TEST(Ch, RandomTriples) {
  const ChReport r = ch_check(shared_table(), sample_triples(243, 1000, 0));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.triples, 1000u);
  EXPECT_TRUE(is_power_of_three(r.largest_closure));
}

TEST(UnitIndependence, AlternativeUnits) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3; ++i) {
    const int u = static_cast<int>(rng() % 243);
    const LoopTable l = loop_from(shared_table(), u);
    EXPECT_EQ(l.unit, u);
    EXPECT_TRUE(all_passed(verify_cml(l))) << "unit " << u;
    EXPECT_EQ(exponent(l), 3);
  }
}

TEST(Corruption, QuasigroupCitesCell) {
  ClassTable t = shared_table();
  t.circ.set(5, 9, (t.circ(5, 9) + 1) % 243);
  const auto checks = verify_quasigroup(t);
  EXPECT_FALSE(all_passed(checks));
  bool cited = false;
  for (const auto& c : checks) {
    if (c.passed) continue;
    const auto& ce = c.counterexample;
    cited = cited || std::find(ce.begin(), ce.end(), 5) != ce.end() ||
            std::find(ce.begin(), ce.end(), 9) != ce.end();
  }
  EXPECT_TRUE(cited);
}

TEST(Report, HeadlineFacts) {
  const LoopReport r = make_report(shared_table(), shared_loop(), 3);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.order, 243);
  EXPECT_EQ(r.exponent, 3);
  EXPECT_EQ(r.witnesses.size(), 3u);
  EXPECT_GT(r.witness_count, 0u);
  EXPECT_TRUE(r.nucleus_is_subloop);
  EXPECT_TRUE(r.nucleus_associative);
  std::ostringstream os;
  print_report(os, r);
  EXPECT_NE(os.str().find("exponent"), std::string::npos);
}

TEST(Report, ClassLabel) {
  EXPECT_EQ(class_label(ClassId{13}), "13 P(0,0,0,0) 1:-1:0:0");
}

}  // namespace
}  // namespace cubicloop
