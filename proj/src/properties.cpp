#include "cubicloop/properties.hpp"

#include <algorithm>
#include <ostream>

#include "cubicloop/error.hpp"
#include "cubicloop/table_builder.hpp"

namespace cubicloop {

namespace {

ProjPoint exact_copy(const ProjPoint& P) {
  ProjPoint out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = RingElt(P[i].a(), P[i].b());
  return out;
}

RingElt small_element(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  int a = d(rng);
  int b = d(rng);
  return RingElt(a, b);
}

ClassId random_class(std::mt19937_64& rng) { return ClassId{static_cast<int>(rng() % kClassCount)}; }

/// Runs attempt(n) at n = N, 2N, ... while it reports lost precision.
template <class F>
void at_increasing_precision(int N, F&& attempt) {
  for (int n = N;; n *= 2) {
    try {
      attempt(n);
      return;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted || 2 * n > kMaxPrecision) throw;
    }
  }
}

}  // namespace

void PropertyStats::fail(std::string what) {
  ++failed;
  if (!first_failure) first_failure = std::move(what);
}

ProjPoint eckhardt_point(int k) {
  switch (k) {
    case 0: return ProjPoint(1, -1, 0, 0);
    case 1: return ProjPoint(1, 0, -1, 0);
    case 2: return ProjPoint(0, 1, -1, 0);
  }
  throw std::out_of_range("Eckhardt index " + std::to_string(k));
}

std::pair<std::size_t, std::size_t> eckhardt_swap(int k) {
  switch (k) {
    case 0: return {0, 1};
    case 1: return {0, 2};
    case 2: return {1, 2};
  }
  throw std::out_of_range("Eckhardt index " + std::to_string(k));
}

PropertyStats check_eckhardt(int k, int count, int N, std::uint64_t seed) {
  PropertyStats s;
  s.name = "eckhardt U" + std::to_string(k);
  std::mt19937_64 rng(derive_seed(seed, k, 0, 0x45));
  const ProjPoint U = eckhardt_point(k);
  const auto [i, j] = eckhardt_swap(k);
  while (s.checked < static_cast<std::uint64_t>(count)) {
    const ClassId c = random_class(rng);
    const ProjPoint X = exact_copy(random_lift(c, N, rng()));
    if (projectively_equal(X, U)) continue;
    ++s.checked;
    try {
      const ChordResult r = chord(U, X);
      if (!projectively_equal(r.point, X.swapped(i, j))) s.fail("X = " + format_point(X));
    } catch (const Error& e) {
      s.fail(std::string(e.what()) + " at X = " + format_point(X));
    }
  }
  return s;
}

std::array<RingElt, 4> random_tangent_direction(const ProjPoint& P, std::mt19937_64& rng) {
  const auto& c = form_coefficients();
  const int n = P.precision().is_exact() ? kMaxPrecision : P.precision().digits();
  std::array<RingElt, 4> w;
  std::size_t j = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    w[i] = c[i] * P[i] * P[i];
    if (!valuation(w[i]).at_least(1)) j = i;
  }
  if (j == 4) throw Error(ErrorKind::PrecisionExhausted, "point has no unit coordinate");
  std::array<RingElt, 4> D;
  RingElt rest;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == j) continue;
    D[i] = small_element(rng, 4);
    rest += w[i] * D[i];
  }
  D[j] = -div_exact(rest, w[j], n);
  return D;
}

PropertyStats check_tangent_contraction(int points, int directions, int N, std::uint64_t seed) {
  PropertyStats s;
  s.name = "tangent contraction mod p^3";
  const std::array<ClassId, 3> eckhardt{class_of(eckhardt_point(0)), class_of(eckhardt_point(1)),
                                        class_of(eckhardt_point(2))};
  std::mt19937_64 pick(derive_seed(seed, 0, 0, 0x54));
  for (int p = 0; p < points; ++p) {
    ClassId c;
    do c = random_class(pick);
    while (std::find(eckhardt.begin(), eckhardt.end(), c) != eckhardt.end());
    const std::uint64_t lift_seed = pick();
    for (int d = 0; d < directions; ++d) {
      const std::uint64_t dir_seed = pick();
      ++s.checked;
      try {
        at_increasing_precision(N, [&](int n) {
          const ProjPoint P = random_lift(c, n, lift_seed);
          std::mt19937_64 rng(dir_seed);
          const auto D = random_tangent_direction(P, rng);
          const ProjPoint P2 = tangent_section_point(P, D);
          if (normalize(P2, kClassModulus) != normalize(P, kClassModulus)) {
            s.fail("class " + std::to_string(c.value) + ": " + normalize(P2).to_literal() + " vs " +
                   normalize(P).to_literal());
          }
        });
      } catch (const Error& e) {
        s.fail(std::string(e.what()) + " in class " + std::to_string(c.value));
      }
    }
  }
  return s;
}

PropertyStats check_case3_contraction(int i, int count, int N, std::uint64_t seed) {
  PropertyStats s;
  s.name = "chord contraction mod p^" + std::to_string(i);
  std::mt19937_64 rng(derive_seed(seed, i, 0, 0x43));
  while (s.checked < static_cast<std::uint64_t>(count)) {
    const ClassId c1 = random_class(rng);
    const CanonicalForm target = class_form(c1).truncated(i);
    std::vector<ClassId> partners;
    for (int id = 0; id < kClassCount; ++id) {
      if (class_form(ClassId{id}).truncated(i) == target) partners.push_back(ClassId{id});
    }
    const ClassId c2 = partners[rng() % partners.size()];
    const std::uint64_t s1 = rng();
    const std::uint64_t s2 = rng();
    if (c1 == c2 && s1 == s2) continue;
    ++s.checked;
    try {
      at_increasing_precision(N, [&](int n) {
        const ProjPoint P1 = random_lift(c1, n, s1);
        const ProjPoint P2 = random_lift(c2, n, s2);
        const ChordResult r = chord(P1, P2);
        if (normalize(r.point, i) != normalize(P1, i)) {
          s.fail("classes " + std::to_string(c1.value) + ", " + std::to_string(c2.value));
        }
      });
    } catch (const Error& e) {
      s.fail(std::string(e.what()) + " for classes " + std::to_string(c1.value) + ", " + std::to_string(c2.value));
    }
  }
  return s;
}

PropertyStats check_parametric(const ClassTable& t) {
  PropertyStats s;
  s.name = "closed form vs chord on P x Q";
  for (int a = 0; a < 81; ++a) {
    for (int b = 81; b < 162; ++b) {
      ++s.checked;
      const ParametricResult r = compose_parametric(class_params(ClassId{a}), class_params(ClassId{b}));
      const CanonicalForm& expected = class_form(ClassId{t.circ(a, b)});
      if (r.form != expected) {
        s.fail("(" + std::to_string(a) + ", " + std::to_string(b) + "): " + r.form.to_literal() + " vs " +
               expected.to_literal());
      }
    }
  }
  return s;
}

void print_stats(std::ostream& os, const PropertyStats& s) {
  os << (s.ok() ? "pass" : "FAIL") << "  " << s.name << "  (" << s.checked << " checked, " << s.failed
     << " failed)\n";
  if (s.first_failure) os << "  first failure: " << *s.first_failure << '\n';
}

}  // namespace cubicloop
