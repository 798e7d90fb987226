#pragma once

#include <set>
#include <vector>

#include "cubicloop/lambda.hpp"
#include "cubicloop/literal.hpp"
#include "cubicloop/loop.hpp"
#include "cubicloop/report.hpp"
#include "cubicloop/table_builder.hpp"

namespace cubicloop::test {

inline RingElt E(const char* text) { return parse_element(text); }
inline ProjPoint Pt(const char* text) { return parse_point(text); }

/// Table at the default configuration, built once per test binary.
inline const ClassTable& shared_table() {
  static const ClassTable t = [] {
    BuildOptions o;
    o.admissibility_cells = 0;
    return build_class_table(o);
  }();
  return t;
}

inline const LoopTable& shared_loop() {
  static const LoopTable l = loop_from(shared_table(), unit_class().value);
  return l;
}

inline ClassId cls(const char* literal) { return class_of(literal); }

/// Canonical residues mod p^n of points of V, found without the labelled
/// families: every canonical tuple mod p^3 with v(F) >= 5 (exactly the ones
/// that lift), reduced mod p^n.
inline std::set<CanonicalForm> brute_force_classes(int n) {
  std::vector<DigitVector> all;
  for (int d0 = -1; d0 <= 1; ++d0)
    for (int d1 = -1; d1 <= 1; ++d1)
      for (int d2 = -1; d2 <= 1; ++d2) all.push_back(DigitVector({d0, d1, d2}));
  std::set<CanonicalForm> out;
  const DigitVector one({1, 0, 0});
  for (int pivot = 0; pivot < 4; ++pivot) {
    std::array<std::vector<DigitVector>, 4> choices;
    for (int j = 0; j < 4; ++j) {
      for (const auto& d : all) {
        if (j == pivot && d != one) continue;
        if (j < pivot && d[0] != 0) continue;
        choices[static_cast<std::size_t>(j)].push_back(d);
      }
    }
    for (const auto& a : choices[0])
      for (const auto& b : choices[1])
        for (const auto& c : choices[2])
          for (const auto& d : choices[3]) {
            ProjPoint P(from_digits(a), from_digits(b), from_digits(c), from_digits(d));
            if (!valuation(eval_form(P)).at_least(5)) continue;
            CanonicalForm f;
            f.pivot = pivot;
            f.coords = {a, b, c, d};
            out.insert(f.truncated(n));
          }
  }
  return out;
}

}  // namespace cubicloop::test
