#pragma once

// Sampled geometric properties of V and the class composition.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>

#include "cubicloop/lambda.hpp"
#include "cubicloop/loop.hpp"

namespace cubicloop {

struct PropertyStats {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_failure;
  bool ok() const { return failed == 0 && checked > 0; }
  void fail(std::string what);
};

/// U0 = (1,-1,0,0), U1 = (1,0,-1,0), U2 = (0,1,-1,0).
ProjPoint eckhardt_point(int k);
/// Coordinates swapped by the chord through U_k.
std::pair<std::size_t, std::size_t> eckhardt_swap(int k);

/// chord(U_k, X) is exactly proportional to X with the U_k swap applied,
/// for `count` random lifted points X.
PropertyStats check_eckhardt(int k, int count, int N, std::uint64_t seed);

/// A random direction D with sum c_i P_i^2 D_i = 0 to the precision of P.
std::array<RingElt, 4> random_tangent_direction(const ProjPoint& P, std::mt19937_64& rng);

/// tangent_section_point(P, D) = P mod p^3 for `points` random lifts P
/// outside the classes of U0, U1, U2 and `directions` directions each.
PropertyStats check_tangent_contraction(int points, int directions, int N, std::uint64_t seed);

/// chord(P1, P2) = P1 mod p^i whenever P1 = P2 mod p^i, over `count` pairs
/// of distinct random lifts of classes that agree mod p^i.
PropertyStats check_case3_contraction(int i, int count, int N, std::uint64_t seed);

/// compose_parametric against t.circ on all family-P x family-Q pairs.
PropertyStats check_parametric(const ClassTable& t);

void print_stats(std::ostream& os, const PropertyStats& s);

}  // namespace cubicloop
