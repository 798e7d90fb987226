#pragma once

// The 243 residue classes of V(K) modulo p^3.
//
// Every class has a unique label from three families (exp in {0,1,2}, all
// other parameters in {-1,0,1}):
//
//   P(i; y,z,u)    = (1, -T^i + p^2 y, y p + p^2 z, -y p + p^2 u)
//   Q(j; y1,z1,u1) = (1, z1 p + p^2 y1, -T^j + p^2 z1, -z1 p + p^2 u1)
//   R(r; x,z2,u2)  = (z2 p + p^2 x, 1, -T^r + p^2 z2, -z2 p + p^2 u2)
//
// ClassId numbers the labels lexicographically by (family, exp, digits).

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicloop/surface.hpp"

namespace cubicloop {

enum class Family { P = 0, Q = 1, R = 2 };

char to_char(Family f);

struct LambdaParams {
  Family family = Family::P;
  int exp = 0;                   ///< i, j or r
  std::array<int, 3> digits{};   ///< (y,z,u), (y1,z1,u1) or (x,z2,u2)

  /// Coefficient of p in the coordinates carrying it (epsilon, delta, sigma).
  int coupled() const { return family == Family::P ? digits[0] : digits[1]; }
  bool valid() const;

  auto operator<=>(const LambdaParams&) const = default;
};

inline constexpr int kClassCount = 243;

struct ClassId {
  int value = 0;
  auto operator<=>(const ClassId&) const = default;
};

ClassId class_id(const LambdaParams& lp);
LambdaParams class_params(ClassId id);

/// The labelled tuple itself (exact, meaningful modulo p^3).
ProjPoint lambda_tuple(const LambdaParams& lp);
/// Coordinate adjusted by Hensel lifting: the -T^e coordinate.
std::size_t hensel_coordinate(Family f);
std::size_t pivot_coordinate(Family f);

const CanonicalForm& class_form(ClassId id);
std::optional<ClassId> find_class(const CanonicalForm& f);
/// Class of a point on V; throws NotOnSurface when the residue is not one of
/// the 243 classes.
ClassId class_of(const ProjPoint& P);
/// Class of a point given as a literal such as "1:-1:0:0".
ClassId class_of(std::string_view literal);

/// Canonical residues of V(K) modulo p^n, n in {1,2,3}.
std::vector<CanonicalForm> enumerate_classes(int n);

/// A point of V in the class of lp, known to N digits.
ProjPoint lift_representative(const LambdaParams& lp, int N);
/// Like lift_representative, with the non-pivot, non-Hensel coordinates
/// perturbed by seeded multiples of p^3.
ProjPoint random_lift(ClassId c, int N, std::uint64_t seed);

struct ParametricResult {
  CanonicalForm form;
  RingElt tau_prime;
};

/// Class of the third point on the line through family-P and family-Q
/// points, from the closed formula (no lifting, no chord).
ParametricResult compose_parametric(const LambdaParams& p, const LambdaParams& q);

std::string to_string(const LambdaParams& lp);

}  // namespace cubicloop
