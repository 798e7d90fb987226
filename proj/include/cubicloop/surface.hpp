#pragma once

// Points on the cubic surface V : T0^3 + T1^3 + T2^3 + T*T3^3 = 0 over
// Q_3(T), and the chord/tangent geometry on it.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "cubicloop/eisenstein.hpp"
#include "cubicloop/polynomial.hpp"

namespace cubicloop {

/// Classes are residues modulo p^3.
inline constexpr int kClassModulus = 3;
inline constexpr int kDefaultPrecision = 12;
inline constexpr int kMaxPrecision = 48;

/// Coefficients (1, 1, 1, T) of the diagonal form.
const std::array<RingElt, 4>& form_coefficients();

/// Homogeneous coordinates (T0 : T1 : T2 : T3).  Precision is the minimum
/// over the coordinates.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(std::array<RingElt, 4> coords) : coords_(std::move(coords)) {}
  ProjPoint(RingElt t0, RingElt t1, RingElt t2, RingElt t3)
      : coords_{std::move(t0), std::move(t1), std::move(t2), std::move(t3)} {}

  const RingElt& operator[](std::size_t i) const { return coords_[i]; }
  RingElt& operator[](std::size_t i) { return coords_[i]; }
  const std::array<RingElt, 4>& coords() const { return coords_; }

  Precision precision() const;
  ProjPoint truncated(Precision p) const;
  ProjPoint reduced() const;
  ProjPoint scaled(const RingElt& s) const;
  ProjPoint swapped(std::size_t i, std::size_t j) const;

  bool operator==(const ProjPoint&) const = default;

 private:
  std::array<RingElt, 4> coords_;
};

/// Exact a+b*T coordinates joined by ':'.
std::string format_point(const ProjPoint& P);
ProjPoint parse_point(std::string_view text);

/// Residue of a point modulo p^n in the normal form: coordinate `pivot` is 1
/// and every earlier coordinate is divisible by p.
struct CanonicalForm {
  std::array<DigitVector, 4> coords;
  int pivot = 0;

  int modulus() const { return static_cast<int>(coords[0].size()); }
  CanonicalForm truncated(int m) const;
  /// Coordinates rebuilt from the digits, known to modulus() digits.
  ProjPoint to_point() const;
  /// Residues via format_residue, joined by ':'.
  std::string to_literal() const;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct NormalizedPoint {
  ProjPoint point;   ///< point[pivot] == 1
  int pivot = 0;
  int shift = 0;     ///< power of p divided out
};

/// Scales P so the first coordinate of minimal valuation becomes 1.  The
/// result carries at most `cap` digits; an exact result requires the pivot
/// unit to be +-T^i.
NormalizedPoint normalize_point(const ProjPoint& P, Precision cap);
CanonicalForm normalize(const ProjPoint& P, int modulus = kClassModulus);

/// Exact projective equality (all 2x2 minors vanish).
bool projectively_equal(const ProjPoint& P, const ProjPoint& Q);
/// Projective equality with all minors of valuation >= n.
bool projectively_equal_mod(const ProjPoint& P, const ProjPoint& Q, int n);

RingElt eval_form(const ProjPoint& P);

struct CompositionTrace {
  RingElt A;  ///< sum c_i P_i^2 Q_i
  RingElt B;  ///< sum c_i P_i Q_i^2
  /// Digits left after normalizing the third point.
  Precision margin;
  std::optional<RingElt> tau_prime;
};

struct ChordResult {
  ProjPoint point;  ///< B*P - A*Q, not normalized
  CompositionTrace trace;
};

/// Third intersection of the line PQ with V.  Throws PointsCoincide,
/// DegenerateLine or PrecisionExhausted (margin < required_margin).
ChordResult chord(const ProjPoint& P, const ProjPoint& Q, int required_margin = kClassModulus);

/// Third intersection of the tangent line at P in direction D.
ProjPoint tangent_section_point(const ProjPoint& P, const std::array<RingElt, 4>& D);

/// Newton iteration from y0.  Requires v(g(y0)) > 2 v(g'(y0)); the result
/// satisfies v(g(y)) >= N and carries precision N - v(g'(y0)), its distance
/// to the true root.
RingElt hensel_lift_root(const Polynomial& g, const RingElt& y0, int N);

/// Replaces coordinate h by the Hensel root of F = 0 in that coordinate
/// (other coordinates taken as exact).  h must be a unit coordinate of a
/// point with a unit pivot; the result is known to N digits.
ProjPoint solve_for_coordinate(const ProjPoint& P, std::size_t h, int N);

/// Moves a point near V onto V to N digits by solving for one unit
/// coordinate (the last one, so the pivot is untouched).  Exact points of V
/// are returned unchanged.
ProjPoint refine_to_surface(const ProjPoint& P, int N);

}  // namespace cubicloop
