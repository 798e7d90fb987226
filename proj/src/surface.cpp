#include "cubicloop/surface.hpp"

#include <algorithm>

#include "cubicloop/literal.hpp"

namespace cubicloop {

namespace {

constexpr int kMaxNewtonSteps = 128;

RingElt strip_precision(const RingElt& x) { return RingElt(x.a(), x.b()); }

Precision min_precision(const ProjPoint& P, const ProjPoint& Q) { return std::min(P.precision(), Q.precision()); }

}  // namespace

const std::array<RingElt, 4>& form_coefficients() {
  static const std::array<RingElt, 4> c{RingElt(1), RingElt(1), RingElt(1), RingElt::theta()};
  return c;
}

Precision ProjPoint::precision() const {
  Precision p = Precision::exact();
  for (const auto& x : coords_) p = std::min(p, x.precision());
  return p;
}

ProjPoint ProjPoint::truncated(Precision p) const {
  ProjPoint r = *this;
  for (auto& x : r.coords_) x = x.truncated(p);
  return r;
}

ProjPoint ProjPoint::reduced() const {
  ProjPoint r = *this;
  for (auto& x : r.coords_) x = x.reduced();
  return r;
}

ProjPoint ProjPoint::scaled(const RingElt& s) const {
  ProjPoint r = *this;
  for (auto& x : r.coords_) x *= s;
  return r;
}

ProjPoint ProjPoint::swapped(std::size_t i, std::size_t j) const {
  ProjPoint r = *this;
  std::swap(r.coords_[i], r.coords_[j]);
  return r;
}

std::string format_point(const ProjPoint& P) {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != 0) out += ':';
    out += format_element(P[i]);
  }
  return out;
}

ProjPoint parse_point(std::string_view text) { return ProjPoint(parse_coordinates(text)); }

CanonicalForm CanonicalForm::truncated(int m) const {
  CanonicalForm r = *this;
  for (auto& d : r.coords) d = d.truncated(static_cast<std::size_t>(m));
  return r;
}

ProjPoint CanonicalForm::to_point() const {
  ProjPoint P;
  for (std::size_t i = 0; i < 4; ++i) P[i] = from_digits(coords[i]).truncated(Precision(modulus()));
  return P;
}

std::string CanonicalForm::to_literal() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != 0) out += ':';
    out += format_residue(from_digits(coords[i]), modulus());
  }
  return out;
}

NormalizedPoint normalize_point(const ProjPoint& P, Precision cap) {
  const Precision prec = P.precision();
  std::array<Valuation, 4> v{valuation(P[0]), valuation(P[1]), valuation(P[2]), valuation(P[3])};
  int shift = -1;
  int pivot = -1;
  for (int i = 0; i < 4; ++i) {
    const Valuation& vi = v[static_cast<std::size_t>(i)];
    if (!vi.is_determined()) continue;
    if (shift < 0 || vi.value() < shift) {
      shift = vi.value();
      pivot = i;
    }
  }
  if (pivot < 0) throw Error(ErrorKind::PrecisionExhausted, "every coordinate vanishes to the known precision");

  ProjPoint Q;
  for (std::size_t i = 0; i < 4; ++i) Q[i] = divide_by_uniformizer(P[i], shift);
  Precision left = std::min(prec.shifted_down(shift), cap);
  if (!left.at_least(1)) throw Error(ErrorKind::PrecisionExhausted, "no digits left after normalization");

  const RingElt& unit = Q[static_cast<std::size_t>(pivot)];
  RingElt inverse;
  if (unit.norm() == 1) {
    // +-T^i: the conjugate is an exact inverse.
    inverse = strip_precision(unit.conjugate());
  } else {
    if (left.is_exact()) throw Error(ErrorKind::PrecisionExhausted, "exact normalization needs a finite cap");
    inverse = invert(unit, left.digits());
  }
  ProjPoint out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = (Q[i] * inverse).truncated(left).reduced();
  out[static_cast<std::size_t>(pivot)] = RingElt(BigInt(1), BigInt(0), left);
  return NormalizedPoint{std::move(out), pivot, shift};
}

CanonicalForm normalize(const ProjPoint& P, int modulus) {
  NormalizedPoint n = normalize_point(P, Precision(modulus));
  if (!n.point.precision().at_least(modulus)) {
    throw Error(ErrorKind::PrecisionExhausted, "normalized point is known to " +
                                                   std::to_string(n.point.precision().digits()) + " < " +
                                                   std::to_string(modulus) + " digits");
  }
  CanonicalForm f;
  f.pivot = n.pivot;
  for (std::size_t i = 0; i < 4; ++i) f.coords[i] = to_digits(n.point[i], modulus);
  return f;
}

bool projectively_equal(const ProjPoint& P, const ProjPoint& Q) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      RingElt minor = strip_precision(P[i]) * strip_precision(Q[j]) - strip_precision(P[j]) * strip_precision(Q[i]);
      if (!minor.is_zero()) return false;
    }
  }
  return true;
}

bool projectively_equal_mod(const ProjPoint& P, const ProjPoint& Q, int n) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      RingElt minor = P[i] * Q[j] - P[j] * Q[i];
      if (!valuation(minor).at_least(n)) return false;
    }
  }
  return true;
}

RingElt eval_form(const ProjPoint& P) {
  const auto& c = form_coefficients();
  RingElt sum;
  for (std::size_t i = 0; i < 4; ++i) sum += c[i] * P[i].pow(3);
  return sum;
}

ChordResult chord(const ProjPoint& P, const ProjPoint& Q, int required_margin) {
  // F(sP + tQ) = s^3 F(P) + t^3 F(Q) + 3st(sA + tB), so the third root is
  // (s : t) = (B : -A).  The common factor 3 is left out of A and B.
  const auto& c = form_coefficients();
  const Precision prec = min_precision(P, Q);
  RingElt A, B;
  for (std::size_t i = 0; i < 4; ++i) {
    RingElt pq = P[i] * Q[i];
    A += c[i] * pq * P[i];
    B += c[i] * pq * Q[i];
  }
  const int working = prec.is_exact() ? INT_MAX : prec.digits();
  if (valuation(A).at_least(working) && valuation(B).at_least(working)) {
    bool same = prec.is_exact() ? projectively_equal(P, Q) : projectively_equal_mod(P, Q, working);
    if (same) throw Error(ErrorKind::PointsCoincide, "chord through a single point");
    // Only an exact computation can tell a line on V from lost digits.
    if (!prec.is_exact()) throw Error(ErrorKind::PrecisionExhausted, "chord coefficients vanish to working precision");
    throw Error(ErrorKind::DegenerateLine, "line through " + format_point(P) + " and " + format_point(Q) +
                                               " appears to lie on V");
  }

  ProjPoint R;
  for (std::size_t i = 0; i < 4; ++i) R[i] = B * P[i] - A * Q[i];

  int shift = INT_MAX;
  for (const auto& x : R.coords()) {
    Valuation v = valuation(x);
    if (v.is_determined()) shift = std::min(shift, v.value());
  }
  if (shift == INT_MAX) throw Error(ErrorKind::PrecisionExhausted, "third point vanishes to working precision");
  Precision margin = prec.shifted_down(shift);
  if (!margin.at_least(required_margin)) {
    throw Error(ErrorKind::PrecisionExhausted, "chord margin " + std::to_string(margin.digits()) + " < " +
                                                   std::to_string(required_margin));
  }
  return ChordResult{std::move(R), CompositionTrace{std::move(A), std::move(B), margin, std::nullopt}};
}

ProjPoint tangent_section_point(const ProjPoint& P, const std::array<RingElt, 4>& D) {
  const auto& c = form_coefficients();
  RingElt tangency, L2;
  for (std::size_t i = 0; i < 4; ++i) {
    tangency += c[i] * P[i] * P[i] * D[i];
    L2 += c[i] * P[i] * D[i] * D[i];
  }
  const Precision prec = std::min(P.precision(), tangency.precision());
  const int working = prec.is_exact() ? INT_MAX : prec.digits();
  if (!valuation(tangency).at_least(working)) {
    throw Error(ErrorKind::NotTangentDirection, "direction is not in the tangent plane");
  }
  // With tangency, F(sP + tD) = t^2 (3 s L2 + t F(D)); third root (F(D) : -3 L2).
  RingElt L3 = eval_form(ProjPoint(D));
  RingElt three_L2 = RingElt(3) * L2;
  if (valuation(L3).at_least(working) && valuation(three_L2).at_least(working)) return P;
  ProjPoint R;
  for (std::size_t i = 0; i < 4; ++i) R[i] = L3 * P[i] - three_L2 * D[i];
  return R;
}

RingElt hensel_lift_root(const Polynomial& g, const RingElt& y0, int N) {
  const Polynomial dg = g.derivative();
  RingElt y = strip_precision(y0);
  Valuation v0 = valuation(g(y));
  if (v0.is_infinite()) return y0;
  Valuation d0 = valuation(dg(y));
  if (d0.is_infinite() || v0.value() <= 2 * d0.value()) {
    throw Error(ErrorKind::HenselCriterionFailed, "v(g(y0)) = " + std::to_string(v0.value()) +
                                                      " is not above 2 v(g'(y0))");
  }
  const int d = d0.value();
  for (int step = 0; step < kMaxNewtonSteps; ++step) {
    RingElt gy = g(y);
    Valuation v = valuation(gy);
    if (v.at_least(N)) return v.is_infinite() ? y : y.truncated(Precision(std::max(N - d, 0)));
    RingElt correction = div_exact(gy, dg(y), N);
    y = strip_precision((y - correction).truncated(Precision(N + 2)).reduced());
  }
  throw Error(ErrorKind::PrecisionExhausted, "Newton iteration did not reach p^" + std::to_string(N));
}

ProjPoint solve_for_coordinate(const ProjPoint& P, std::size_t h, int N) {
  const auto& c = form_coefficients();
  RingElt rest;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != h) rest += c[i] * strip_precision(P[i]).pow(3);
  }
  Polynomial g({rest, RingElt(), RingElt(), c[h]});
  // Partial derivative at a unit coordinate has valuation 2; aiming for
  // v(F) >= N + 2 pins the root down to N digits.
  RingElt y = hensel_lift_root(g, P[h], N + 2);
  ProjPoint out = P;
  out[h] = y;
  return out;
}

ProjPoint refine_to_surface(const ProjPoint& P, int N) {
  ProjPoint exact_P;
  for (std::size_t i = 0; i < 4; ++i) exact_P[i] = strip_precision(P[i]);
  if (P.precision().is_exact() && eval_form(P).is_zero()) return P;
  NormalizedPoint n = normalize_point(exact_P, Precision(N + 4));
  std::size_t h = 4;
  for (std::size_t i = 4; i-- > 0;) {
    if (static_cast<int>(i) != n.pivot && !valuation(n.point[i]).at_least(1)) {
      h = i;
      break;
    }
  }
  if (h == 4) throw Error(ErrorKind::NotOnSurface, format_point(P) + " is not close to V");
  ProjPoint start = n.point;
  for (std::size_t i = 0; i < 4; ++i) start[i] = strip_precision(start[i]);
  try {
    return solve_for_coordinate(start, h, N).truncated(Precision(N));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::HenselCriterionFailed) {
      throw Error(ErrorKind::NotOnSurface, format_point(P) + " is not close enough to V to lift");
    }
    throw;
  }
}

}  // namespace cubicloop
