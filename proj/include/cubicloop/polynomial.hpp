#pragma once

#include <initializer_list>
#include <vector>

#include "cubicloop/eisenstein.hpp"

namespace cubicloop {

/// Univariate polynomial over K, coefficients in increasing degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<RingElt> coeffs);
  Polynomial(std::initializer_list<RingElt> coeffs);

  static Polynomial constant(const RingElt& c) { return Polynomial({c}); }
  /// c0 + c1 * y.
  static Polynomial linear(const RingElt& c0, const RingElt& c1) { return Polynomial({c0, c1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RingElt>& coefficients() const { return coeffs_; }

  RingElt operator()(const RingElt& y) const;
  Polynomial derivative() const;
  Polynomial pow(unsigned k) const;

  /// Exact division of every coefficient by p^k.
  Polynomial divided_by_uniformizer(int k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator*(Polynomial x, const Polynomial& y) { return x *= y; }
  friend Polynomial operator*(const RingElt& c, const Polynomial& g) { return Polynomial::constant(c) * g; }

 private:
  void trim();
  std::vector<RingElt> coeffs_;
};

}  // namespace cubicloop
