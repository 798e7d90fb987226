#include "cubicloop/polynomial.hpp"

namespace cubicloop {

Polynomial::Polynomial(std::vector<RingElt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<RingElt> coeffs) : coeffs_(coeffs) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero() && coeffs_.back().is_exact()) coeffs_.pop_back();
}

RingElt Polynomial::operator()(const RingElt& y) const {
  RingElt acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= y;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<RingElt> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(RingElt(static_cast<long long>(k)) * coeffs_[k]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(RingElt(1));
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

Polynomial Polynomial::divided_by_uniformizer(int k) const {
  std::vector<RingElt> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(divide_by_uniformizer(x, k));
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<RingElt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

}  // namespace cubicloop
