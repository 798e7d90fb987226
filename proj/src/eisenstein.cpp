#include "cubicloop/eisenstein.hpp"

#include <boost/integer/mod_inverse.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cubicloop {

namespace {

BigInt power_of_three(int k) {
  return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(k));
}

/// Representative of n mod m in (-m/2, m/2].
BigInt balanced_mod(const BigInt& n, const BigInt& m) {
  BigInt r = n % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

/// Residue of x modulo p as -1, 0 or 1 (T = 1 mod p).
int residue_mod_p(const RingElt& x) {
  int r = static_cast<int>(BigInt((x.a() + x.b()) % 3));
  if (r < 0) r += 3;
  return r == 2 ? -1 : r;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, Precision p) {
  if (p.is_exact()) return os << "exact";
  return os << "p^" << p.digits();
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  if (v.is_infinite()) return os << "inf";
  if (v.below_precision()) os << ">=";
  return os << v.value();
}

RingElt RingElt::uniformizer_power(int k) { return uniformizer().pow(static_cast<unsigned>(k)); }

RingElt RingElt::theta_power(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return RingElt(1, 0);
    case 1: return RingElt(0, 1);
    default: return RingElt(-1, -1);
  }
}

RingElt RingElt::truncated(Precision p) const {
  RingElt r = *this;
  r.prec_ = std::min(prec_, p);
  return r;
}

RingElt RingElt::reduced() const {
  if (prec_.is_exact()) return *this;
  if (prec_.digits() <= 0) return RingElt(BigInt(0), BigInt(0), prec_);
  BigInt m = power_of_three((prec_.digits() + 1) / 2);
  return RingElt(balanced_mod(a_, m), balanced_mod(b_, m), prec_);
}

BigInt RingElt::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

RingElt RingElt::conjugate() const { return RingElt(a_ - b_, -b_, prec_); }

RingElt RingElt::pow(unsigned k) const {
  RingElt result(BigInt(1), BigInt(0), prec_);
  RingElt base = *this;
  while (k != 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

RingElt& RingElt::operator+=(const RingElt& o) {
  a_ += o.a_;
  b_ += o.b_;
  prec_ = std::min(prec_, o.prec_);
  return *this;
}

RingElt& RingElt::operator-=(const RingElt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  prec_ = std::min(prec_, o.prec_);
  return *this;
}

RingElt& RingElt::operator*=(const RingElt& o) {
  // (a + bT)(c + dT) = (ac - bd) + (ad + bc - bd)T
  BigInt bd = b_ * o.b_;
  BigInt a = a_ * o.a_ - bd;
  BigInt b = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(a);
  b_ = std::move(b);
  prec_ = std::min(prec_, o.prec_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const RingElt& x) {
  os << x.a();
  if (x.b() >= 0) os << '+';
  os << x.b() << "*T";
  if (!x.is_exact()) os << " [" << x.precision() << ']';
  return os;
}

DigitVector::DigitVector(std::vector<int> digits) : digits_(std::move(digits)) {
  for (int d : digits_) {
    if (d < -1 || d > 1) throw Error(ErrorKind::Parse, "digit out of {-1,0,1}");
  }
}

DigitVector DigitVector::truncated(std::size_t n) const {
  std::vector<int> d(digits_.begin(), digits_.begin() + static_cast<long>(std::min(n, digits_.size())));
  return DigitVector(std::move(d));
}

std::size_t DigitVector::leading_zeros() const {
  auto it = std::find_if(digits_.begin(), digits_.end(), [](int d) { return d != 0; });
  return static_cast<std::size_t>(it - digits_.begin());
}

std::string DigitVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i != 0) os << ',';
    os << digits_[i];
  }
  os << ']';
  return os.str();
}

DigitVector DigitVector::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw Error(ErrorKind::Parse, "digit vector must look like [d0,d1,...]: " + text);
  }
  std::vector<int> digits;
  std::istringstream in(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "-1") digits.push_back(-1);
    else if (item == "0") digits.push_back(0);
    else if (item == "1") digits.push_back(1);
    else throw Error(ErrorKind::Parse, "bad digit '" + item + "'");
  }
  return DigitVector(std::move(digits));
}

std::ostream& operator<<(std::ostream& os, const DigitVector& d) { return os << d.to_string(); }

int valuation3(const BigInt& n) {
  BigInt m = n < 0 ? BigInt(-n) : n;
  int v = 0;
  BigInt q, r;
  while (!m.is_zero()) {
    boost::multiprecision::divide_qr(m, BigInt(3), q, r);
    if (!r.is_zero()) break;
    m.swap(q);
    ++v;
  }
  return v;
}

Valuation valuation(const RingElt& x) {
  const Precision prec = x.precision();
  if (x.is_zero()) {
    return prec.is_exact() ? Valuation::infinite() : Valuation::at_least_known(prec.digits());
  }
  // N(p) = 3 and K/Z_3 is totally ramified, so v_p(x) = v_3(N(x)).
  int v = valuation3(x.norm());
  if (!prec.is_exact() && v >= prec.digits()) return Valuation::at_least_known(prec.digits());
  return Valuation::of(v);
}

RingElt divide_by_uniformizer(const RingElt& x, int k) {
  // x / p = x (2 + T) / 3 = ((2a - b) + (a + b)T) / 3
  BigInt a = x.a();
  BigInt b = x.b();
  for (int i = 0; i < k; ++i) {
    BigInt s = a + b;
    if (!BigInt(s % 3).is_zero()) {
      throw Error(ErrorKind::NonIntegralQuotient, "value is not divisible by p^" + std::to_string(k));
    }
    BigInt na = (2 * a - b) / 3;
    b = s / 3;
    a = std::move(na);
  }
  return RingElt(std::move(a), std::move(b), x.precision().shifted_down(k));
}

DigitVector to_digits(const RingElt& x, int n) {
  if (!x.precision().at_least(n)) {
    throw Error(ErrorKind::PrecisionExhausted, "need " + std::to_string(n) + " digits, value known to " +
                                                    std::to_string(x.precision().digits()));
  }
  RingElt rest = x.truncated(Precision(n)).reduced();
  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int d = residue_mod_p(rest);
    digits.push_back(d);
    rest = divide_by_uniformizer(rest - RingElt(d), 1);
  }
  return DigitVector(std::move(digits));
}

RingElt from_digits(const DigitVector& d) {
  RingElt sum;
  RingElt power(1);
  const RingElt p = RingElt::uniformizer();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) sum += RingElt(d[i]) * power;
    power *= p;
  }
  return sum;
}

RingElt invert(const RingElt& x, int n) {
  if (residue_mod_p(x) == 0) throw Error(ErrorKind::NonUnitInverse, "value is divisible by p");
  if (n < 1) throw Error(ErrorKind::PrecisionExhausted, "inverse needs at least one digit");
  // x * conj(x) = N(x) is a rational unit; invert it modulo 3^ceil(n/2).
  BigInt m = power_of_three((n + 1) / 2);
  BigInt norm_mod = x.norm() % m;
  if (norm_mod < 0) norm_mod += m;
  BigInt norm_inv = boost::integer::mod_inverse(norm_mod, m);
  RingElt r = x.conjugate() * RingElt(norm_inv, BigInt(0));
  return r.truncated(std::min(Precision(n), x.precision())).reduced();
}

RingElt div_exact(const RingElt& x, const RingElt& y, int n) {
  Valuation vy = valuation(y);
  if (!vy.is_determined()) throw Error(ErrorKind::NonIntegralQuotient, "divisor vanishes to its precision");
  Valuation vx = valuation(x);
  if (!vx.at_least(vy.value())) {
    throw Error(ErrorKind::NonIntegralQuotient,
                "v(x)=" + std::to_string(vx.value()) + " < v(y)=" + std::to_string(vy.value()));
  }
  RingElt xs = divide_by_uniformizer(x, vy.value());
  RingElt ys = divide_by_uniformizer(y, vy.value());
  Precision target = std::min({Precision(n), xs.precision(), ys.precision()});
  if (!target.at_least(1)) throw Error(ErrorKind::PrecisionExhausted, "quotient has no known digits");
  RingElt q = xs * invert(ys, target.digits());
  return q.truncated(target).reduced();
}

bool equal_mod(const RingElt& x, const RingElt& y, int n) {
  if (!x.precision().at_least(n) || !y.precision().at_least(n)) {
    throw Error(ErrorKind::PrecisionExhausted, "comparison modulo p^" + std::to_string(n) + " exceeds precision");
  }
  return valuation(x - y).at_least(n);
}

}  // namespace cubicloop
