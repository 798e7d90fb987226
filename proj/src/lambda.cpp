#include "cubicloop/lambda.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "cubicloop/literal.hpp"

namespace cubicloop {

namespace {

RingElt p_pow(int k) { return RingElt::uniformizer_power(k); }

struct ClassCatalogue {
  std::vector<CanonicalForm> forms;
  std::map<CanonicalForm, ClassId> index;

  ClassCatalogue() {
    forms.reserve(kClassCount);
    for (int id = 0; id < kClassCount; ++id) {
      const LambdaParams lp = class_params(ClassId{id});
      ProjPoint tuple = lambda_tuple(lp);
      // Liftable iff v(F) >= 5: F mod p^5 only depends on the tuple mod p^3,
      // and the unit Hensel coordinate has dF of valuation 2.
      if (!valuation(eval_form(tuple)).at_least(5)) {
        throw std::logic_error("lambda tuple " + to_string(lp) + " does not lift");
      }
      forms.push_back(normalize(tuple, kClassModulus));
      index.emplace(forms.back(), ClassId{id});
    }
    if (index.size() != static_cast<std::size_t>(kClassCount)) throw std::logic_error("lambda labels collide");
  }
};

const ClassCatalogue& catalogue() {
  static const ClassCatalogue c;
  return c;
}

}  // namespace

char to_char(Family f) {
  switch (f) {
    case Family::P: return 'P';
    case Family::Q: return 'Q';
    case Family::R: return 'R';
  }
  return '?';
}

bool LambdaParams::valid() const {
  if (exp < 0 || exp > 2) return false;
  return std::all_of(digits.begin(), digits.end(), [](int d) { return d >= -1 && d <= 1; });
}

std::string to_string(const LambdaParams& lp) {
  std::string s(1, to_char(lp.family));
  s += "(" + std::to_string(lp.exp);
  for (int d : lp.digits) s += "," + std::to_string(d);
  return s + ")";
}

ClassId class_id(const LambdaParams& lp) {
  if (!lp.valid()) throw std::invalid_argument("invalid lambda parameters " + to_string(lp));
  int code = static_cast<int>(lp.family) * 81 + lp.exp * 27;
  code += (lp.digits[0] + 1) * 9 + (lp.digits[1] + 1) * 3 + (lp.digits[2] + 1);
  return ClassId{code};
}

LambdaParams class_params(ClassId id) {
  if (id.value < 0 || id.value >= kClassCount) throw std::out_of_range("class id " + std::to_string(id.value));
  int v = id.value;
  LambdaParams lp;
  lp.family = static_cast<Family>(v / 81);
  lp.exp = (v / 27) % 3;
  lp.digits = {(v / 9) % 3 - 1, (v / 3) % 3 - 1, v % 3 - 1};
  return lp;
}

ProjPoint lambda_tuple(const LambdaParams& lp) {
  const RingElt p = RingElt::uniformizer();
  const RingElt p2 = p_pow(2);
  const RingElt unit = -RingElt::theta_power(lp.exp);
  const RingElt c = RingElt(lp.coupled());
  const auto [d0, d1, d2] = lp.digits;
  switch (lp.family) {
    case Family::P:
      return ProjPoint(RingElt(1), unit + p2 * RingElt(d0), c * p + p2 * RingElt(d1), -c * p + p2 * RingElt(d2));
    case Family::Q:
      return ProjPoint(RingElt(1), c * p + p2 * RingElt(d0), unit + p2 * RingElt(d1), -c * p + p2 * RingElt(d2));
    case Family::R:
      return ProjPoint(c * p + p2 * RingElt(d0), RingElt(1), unit + p2 * RingElt(d1), -c * p + p2 * RingElt(d2));
  }
  throw std::logic_error("unreachable");
}

std::size_t hensel_coordinate(Family f) { return f == Family::P ? 1 : 2; }

std::size_t pivot_coordinate(Family f) { return f == Family::R ? 1 : 0; }

const CanonicalForm& class_form(ClassId id) {
  if (id.value < 0 || id.value >= kClassCount) throw std::out_of_range("class id " + std::to_string(id.value));
  return catalogue().forms[static_cast<std::size_t>(id.value)];
}

std::optional<ClassId> find_class(const CanonicalForm& f) {
  const auto& index = catalogue().index;
  auto it = index.find(f.modulus() == kClassModulus ? f : f.truncated(kClassModulus));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ClassId class_of(const ProjPoint& P) {
  CanonicalForm f = normalize(P, kClassModulus);
  auto id = find_class(f);
  if (!id) throw Error(ErrorKind::NotOnSurface, "residue " + f.to_literal() + " is not a class of V mod p^3");
  return *id;
}

ClassId class_of(std::string_view literal) { return class_of(parse_point(literal)); }

std::vector<CanonicalForm> enumerate_classes(int n) {
  if (n < 1 || n > kClassModulus) throw std::invalid_argument("modulus exponent must be 1, 2 or 3");
  if (n == kClassModulus) return catalogue().forms;

  std::vector<ProjPoint> listed;
  const RingElt p = RingElt::uniformizer();
  if (n == 1) {
    listed = {ProjPoint(1, -1, 0, 0), ProjPoint(1, 0, -1, 0), ProjPoint(0, 1, -1, 0)};
  } else {
    for (Family f : {Family::P, Family::Q, Family::R}) {
      for (int e = 0; e < 3; ++e) {
        for (int c = -1; c <= 1; ++c) {
          const RingElt unit = -RingElt::theta_power(e);
          const RingElt cp = RingElt(c) * p;
          switch (f) {
            case Family::P: listed.emplace_back(RingElt(1), unit, cp, -cp); break;
            case Family::Q: listed.emplace_back(RingElt(1), cp, unit, -cp); break;
            case Family::R: listed.emplace_back(cp, RingElt(1), unit, -cp); break;
          }
        }
      }
    }
  }
  std::vector<CanonicalForm> forms;
  for (const auto& P : listed) forms.push_back(normalize(P, n));

  // The listed residues must be exactly the reductions of the 243 classes.
  std::set<CanonicalForm> reductions;
  for (const auto& f : catalogue().forms) reductions.insert(f.truncated(n));
  if (std::set<CanonicalForm>(forms.begin(), forms.end()) != reductions) {
    throw std::logic_error("residues modulo p^" + std::to_string(n) + " disagree with the class list");
  }
  return forms;
}

ProjPoint lift_representative(const LambdaParams& lp, int N) {
  return solve_for_coordinate(lambda_tuple(lp), hensel_coordinate(lp.family), N);
}

ProjPoint random_lift(ClassId c, int N, std::uint64_t seed) {
  const LambdaParams lp = class_params(c);
  ProjPoint start = lambda_tuple(lp);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(c.value)};
  std::mt19937_64 rng(seq);
  const std::uint64_t half = static_cast<std::uint64_t>(
      boost::multiprecision::pow(BigInt(3), static_cast<unsigned>((N + 1) / 2)));
  auto draw = [&] {
    std::uint64_t r = rng() % (2 * half + 1);
    return BigInt(r) - BigInt(half);
  };
  const RingElt p3 = p_pow(3);
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == pivot_coordinate(lp.family) || k == hensel_coordinate(lp.family)) continue;
    BigInt a = draw();
    BigInt b = draw();
    start[k] += p3 * RingElt(std::move(a), std::move(b));
  }
  return solve_for_coordinate(start, hensel_coordinate(lp.family), N);
}

ParametricResult compose_parametric(const LambdaParams& lp, const LambdaParams& lq) {
  if (lp.family != Family::P || lq.family != Family::Q) {
    throw std::invalid_argument("closed-form composition needs a P label and a Q label");
  }
  const RingElt p = RingElt::uniformizer();
  const RingElt p2 = p_pow(2);
  const int i = lp.exp;
  const int j = lq.exp;
  const RingElt y(lp.digits[0]), z(lp.digits[1]), u(lp.digits[2]);
  const RingElt y1(lq.digits[0]), z1(lq.digits[1]), u1(lq.digits[2]);
  const RingElt ti = RingElt::theta_power(i);
  const RingElt tj = RingElt::theta_power(j);

  RingElt tau = p * (RingElt::theta_power(2 * i) * z1 - RingElt::theta_power(2 * j) * y) +
                p2 * (y1 - z - y * y + y * z1);

  // Third point P + tau (Q - P) with tau = 1/tau', scaled by tau'.
  // P = (1, Y, Z, U).
  const RingElt Y = -ti + p2 * y;
  const RingElt Z = p * y + p2 * z;
  const RingElt U = -p * y + p2 * u;
  ProjPoint R(tau,
              Y * tau + p * z1 + p2 * y1 + ti - p2 * y,
              Z * tau - tj + p2 * z1 - p * y - p2 * z,
              U * tau - p * z1 + p2 * u1 + p * y - p2 * u);
  R = R.truncated(Precision(kClassModulus));
  return ParametricResult{normalize(R, kClassModulus), tau.truncated(Precision(kClassModulus)).reduced()};
}

}  // namespace cubicloop
