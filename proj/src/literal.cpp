#include "cubicloop/literal.hpp"

#include <cctype>
#include <sstream>

namespace cubicloop {

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  RingElt parse() {
    RingElt value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  RingElt expr() {
    RingElt value = term();
    for (;;) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else return value;
    }
  }

  RingElt term() {
    RingElt value = unary();
    while (accept('*')) value *= unary();
    return value;
  }

  RingElt unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RingElt power() {
    RingElt base = primary();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("exponent must be a non-negative integer");
    }
    BigInt e = integer();
    if (e > 4096) fail("exponent too large");
    return base.pow(static_cast<unsigned>(e));
  }

  RingElt primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return RingElt(integer(), BigInt(0));
    if (c == 'T') {
      ++pos_;
      return RingElt::theta();
    }
    if (c == 'p') {
      ++pos_;
      return RingElt::uniformizer();
    }
    if (c == '(') {
      ++pos_;
      RingElt inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_term(std::ostringstream& os, int coeff, const std::string& unit, bool first) {
  if (coeff == 0) return;
  if (coeff < 0) os << '-';
  else if (!first) os << '+';
  os << unit;
}

std::string power_name(char base, int k) {
  if (k == 0) return "1";
  if (k == 1) return std::string(1, base);
  return std::string(1, base) + "^" + std::to_string(k);
}

}  // namespace

RingElt parse_element(std::string_view text) { return ElementParser(text).parse(); }

std::array<RingElt, 4> parse_coordinates(std::string_view text) {
  std::array<RingElt, 4> coords;
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t end = text.find(':', start);
    if ((i < 3) != (end != std::string_view::npos)) {
      throw Error(ErrorKind::Parse, "a point needs exactly four ':'-separated coordinates: '" + std::string(text) + "'");
    }
    std::string_view part = text.substr(start, i < 3 ? end - start : std::string_view::npos);
    coords[static_cast<std::size_t>(i)] = parse_element(part);
    start = end + 1;
  }
  return coords;
}

std::string format_element(const RingElt& x) {
  std::ostringstream os;
  const BigInt& a = x.a();
  const BigInt& b = x.b();
  if (b.is_zero()) {
    os << a;
    return os.str();
  }
  bool first = true;
  if (!a.is_zero()) {
    os << a;
    first = false;
  }
  BigInt mag = b < 0 ? BigInt(-b) : b;
  if (b < 0) os << '-';
  else if (!first) os << '+';
  if (mag != 1) os << mag << '*';
  os << 'T';
  return os.str();
}

std::string format_digits(const DigitVector& d) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    append_term(os, d[i], power_name('p', static_cast<int>(i)), first);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string format_residue(const RingElt& x, int n) {
  if (n > 3) return format_digits(to_digits(x, n));
  DigitVector d = to_digits(x, n);
  if (d[0] == 0) {
    // d1*p + d2*p^2
    return format_digits(d);
  }
  // Every unit modulo p^3 is uniquely +-T^i + d*p^2.
  for (int i = 0; i < 3; ++i) {
    for (int sign : {1, -1}) {
      RingElt head = RingElt(sign) * RingElt::theta_power(i);
      for (int tail = -1; tail <= 1; ++tail) {
        if (n < 3 && tail != 0) continue;
        RingElt candidate = head + RingElt(tail) * RingElt::uniformizer_power(2);
        if (to_digits(candidate, n) != d) continue;
        std::ostringstream os;
        if (sign < 0) os << '-';
        os << power_name('T', i);
        append_term(os, tail, "p^2", false);
        return os.str();
      }
    }
  }
  return format_digits(d);
}

}  // namespace cubicloop
