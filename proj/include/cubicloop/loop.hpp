#pragma once

// Finite symmetric quasigroups and the loops they induce, given as Cayley
// tables over the elements 0..n-1.  Nothing here knows about the surface;
// the class table is just one instance.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cubicloop {

using Element = int;

class CayleyTable {
 public:
  CayleyTable() = default;
  explicit CayleyTable(int order) : order_(order), cells_(static_cast<std::size_t>(order) * order, 0) {}

  int order() const { return order_; }
  Element operator()(Element x, Element y) const { return cells_[index(x, y)]; }
  void set(Element x, Element y, Element v) { cells_[index(x, y)] = v; }
  const std::vector<Element>& cells() const { return cells_; }

  bool operator==(const CayleyTable&) const = default;

 private:
  std::size_t index(Element x, Element y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(y);
  }
  int order_ = 0;
  std::vector<Element> cells_;
};

/// The composition x o y.
struct ClassTable {
  CayleyTable circ;
  int order() const { return circ.order(); }
  bool operator==(const ClassTable&) const = default;
};

/// xy = u o (x o y).
struct LoopTable {
  CayleyTable mul;
  Element unit = 0;
  std::vector<Element> inv;
  int order() const { return mul.order(); }
  bool operator==(const LoopTable&) const = default;
};

struct LawCheck {
  std::string law;
  bool passed = true;
  std::uint64_t checked = 0;
  /// Arguments of the first violation.
  std::vector<Element> counterexample;
};

bool all_passed(const std::vector<LawCheck>& checks);

/// Throws InvalidTable when some row has no inverse for `unit`.
LoopTable loop_from(const ClassTable& t, Element unit);

/// x o y = y o x and x o (x o y) = y, exhaustively.
std::vector<LawCheck> verify_quasigroup(const ClassTable& t);
/// x o x = x for every x.
LawCheck verify_idempotent(const ClassTable& t);
/// Commutativity, unit, inverses and the three weak-associativity laws.
std::vector<LawCheck> verify_cml(const LoopTable& l);

Element power(const LoopTable& l, Element x, int k);
/// Least e >= 1 with x^e = unit for all x.
int exponent(const LoopTable& l);

/// {a : (ax)y = a(xy) for all x, y}.
std::vector<Element> nucleus(const LoopTable& l);

struct Triple {
  Element x = 0, y = 0, z = 0;
  bool operator==(const Triple&) const = default;
};

/// Triples with (xy)z != x(yz) in lexicographic order, at most `limit`.
std::vector<Triple> find_nonassoc(const LoopTable& l, std::size_t limit);
std::uint64_t count_nonassoc(const LoopTable& l);
bool is_associative_triple(const LoopTable& l, const Triple& t);

/// Closure of gens and the unit under multiplication and inverses.
std::vector<Element> subloop(const LoopTable& l, const std::vector<Element>& gens);
/// Closure of gens under o.
std::vector<Element> subquasigroup(const ClassTable& t, const std::vector<Element>& gens);

bool is_power_of_three(std::size_t n);

struct ChReport {
  std::uint64_t triples = 0;
  std::uint64_t passed = 0;
  std::size_t largest_closure = 0;
  std::optional<Triple> first_failure;
  bool ok() const { return passed == triples; }
};

/// For each triple: closure under o, induced law a.b = u' o (a o b) with u'
/// the first generator, checked commutative and associative on the closure.
ChReport ch_check(const ClassTable& t, const std::vector<Triple>& triples);
std::vector<Triple> sample_triples(int order, std::size_t count, std::uint64_t seed);
/// All unordered triples x <= y <= z.
std::vector<Triple> all_triples(int order);

}  // namespace cubicloop
