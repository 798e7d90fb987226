#pragma once

// Headline facts about the loop of classes, and the non-associative triple
// Q0 = (1, -1+p^2, p, -p), Q1 = (1, 0, -1, 0), Q2 = (0, 1, -T, 0).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubicloop/lambda.hpp"
#include "cubicloop/loop.hpp"
#include "cubicloop/table_builder.hpp"

namespace cubicloop {

/// Class of (1, -1, 0, 0), the default unit.
ClassId unit_class();

struct WitnessTriple {
  ClassId q0, q1, q2;
};
WitnessTriple witness_triple();

/// Residues printed for (Q0 Q1) o Q2 and Q0 o (Q1 Q2).
inline constexpr const char* kWitnessLeftLiteral = "1:-T^2-p^2:-p+p^2:p";
inline constexpr const char* kWitnessRightLiteral = "1:-T^2-p^2:-p+p^2:p-p^2";

struct WitnessResult {
  WitnessTriple triple;
  ClassId q0q1, q1q2;               ///< loop products
  ClassId left_circ, right_circ;    ///< (Q0 Q1) o Q2 and Q0 o (Q1 Q2)
  ClassId left, right;              ///< (Q0 Q1) Q2 and Q0 (Q1 Q2)
  ClassId expected_left_circ, expected_right_circ;
  bool non_associative = false;
  /// Coordinate/digit positions where the two products differ.
  std::vector<std::pair<int, int>> loop_difference;
  std::vector<std::pair<int, int>> circ_difference;

  /// Both o-forms match, the triple is non-associative, and each pair of
  /// sides differs only in the p^2 digit of the fourth coordinate.
  bool ok() const;
};

WitnessResult check_witness(const ClassTable& t, const LoopTable& l);

/// (coordinate, digit) pairs where the canonical forms of a and b differ.
std::vector<std::pair<int, int>> digit_difference(ClassId a, ClassId b);

struct LoopReport {
  int order = 0;
  ClassId unit;
  std::vector<LawCheck> quasigroup;
  LawCheck idempotent;
  std::vector<LawCheck> cml;
  int exponent = 0;
  std::vector<Element> nucleus;
  bool nucleus_is_subloop = false;
  bool nucleus_associative = false;
  std::uint64_t witness_count = 0;
  std::vector<Triple> witnesses;
  std::optional<AdmissibilityStats> admissibility;
  std::optional<ChReport> ch;

  bool ok() const;
};

/// Structural facts; admissibility and the CH check are filled in by the
/// caller when run.
LoopReport make_report(const ClassTable& t, const LoopTable& l, std::size_t witness_limit = 5);

/// True iff `members` is closed under mul and inverses, contains the unit,
/// and mul restricted to it is associative.
bool is_associative_subloop(const LoopTable& l, const std::vector<Element>& members);

std::string class_label(ClassId id);
void print_report(std::ostream& os, const LoopReport& r);
void print_witness(std::ostream& os, const WitnessResult& w);

}  // namespace cubicloop
