#include "cubicloop/report.hpp"

#include <algorithm>
#include <ostream>

#include "cubicloop/literal.hpp"

namespace cubicloop {

ClassId unit_class() { return class_of(ProjPoint(1, -1, 0, 0)); }

WitnessTriple witness_triple() {
  return {class_id({Family::P, 0, {1, 0, 0}}), class_id({Family::Q, 0, {0, 0, 0}}),
          class_id({Family::R, 1, {0, 0, 0}})};
}

std::vector<std::pair<int, int>> digit_difference(ClassId a, ClassId b) {
  const CanonicalForm& fa = class_form(a);
  const CanonicalForm& fb = class_form(b);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 4; ++i) {
    const auto& da = fa.coords[static_cast<std::size_t>(i)];
    const auto& db = fb.coords[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < da.size(); ++k) {
      if (da[k] != db[k]) out.emplace_back(i, static_cast<int>(k));
    }
  }
  return out;
}

bool WitnessResult::ok() const {
  const std::vector<std::pair<int, int>> fourth_p2{{3, 2}};
  return left_circ == expected_left_circ && right_circ == expected_right_circ && non_associative &&
         loop_difference == fourth_p2 && circ_difference == fourth_p2;
}

WitnessResult check_witness(const ClassTable& t, const LoopTable& l) {
  WitnessResult w;
  w.triple = witness_triple();
  const int x = w.triple.q0.value, y = w.triple.q1.value, z = w.triple.q2.value;
  w.q0q1 = ClassId{l.mul(x, y)};
  w.q1q2 = ClassId{l.mul(y, z)};
  w.left_circ = ClassId{t.circ(w.q0q1.value, z)};
  w.right_circ = ClassId{t.circ(x, w.q1q2.value)};
  w.left = ClassId{l.mul(w.q0q1.value, z)};
  w.right = ClassId{l.mul(x, w.q1q2.value)};
  w.expected_left_circ = class_of(kWitnessLeftLiteral);
  w.expected_right_circ = class_of(kWitnessRightLiteral);
  w.non_associative = !is_associative_triple(l, {x, y, z});
  w.loop_difference = digit_difference(w.left, w.right);
  w.circ_difference = digit_difference(w.left_circ, w.right_circ);
  return w;
}

bool is_associative_subloop(const LoopTable& l, const std::vector<Element>& members) {
  std::vector<char> in(static_cast<std::size_t>(l.order()), 0);
  for (Element m : members) in[static_cast<std::size_t>(m)] = 1;
  if (!in[static_cast<std::size_t>(l.unit)]) return false;
  for (Element a : members) {
    if (!in[static_cast<std::size_t>(l.inv[static_cast<std::size_t>(a)])]) return false;
    for (Element b : members) {
      if (!in[static_cast<std::size_t>(l.mul(a, b))]) return false;
      for (Element c : members) {
        if (!is_associative_triple(l, {a, b, c})) return false;
      }
    }
  }
  return true;
}

LoopReport make_report(const ClassTable& t, const LoopTable& l, std::size_t witness_limit) {
  LoopReport r;
  r.order = l.order();
  r.unit = ClassId{l.unit};
  r.quasigroup = verify_quasigroup(t);
  r.idempotent = verify_idempotent(t);
  r.cml = verify_cml(l);
  r.exponent = exponent(l);
  r.nucleus = nucleus(l);
  r.nucleus_is_subloop = subloop(l, r.nucleus) == r.nucleus;
  r.nucleus_associative = is_associative_subloop(l, r.nucleus);
  r.witness_count = count_nonassoc(l);
  r.witnesses = find_nonassoc(l, witness_limit);
  return r;
}

bool LoopReport::ok() const {
  bool good = all_passed(quasigroup) && idempotent.passed && all_passed(cml);
  good = good && exponent > 0 && 6 % exponent == 0;
  const bool unit_in = std::find(nucleus.begin(), nucleus.end(), unit.value) != nucleus.end();
  good = good && unit_in && nucleus_is_subloop && nucleus_associative;
  good = good && static_cast<int>(nucleus.size()) < order && is_power_of_three(nucleus.size());
  good = good && witness_count > 0;
  if (admissibility) good = good && admissibility->ok();
  if (ch) good = good && ch->ok();
  return good;
}

std::string class_label(ClassId id) {
  return std::to_string(id.value) + " " + to_string(class_params(id)) + " " + class_form(id).to_literal();
}

namespace {

void print_check(std::ostream& os, const LawCheck& c) {
  os << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.law << "  (" << c.checked << " checks)";
  if (!c.passed) {
    os << "  counterexample";
    for (Element e : c.counterexample) os << ' ' << e;
  }
  os << '\n';
}

}  // namespace

void print_report(std::ostream& os, const LoopReport& r) {
  os << "order " << r.order << '\n';
  os << "unit " << class_label(r.unit) << '\n';
  os << "quasigroup\n";
  for (const auto& c : r.quasigroup) print_check(os, c);
  print_check(os, r.idempotent);
  os << "moufang\n";
  for (const auto& c : r.cml) print_check(os, c);
  os << "exponent " << r.exponent << (r.exponent > 0 && 6 % r.exponent == 0 ? " (divides 6)" : " (does NOT divide 6)")
     << '\n';
  os << "nucleus size " << r.nucleus.size() << (r.nucleus_is_subloop ? ", subloop" : ", NOT a subloop")
     << (r.nucleus_associative ? ", associative" : ", NOT associative") << '\n';
  os << "non-associative triples " << r.witness_count << '\n';
  for (const auto& w : r.witnesses) os << "  (" << w.x << ", " << w.y << ", " << w.z << ")\n";
  if (r.admissibility) {
    const auto& a = *r.admissibility;
    os << "admissibility " << a.cells << " cells, " << a.pairs << " lift pairs, " << a.violations << " violations\n";
    if (a.first) {
      os << "  first violation at (" << a.first->a.value << ", " << a.first->b.value << "): expected "
         << a.first->expected.value << ", found " << a.first->found.value << '\n';
    }
  }
  if (r.ch) {
    os << "ch " << r.ch->passed << "/" << r.ch->triples << " triples abelian, largest closure "
       << r.ch->largest_closure << '\n';
    if (r.ch->first_failure) {
      const auto& f = *r.ch->first_failure;
      os << "  first failure (" << f.x << ", " << f.y << ", " << f.z << ")\n";
    }
  }
  os << (r.ok() ? "ok" : "FAILED") << '\n';
}

void print_witness(std::ostream& os, const WitnessResult& w) {
  os << "Q0 " << class_label(w.triple.q0) << '\n';
  os << "Q1 " << class_label(w.triple.q1) << '\n';
  os << "Q2 " << class_label(w.triple.q2) << '\n';
  os << "Q0 Q1 " << class_label(w.q0q1) << '\n';
  os << "Q1 Q2 " << class_label(w.q1q2) << '\n';
  os << "(Q0 Q1) o Q2 " << class_label(w.left_circ) << '\n';
  os << "Q0 o (Q1 Q2) " << class_label(w.right_circ) << '\n';
  os << "(Q0 Q1) Q2 " << class_label(w.left) << '\n';
  os << "Q0 (Q1 Q2) " << class_label(w.right) << '\n';
  const auto fourth = [](ClassId c) { return format_residue(class_form(c).to_point()[3], kClassModulus); };
  os << "fourth coordinate " << fourth(w.left_circ) << " vs " << fourth(w.right_circ) << '\n';
  os << (w.ok() ? "non-associative" : "MISMATCH") << '\n';
}

}  // namespace cubicloop
