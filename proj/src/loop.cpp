#include "cubicloop/loop.hpp"

#include <algorithm>
#include <random>

#include "cubicloop/error.hpp"

namespace cubicloop {

namespace {

LawCheck make_check(std::string law) {
  LawCheck c;
  c.law = std::move(law);
  return c;
}

void record(LawCheck& c, bool ok, std::initializer_list<Element> args) {
  ++c.checked;
  if (!ok && c.passed) {
    c.passed = false;
    c.counterexample.assign(args);
  }
}

std::vector<Element> closure(int order, const std::vector<Element>& seed,
                             const auto& extend /* (members, mark) */) {
  std::vector<char> in(static_cast<std::size_t>(order), 0);
  std::vector<Element> members;
  auto add = [&](Element e) {
    if (!in[static_cast<std::size_t>(e)]) {
      in[static_cast<std::size_t>(e)] = 1;
      members.push_back(e);
    }
  };
  for (Element e : seed) add(e);
  std::size_t done = 0;
  while (done < members.size()) {
    // Pair the newest unprocessed member with everything found so far.
    Element a = members[done++];
    for (std::size_t k = 0; k < done; ++k) extend(a, members[k], add);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

bool all_passed(const std::vector<LawCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
}

LoopTable loop_from(const ClassTable& t, Element unit) {
  const int n = t.order();
  LoopTable l{CayleyTable(n), unit, std::vector<Element>(static_cast<std::size_t>(n), -1)};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) l.mul.set(x, y, t.circ(unit, t.circ(x, y)));
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (l.mul(x, y) == unit) {
        l.inv[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
    if (l.inv[static_cast<std::size_t>(x)] < 0) {
      throw Error(ErrorKind::InvalidTable, "element " + std::to_string(x) + " has no inverse");
    }
  }
  return l;
}

std::vector<LawCheck> verify_quasigroup(const ClassTable& t) {
  const int n = t.order();
  LawCheck comm = make_check("x o y = y o x");
  LawCheck cancel = make_check("x o (x o y) = y");
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      record(comm, t.circ(x, y) == t.circ(y, x), {x, y});
      record(cancel, t.circ(x, t.circ(x, y)) == y, {x, y});
    }
  }
  return {comm, cancel};
}

LawCheck verify_idempotent(const ClassTable& t) {
  LawCheck c = make_check("x o x = x");
  for (Element x = 0; x < t.order(); ++x) record(c, t.circ(x, x) == x, {x});
  return c;
}

std::vector<LawCheck> verify_cml(const LoopTable& l) {
  const int n = l.order();
  const auto& m = l.mul;
  LawCheck comm = make_check("xy = yx");
  LawCheck unit = make_check("ux = x");
  LawCheck inverse = make_check("x^-1 (xy) = y");
  LawCheck three = make_check("x(xy) = x^2 y");
  LawCheck four_a = make_check("(xy)(xz) = x^2 (yz)");
  LawCheck four_b = make_check("x(y(xz)) = (x^2 y) z");

  for (Element x = 0; x < n; ++x) {
    record(unit, m(l.unit, x) == x, {x});
    const Element xinv = l.inv[static_cast<std::size_t>(x)];
    const Element x2 = m(x, x);
    for (Element y = 0; y < n; ++y) {
      const Element xy = m(x, y);
      record(comm, xy == m(y, x), {x, y});
      record(inverse, m(xinv, xy) == y, {x, y});
      record(three, m(x, xy) == m(x2, y), {x, y});
      const Element x2y = m(x2, y);
      for (Element z = 0; z < n; ++z) {
        const Element xz = m(x, z);
        record(four_a, m(xy, xz) == m(x2, m(y, z)), {x, y, z});
        record(four_b, m(x, m(y, xz)) == m(x2y, z), {x, y, z});
      }
    }
  }
  return {comm, unit, inverse, three, four_a, four_b};
}

Element power(const LoopTable& l, Element x, int k) {
  Element r = l.unit;
  for (int i = 0; i < k; ++i) r = l.mul(x, r);
  return r;
}

int exponent(const LoopTable& l) {
  const int n = l.order();
  for (int e = 1; e <= n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = power(l, x, e) == l.unit;
    if (ok) return e;
  }
  throw Error(ErrorKind::InvalidTable, "no finite exponent");
}

std::vector<Element> nucleus(const LoopTable& l) {
  const int n = l.order();
  std::vector<Element> out;
  for (Element a = 0; a < n; ++a) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      const Element ax = l.mul(a, x);
      for (Element y = 0; y < n; ++y) {
        if (l.mul(ax, y) != l.mul(a, l.mul(x, y))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

bool is_associative_triple(const LoopTable& l, const Triple& t) {
  return l.mul(l.mul(t.x, t.y), t.z) == l.mul(t.x, l.mul(t.y, t.z));
}

std::vector<Triple> find_nonassoc(const LoopTable& l, std::size_t limit) {
  const int n = l.order();
  std::vector<Triple> out;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (out.size() >= limit) return out;
        Triple t{x, y, z};
        if (!is_associative_triple(l, t)) out.push_back(t);
      }
    }
  }
  return out;
}

std::uint64_t count_nonassoc(const LoopTable& l) {
  const int n = l.order();
  std::uint64_t count = 0;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = l.mul(x, y);
      for (Element z = 0; z < n; ++z) count += l.mul(xy, z) != l.mul(x, l.mul(y, z));
    }
  }
  return count;
}

std::vector<Element> subloop(const LoopTable& l, const std::vector<Element>& gens) {
  std::vector<Element> seed = gens;
  seed.push_back(l.unit);
  for (Element g : gens) seed.push_back(l.inv[static_cast<std::size_t>(g)]);
  return closure(l.order(), seed, [&](Element a, Element b, auto& add) {
    add(l.mul(a, b));
    add(l.inv[static_cast<std::size_t>(a)]);
  });
}

std::vector<Element> subquasigroup(const ClassTable& t, const std::vector<Element>& gens) {
  return closure(t.order(), gens, [&](Element a, Element b, auto& add) { add(t.circ(a, b)); });
}

bool is_power_of_three(std::size_t n) {
  if (n == 0) return false;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

ChReport ch_check(const ClassTable& t, const std::vector<Triple>& triples) {
  ChReport report;
  for (const Triple& tr : triples) {
    ++report.triples;
    const std::vector<Element> members = subquasigroup(t, {tr.x, tr.y, tr.z});
    report.largest_closure = std::max(report.largest_closure, members.size());
    const Element u = tr.x;
    auto dot = [&](Element a, Element b) { return t.circ(u, t.circ(a, b)); };
    bool ok = true;
    for (Element a : members) {
      for (Element b : members) {
        if (dot(a, b) != dot(b, a)) ok = false;
        for (Element c : members) {
          if (!ok) break;
          if (dot(dot(a, b), c) != dot(a, dot(b, c))) ok = false;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (ok) ++report.passed;
    else if (!report.first_failure) report.first_failure = tr;
  }
  return report;
}

std::vector<Triple> sample_triples(int order, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Triple> out;
  out.reserve(count);
  auto pick = [&] { return static_cast<Element>(rng() % static_cast<std::uint64_t>(order)); };
  for (std::size_t i = 0; i < count; ++i) {
    Element x = pick();
    Element y = pick();
    Element z = pick();
    out.push_back({x, y, z});
  }
  return out;
}

std::vector<Triple> all_triples(int order) {
  std::vector<Triple> out;
  for (Element x = 0; x < order; ++x) {
    for (Element y = x; y < order; ++y) {
      for (Element z = y; z < order; ++z) out.push_back({x, y, z});
    }
  }
  return out;
}

}  // namespace cubicloop
