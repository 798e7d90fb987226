#pragma once

// The 243 x 243 composition table of classes, built by chording lifted
// representatives.

#include <cstdint>
#include <functional>
#include <optional>

#include "cubicloop/lambda.hpp"
#include "cubicloop/loop.hpp"

namespace cubicloop {

struct BuildOptions {
  int precision = kDefaultPrecision;
  std::uint64_t seed = 0;
  int lift_samples = 20;
  /// Cells sampled for the admissibility check; 0 skips it.
  int admissibility_cells = 500;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Deterministic per-task seed from the master seed and a few tags.
std::uint64_t derive_seed(std::uint64_t master, int a, int b, int tag);

/// Class of the third point on the line through P and Q.
ClassId class_of_chord(const ProjPoint& P, const ProjPoint& Q);

/// a o b from two points of V in the given classes: canonical
/// representatives for a != b, two distinct random lifts for a == b.
/// Doubles the precision on PrecisionExhausted, up to kMaxPrecision.
ClassId compose_classes(ClassId a, ClassId b, int N, std::uint64_t seed);

/// a o b from random lifts of both classes (seeded independently).
ClassId compose_random_lifts(ClassId a, ClassId b, int N, std::uint64_t seed_a, std::uint64_t seed_b);

/// Throws AdmissibilityViolation if options.admissibility_cells > 0 and a
/// sampled cell disagrees with its representative result.
ClassTable build_class_table(const BuildOptions& options);

struct AdmissibilityViolationInfo {
  ClassId a, b;
  ClassId expected, found;
  int sample = 0;
};

struct AdmissibilityStats {
  int cells = 0;
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  std::optional<AdmissibilityViolationInfo> first;
  bool ok() const { return violations == 0; }
};

/// Re-composes options.admissibility_cells random cells with
/// options.lift_samples pairs of random lifts each.
AdmissibilityStats sample_admissibility(const ClassTable& t, const BuildOptions& options);
/// As above, but throws AdmissibilityViolation on the first disagreement.
AdmissibilityStats check_admissibility(const ClassTable& t, const BuildOptions& options);

/// Calls f(i) for i in [0, count) on `threads` workers.  The first
/// exception thrown by any call is rethrown.
void parallel_for(int count, unsigned threads, const std::function<void(int)>& f);

}  // namespace cubicloop
