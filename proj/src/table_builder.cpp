#include "cubicloop/table_builder.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "cubicloop/error.hpp"

namespace cubicloop {

namespace {

constexpr int kMaxReseeds = 16;

template <class F>
ClassId with_precision_retry(int N, F&& attempt) {
  for (int n = N;; n *= 2) {
    try {
      return attempt(n);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted || 2 * n > kMaxPrecision) throw;
    }
  }
}

ClassId compose_same_class(ClassId a, int N, std::uint64_t seed) {
  for (int k = 0; k < kMaxReseeds; ++k) {
    try {
      return compose_random_lifts(a, a, N, derive_seed(seed, a.value, k, 1), derive_seed(seed, a.value, k, 2));
    } catch (const Error& e) {
      // Both perturbations can come out equal; draw again.
      if (e.kind() != ErrorKind::PointsCoincide) throw;
    }
  }
  throw Error(ErrorKind::PointsCoincide, "could not draw two distinct lifts of class " + std::to_string(a.value));
}

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, int a, int b, int tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(tag)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

void parallel_for(int count, unsigned threads, const std::function<void(int)>& f) {
  const unsigned n = std::min<unsigned>(worker_count(threads), static_cast<unsigned>(std::max(count, 1)));
  if (n <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

ClassId class_of_chord(const ProjPoint& P, const ProjPoint& Q) {
  ChordResult r = chord(P, Q);
  auto id = find_class(normalize(r.point, kClassModulus));
  if (!id) throw Error(ErrorKind::NotOnSurface, "third point is not in any class of V mod p^3");
  return *id;
}

ClassId compose_random_lifts(ClassId a, ClassId b, int N, std::uint64_t seed_a, std::uint64_t seed_b) {
  return with_precision_retry(N, [&](int n) {
    return class_of_chord(random_lift(a, n, seed_a), random_lift(b, n, seed_b));
  });
}

ClassId compose_classes(ClassId a, ClassId b, int N, std::uint64_t seed) {
  if (a == b) return compose_same_class(a, N, seed);
  return with_precision_retry(N, [&](int n) {
    return class_of_chord(lift_representative(class_params(a), n), lift_representative(class_params(b), n));
  });
}

ClassTable build_class_table(const BuildOptions& options) {
  if (options.precision < 6) throw std::invalid_argument("precision must be at least 6");
  const int n = kClassCount;
  const int N = options.precision;

  std::vector<ProjPoint> reps(static_cast<std::size_t>(n));
  parallel_for(n, options.threads, [&](int id) {
    reps[static_cast<std::size_t>(id)] = lift_representative(class_params(ClassId{id}), N);
  });

  ClassTable t{CayleyTable(n)};
  parallel_for(n, options.threads, [&](int a) {
    for (int b = a; b < n; ++b) {
      ClassId c;
      if (a == b) {
        c = compose_same_class(ClassId{a}, N, derive_seed(options.seed, a, b, 0));
      } else {
        try {
          c = class_of_chord(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PrecisionExhausted) throw;
          c = compose_classes(ClassId{a}, ClassId{b}, 2 * N, options.seed);
        }
      }
      // Rows a and b are written by different workers only at (a,b) and
      // (b,a), which are distinct cells.
      t.circ.set(a, b, c.value);
      t.circ.set(b, a, c.value);
    }
  });

  if (options.admissibility_cells > 0) check_admissibility(t, options);
  return t;
}

namespace {

AdmissibilityStats run_admissibility(const ClassTable& t, const BuildOptions& options, bool fatal) {
  const int cells = options.admissibility_cells;
  std::mt19937_64 rng(derive_seed(options.seed, -1, -1, 0));
  std::vector<std::pair<int, int>> picks;
  picks.reserve(static_cast<std::size_t>(std::max(cells, 0)));
  for (int i = 0; i < cells; ++i) {
    int a = static_cast<int>(rng() % kClassCount);
    int b = static_cast<int>(rng() % kClassCount);
    picks.emplace_back(a, b);
  }

  std::vector<std::uint64_t> bad(picks.size(), 0);
  std::vector<std::optional<AdmissibilityViolationInfo>> first(picks.size());
  parallel_for(static_cast<int>(picks.size()), options.threads, [&](int i) {
    const auto [a, b] = picks[static_cast<std::size_t>(i)];
    const ClassId expected{t.circ(a, b)};
    for (int s = 0; s < options.lift_samples; ++s) {
      ClassId found;
      for (int k = 0;; ++k) {
        try {
          found = compose_random_lifts(ClassId{a}, ClassId{b}, options.precision,
                                       derive_seed(options.seed, a, b, 2 * (s + k * options.lift_samples) + 1),
                                       derive_seed(options.seed, a, b, 2 * (s + k * options.lift_samples) + 2));
          break;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PointsCoincide || k + 1 >= kMaxReseeds) throw;
        }
      }
      if (found != expected) {
        AdmissibilityViolationInfo info{ClassId{a}, ClassId{b}, expected, found, s};
        if (fatal) {
          throw Error(ErrorKind::AdmissibilityViolation,
                      "cell (" + std::to_string(a) + "," + std::to_string(b) + ") sample " + std::to_string(s) +
                          ": expected " + std::to_string(expected.value) + ", found " +
                          std::to_string(found.value));
        }
        ++bad[static_cast<std::size_t>(i)];
        if (!first[static_cast<std::size_t>(i)]) first[static_cast<std::size_t>(i)] = info;
      }
    }
  });

  AdmissibilityStats stats;
  stats.cells = cells;
  stats.pairs = static_cast<std::uint64_t>(cells) * static_cast<std::uint64_t>(std::max(options.lift_samples, 0));
  for (std::size_t i = 0; i < picks.size(); ++i) {
    stats.violations += bad[i];
    if (!stats.first && first[i]) stats.first = first[i];
  }
  return stats;
}

}  // namespace

AdmissibilityStats sample_admissibility(const ClassTable& t, const BuildOptions& options) {
  return run_admissibility(t, options, false);
}

AdmissibilityStats check_admissibility(const ClassTable& t, const BuildOptions& options) {
  return run_admissibility(t, options, true);
}

}  // namespace cubicloop
