#ifndef POLYSPEC_RANDOM_POLYTOPES_HPP
#define POLYSPEC_RANDOM_POLYTOPES_HPP

// Reproducible random lattice polytopes for fuzzing: random simplices with
// the origin strictly inside, plus occasional free sums of two such
// simplices.  All randomness flows through one mt19937_64 stream, so a seed
// fully determines the sequence of instances and hence the whole fuzz log.

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyspec/errors.hpp"
#include "polyspec/lattice_polytope.hpp"
#include "polyspec/report.hpp"

namespace polyspec {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform draw from [lo, hi], rejection-sampled so the distribution is
  // exactly uniform and stable across platforms.
  long long uniform(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return lo + static_cast<long long>(r % span);
  }

  bool chance(int numerator, int denominator) {
    return uniform(1, denominator) <= numerator;
  }

 private:
  std::mt19937_64 gen_;
};

// A random d-simplex with integer vertex coordinates in [-3, 3] and the
// origin strictly interior.  Draws until the validating constructor accepts.
inline LatticePolytope random_simplex(Rng& rng, int d) {
  for (int attempt = 0; attempt < 50000; ++attempt) {
    std::vector<IVec> verts(d + 1, IVec(d));
    for (IVec& v : verts)
      for (Int& x : v) x = Int(rng.uniform(-3, 3));
    try {
      return LatticePolytope(d, std::move(verts));
    } catch (const Error&) {
      continue;  // degenerate draw; try again
    }
  }
  throw InternalError("could not draw a valid random simplex");
}

// A random instance of dimension <= dim_max: usually a simplex, sometimes
// (about a quarter of the time, when the dimension splits) a free sum of two
// smaller simplices, which is the easiest source of non-simplex vertices.
inline LatticePolytope random_polytope(Rng& rng, int dim_max) {
  const int d = static_cast<int>(rng.uniform(1, dim_max));
  if (d >= 2 && rng.chance(1, 4)) {
    const int d1 = static_cast<int>(rng.uniform(1, d - 1));
    return free_sum(random_simplex(rng, d1), random_simplex(rng, d - d1));
  }
  return random_simplex(rng, d);
}

struct FuzzResult {
  int generated = 0;
  int failed = 0;
  std::vector<std::string> failures;  // one line per failing instance
};

// Run `count` random instances through the full polytope analysis; every
// applicable check must pass.  The log gets one deterministic line per
// instance (no timings), so identical seeds give identical logs.
inline FuzzResult run_fuzz(std::uint64_t seed, int count, int dim_max, std::ostream& log) {
  Rng rng(seed);
  FuzzResult result;
  AnalyzeOptions opts;
  opts.mmax = 4;
  for (int i = 0; i < count; ++i) {
    const LatticePolytope p = random_polytope(rng, dim_max);
    std::ostringstream inst;
    inst << "instance " << i << ": dim " << p.dim() << ", vertices";
    for (const IVec& v : p.vertices()) {
      inst << " (";
      for (std::size_t k = 0; k < v.size(); ++k) inst << (k ? "," : "") << v[k];
      inst << ")";
    }
    const AnalysisReport report = analyze_polytope(p, opts);
    ++result.generated;
    if (report.all_applicable_pass()) {
      log << inst.str() << " -- ok\n";
    } else {
      ++result.failed;
      std::ostringstream line;
      line << inst.str() << " -- FAILED:";
      for (const Json& c : report.doc.at("checks"))
        if (c.at("status").get<std::string>() == "fail")
          line << " " << c.at("name").get<std::string>();
      result.failures.push_back(line.str());
      log << line.str() << "\n";
    }
  }
  return result;
}

}  // namespace polyspec

#endif  // POLYSPEC_RANDOM_POLYTOPES_HPP
