#pragma once

#include <cstdint>
#include <string>

#include "coinv/field.hpp"
#include "coinv/rational.hpp"
#include "coinv/simplicial_complex.hpp"

namespace coinv {

// One Monte Carlo experiment on random d-complexes with a full (d-1)-skeleton
// and i.i.d. d-faces of probability p.
struct LMConfig {
  int n = 0;
  int d = 0;
  double p = 0.0;
  long long trials = 0;
  std::uint64_t seed = 0;
  Field field = Field::rationals();

  void validate() const;  // throws std::invalid_argument
};

enum class LMMode { homology, wlp_criterion, wlp_direct };

LMMode lm_mode_from_string(const std::string& s);
std::string lm_mode_name(LMMode m);

struct MonteCarloReport {
  long long trials = 0;
  long long hits = 0;
  long long skipped = 0;  // wlp_direct trials over the matrix-size budget
  Rat estimate;           // hits / trials
  Rat mean_fd;            // average number of top faces over all trials
  LMMode mode = LMMode::homology;
};

// The trial-th sample: full (d-1)-skeleton of the simplex on n vertices plus
// each d-face independently with probability p. The random stream is a
// counter-based generator keyed by (seed, trial, face index), so trials are
// order-independent and parallel-safe.
SimplicialComplex sample_complex(const LMConfig& cfg, long long trial);

// homology:      counts trials with nonvanishing top reduced homology.
// wlp_criterion: counts trials where the sufficient failure criterion applies.
// wlp_direct:    counts trials whose uniform cap-(d+2) reduction fails the
//                WLP outright; instances whose largest multiplication matrix
//                exceeds `budget` cells are skipped and reported (budget <= 0
//                disables the limit). Trials run on worker_threads() threads.
MonteCarloReport monte_carlo(const LMConfig& cfg, LMMode mode, long long budget = 50000);

// Threshold constant for top homology of random complexes: 1 when d = 1,
// otherwise the unique positive root of
//   (d+1)(x+1)e^{-x} + x(1-e^{-x})^{d+1} = d+1,
// found by doubling from 1e-6 until the sign flips, then bisecting to tol.
// Always lies in (0, d+1).
double threshold_cd(int d, double tol);

// Worker count for trial-parallel runs: COINV_THREADS when set, otherwise a
// small multiple of the hardware concurrency, at least 1.
int worker_threads();

}  // namespace coinv
