#include "coinv/random_lm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "coinv/artinian.hpp"
#include "coinv/homology.hpp"
#include "coinv/matrix.hpp"

namespace coinv {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t trial, std::uint64_t counter) {
  return mix64(mix64(mix64(seed) ^ trial) ^ counter);
}

// Acceptance test for probability p on a uniform 64-bit draw.
bool accept(std::uint64_t draw, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const double scaled = p * 18446744073709551616.0;  // p * 2^64 < 2^64
  return draw < static_cast<std::uint64_t>(scaled);
}

}  // namespace

void LMConfig::validate() const {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  if (n < d + 2) throw std::invalid_argument("need at least d+2 vertices");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0,1]");
  if (trials < 0) throw std::invalid_argument("negative trial count");
  if (n > 30) throw std::invalid_argument("vertex count beyond desk scale");
}

LMMode lm_mode_from_string(const std::string& s) {
  if (s == "homology") return LMMode::homology;
  if (s == "wlp_criterion") return LMMode::wlp_criterion;
  if (s == "wlp_direct") return LMMode::wlp_direct;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

std::string lm_mode_name(LMMode m) {
  switch (m) {
    case LMMode::homology: return "homology";
    case LMMode::wlp_criterion: return "wlp_criterion";
    case LMMode::wlp_direct: return "wlp_direct";
  }
  return "?";
}

SimplicialComplex sample_complex(const LMConfig& cfg, long long trial) {
  cfg.validate();
  std::vector<Face> facets;
  // Full (d-1)-skeleton: every d-subset.
  std::vector<int> sel(cfg.d);
  std::iota(sel.begin(), sel.end(), 0);
  auto next_subset = [&](std::vector<int>& s, int size) {
    int i = size - 1;
    while (i >= 0 && s[i] == cfg.n - size + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < size; ++j) s[j] = s[j - 1] + 1;
    return true;
  };
  do {
    facets.push_back(sel);
  } while (next_subset(sel, cfg.d));
  // d-faces in lexicographic order, one counter value each.
  sel.assign(cfg.d + 1, 0);
  std::iota(sel.begin(), sel.end(), 0);
  std::uint64_t counter = 0;
  do {
    if (accept(counter_draw(cfg.seed, static_cast<std::uint64_t>(trial), counter), cfg.p)) {
      facets.push_back(sel);
    }
    ++counter;
  } while (next_subset(sel, cfg.d + 1));
  return SimplicialComplex::from_facets(facets);
}

namespace {

struct TrialOutcome {
  bool hit = false;
  bool skipped = false;
  long long fd = 0;
};

TrialOutcome run_trial(const LMConfig& cfg, LMMode mode, long long budget, long long trial) {
  TrialOutcome out;
  const SimplicialComplex y = sample_complex(cfg, trial);
  out.fd = y.face_count(cfg.d);
  switch (mode) {
    case LMMode::homology: {
      // No (d+1)-chains, so β̃_d = f_d - rank ∂_d.
      if (out.fd > 0) {
        out.hit = out.fd > rank(boundary_matrix(y, cfg.d), cfg.field);
      }
      break;
    }
    case LMMode::wlp_criterion: {
      if (y.dim() == cfg.d) {
        out.hit = guaranteed_failure(y, cfg.field).applies;
      }
      break;
    }
    case LMMode::wlp_direct: {
      ArtinianSpec spec = ArtinianSpec::uniform(y, cfg.d + 2, cfg.field);
      const auto dims = hilbert_function(spec);
      if (budget > 0) {
        for (std::size_t t = 0; t + 1 < dims.size(); ++t) {
          if (dims[t] * dims[t + 1] > budget) {
            out.skipped = true;
            return out;
          }
        }
      }
      out.hit = !lefschetz_verdict(spec).wlp_holds;
      break;
    }
  }
  return out;
}

}  // namespace

MonteCarloReport monte_carlo(const LMConfig& cfg, LMMode mode, long long budget) {
  cfg.validate();
  MonteCarloReport rep;
  rep.mode = mode;
  rep.trials = cfg.trials;
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
  const int workers = std::max(1, std::min<int>(worker_threads(),
                                                static_cast<int>(std::max<long long>(cfg.trials, 1))));
  std::vector<std::thread> pool;
  std::atomic<long long> cursor{0};
  auto body = [&]() {
    for (;;) {
      const long long t = cursor.fetch_add(1);
      if (t >= cfg.trials) return;
      outcomes[static_cast<std::size_t>(t)] = run_trial(cfg, mode, budget, t);
    }
  };
  if (workers == 1) {
    body();
  } else {
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  long long sum_fd = 0;
  for (const auto& o : outcomes) {
    rep.hits += o.hit ? 1 : 0;
    rep.skipped += o.skipped ? 1 : 0;
    sum_fd += o.fd;
  }
  if (cfg.trials > 0) {
    rep.estimate = Rat(static_cast<long>(rep.hits), static_cast<long>(cfg.trials));
    rep.estimate.canonicalize();
    rep.mean_fd = Rat(static_cast<long>(sum_fd), static_cast<long>(cfg.trials));
    rep.mean_fd.canonicalize();
  }
  return rep;
}

double threshold_cd(int d, double tol) {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (d == 1) return 1.0;
  const auto g = [d](double x) {
    return (d + 1) * (x + 1) * std::exp(-x) + x * std::pow(1.0 - std::exp(-x), d + 1);
  };
  const double target = d + 1;
  double hi = 1e-6;
  while (g(hi) - target < 0.0) hi *= 2.0;
  double lo = hi / 2.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) - target < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

int worker_threads() {
  if (const char* env = std::getenv("COINV_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

}  // namespace coinv
