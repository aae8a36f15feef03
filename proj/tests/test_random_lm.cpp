#include <doctest.h>

#include <cmath>

#include "coinv/homology.hpp"
#include "coinv/random_lm.hpp"
#include "oracles.hpp"

using namespace coinv;

namespace {
LMConfig config(int n, int d, double p, long long trials, std::uint64_t seed) {
  LMConfig cfg;
  cfg.n = n;
  cfg.d = d;
  cfg.p = p;
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}
}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(config(5, 0, 0.5, 1, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(config(3, 2, 0.5, 1, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(config(8, 2, 1.5, 1, 1).validate(), std::invalid_argument);
  CHECK_NOTHROW(config(8, 2, 1.0, 1, 1).validate());
}

TEST_CASE("degenerate probabilities") {
  const auto full = sample_complex(config(7, 2, 1.0, 1, 3), 0);
  CHECK(full.face_count(2) == 35);  // C(7,3)
  CHECK(full.dim() == 2);

  const auto skel = sample_complex(config(7, 2, 0.0, 1, 3), 0);
  CHECK(skel.dim() == 1);
  CHECK(skel.face_count(1) == 21);  // the full graph survives

  const auto rep0 = monte_carlo(config(7, 2, 0.0, 8, 3), LMMode::homology);
  CHECK(rep0.hits == 0);
  CHECK(rep0.estimate == 0);
  const auto rep0c = monte_carlo(config(7, 2, 0.0, 8, 3), LMMode::wlp_criterion);
  CHECK(rep0c.hits == 0);

  const auto rep1 = monte_carlo(config(6, 2, 1.0, 4, 3), LMMode::homology);
  CHECK(rep1.hits == 4);  // the full 2-skeleton of the 5-simplex has top cycles
  CHECK(rep1.estimate == 1);
}

TEST_CASE("sampled complexes keep the full lower skeleton") {
  const auto y = sample_complex(config(8, 2, 0.35, 1, 99), 5);
  CHECK(y.face_count(1) == 28);
  CHECK(y.face_count(0) == 8);
  CHECK(y.n_vertices() == 8);
}

TEST_CASE("the top face count concentrates around its mean") {
  const int n = 10, d = 2;
  const double p = 0.3;
  const long long trials = 10000;
  const auto rep = monte_carlo(config(n, d, p, trials, 20260811), LMMode::homology);
  const double total = 120.0;  // C(10,3)
  const double mean_expected = total * p;
  const double se = std::sqrt(total * p * (1 - p) / static_cast<double>(trials));
  const double mean = rep.mean_fd.get_d();
  CHECK(std::abs(mean - mean_expected) <= 3.0 * se);
}

TEST_CASE("reports are reproducible bit for bit") {
  const LMConfig cfg = config(8, 2, 0.45, 60, 777);
  const auto a = monte_carlo(cfg, LMMode::homology);
  const auto b = monte_carlo(cfg, LMMode::homology);
  CHECK(a.hits == b.hits);
  CHECK(a.mean_fd == b.mean_fd);
  CHECK(a.estimate == b.estimate);
  for (long long t : {0ll, 17ll, 59ll}) {
    CHECK(sample_complex(cfg, t) == sample_complex(cfg, t));
  }
}

TEST_CASE("coupled samples are monotone in p") {
  // shared (seed, trial, face) draws: a smaller p accepts a subset of faces
  const LMConfig lo = config(8, 2, 0.25, 1, 4242);
  LMConfig hi = lo;
  hi.p = 0.65;
  for (long long t = 0; t < 25; ++t) {
    const auto ylo = sample_complex(lo, t);
    const auto yhi = sample_complex(hi, t);
    CHECK(ylo.face_count(2) <= yhi.face_count(2));
    for (const Face& f : ylo.dim() == 2 ? ylo.faces(2) : std::vector<Face>{}) {
      CHECK(yhi.is_face(f));
    }
    // adding faces can only grow the top cycle space
    const long long blo = ylo.dim() == 2
        ? ylo.face_count(2) - rank(boundary_matrix(ylo, 2), Field::rationals()) : 0;
    const long long bhi = yhi.dim() == 2
        ? yhi.face_count(2) - rank(boundary_matrix(yhi, 2), Field::rationals()) : 0;
    CHECK(blo <= bhi);
  }
}

TEST_CASE("the sufficient criterion never overcounts the direct check") {
  const LMConfig cfg = config(7, 2, 0.5, 30, 1234);
  const auto crit = monte_carlo(cfg, LMMode::wlp_criterion);
  const auto direct = monte_carlo(cfg, LMMode::wlp_direct, 0);
  CHECK(direct.skipped == 0);
  CHECK(direct.hits >= crit.hits);
  // the criterion is homology plus a face-count inequality
  const auto hom = monte_carlo(cfg, LMMode::homology);
  CHECK(crit.hits <= hom.hits);
}

TEST_CASE("oversized instances are skipped, not dropped") {
  const LMConfig cfg = config(8, 2, 0.9, 5, 11);
  const auto rep = monte_carlo(cfg, LMMode::wlp_direct, 10);  // absurdly small budget
  CHECK(rep.skipped == 5);
  CHECK(rep.hits == 0);
  CHECK(rep.trials == 5);
}

TEST_CASE("threshold constants") {
  CHECK(threshold_cd(1, 1e-9) == 1.0);
  const double table[] = {2.783, 3.91, 4.962, 5.984, 6.993, 7.997, 8.998};
  for (int d = 2; d <= 8; ++d) {
    CHECK(std::abs(threshold_cd(d, 1e-9) - table[d - 2]) <= 2e-3);
  }
  for (int d = 1; d <= 12; ++d) {
    const double c = threshold_cd(d, 1e-10);
    CHECK(c > 0.0);
    CHECK(c < d + 1.0);
  }
  CHECK_THROWS_AS(threshold_cd(0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(threshold_cd(3, 0.0), std::invalid_argument);
}
