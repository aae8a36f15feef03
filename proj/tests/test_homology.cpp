#include <doctest.h>

#include "coinv/homology.hpp"
#include "oracles.hpp"

using namespace coinv;

namespace {
const Field QQ = Field::rationals();
const Field F2 = Field::prime(2);

long long reduced_euler(const SimplicialComplex& cx) {
  long long chi = 0;
  for (int i = 0; i <= cx.dim(); ++i) chi += (i % 2 == 0 ? 1 : -1) * cx.face_count(i);
  return chi - 1;
}
}  // namespace

TEST_CASE("boundary matrix of the triangle boundary") {
  const auto tri = oracle::triangle_boundary();
  const ExactMatrix d1 = boundary_matrix(tri, 1);
  CHECK(d1.rows() == 3);
  CHECK(d1.cols() == 3);
  CHECK(rank(d1, QQ) == 2);
  // ∂[0,1] = [1] - [0]
  CHECK(d1.at(0, 0) == -1);
  CHECK(d1.at(1, 0) == 1);
  CHECK_THROWS_AS(boundary_matrix(tri, 2), std::out_of_range);
  CHECK_THROWS_AS(boundary_matrix(tri, -1), std::out_of_range);
}

TEST_CASE("consecutive boundaries compose to zero") {
  for (const auto& cx : {oracle::projective_plane(), oracle::pinched_torus(),
                         oracle::ten_vertex_sphere(), oracle::simplex_boundary(5)}) {
    for (int i = 1; i <= cx.dim(); ++i) {
      const ExactMatrix a = boundary_matrix(cx, i - 1);
      const ExactMatrix b = boundary_matrix(cx, i);
      for (int c = 0; c < b.cols(); ++c) {
        std::vector<Rat> col(b.cols(), Rat(0));
        col[c] = 1;
        const auto img = b.apply(col);
        for (const Rat& y : a.apply(img)) CHECK(y == 0);
      }
    }
  }
}

TEST_CASE("reduced Betti numbers of the worked complexes") {
  const auto sigma = oracle::projective_plane();
  CHECK(reduced_betti(sigma, QQ).betti == std::vector<long long>{0, 0, 0, 0});
  CHECK(reduced_betti(sigma, F2).betti == std::vector<long long>{0, 0, 1, 1});

  const auto gamma = oracle::ten_vertex_sphere();
  CHECK(reduced_betti(gamma, QQ).betti == std::vector<long long>{0, 0, 0, 1});
  CHECK(boundary_matrix(gamma, 2).rows() == 24);
  CHECK(boundary_matrix(gamma, 2).cols() == 16);
  CHECK(rank(boundary_matrix(gamma, 2), QQ) == 15);

  const auto lambda = oracle::pinched_torus();
  CHECK(reduced_betti(lambda, QQ).betti == std::vector<long long>{0, 0, 1, 1});
}

TEST_CASE("alternating Betti sums give the reduced Euler characteristic") {
  for (const auto& cx : {oracle::projective_plane(), oracle::pinched_torus(),
                         oracle::ten_vertex_sphere(), oracle::triangle_boundary()}) {
    for (const auto& f : {QQ, F2}) {
      const BettiProfile b = reduced_betti(cx, f);
      long long alt = 0;
      for (int i = -1; i <= cx.dim(); ++i) alt += (i % 2 == 0 ? 1 : -1) * b.at(i);
      CHECK(alt == reduced_euler(cx));
    }
  }
}

TEST_CASE("top cycle space and orientations") {
  const auto tri = oracle::triangle_boundary();
  const TopCycleSpace tc = top_cycle_space(tri, QQ);
  REQUIRE(tc.basis.size() == 1);
  CHECK(tc.orientation_flagged);
  // coefficients (1, -1, 1) on the canonical edge order 01, 02, 12
  const Chain& eps = tc.basis[0];
  CHECK(eps.coeffs.at({0, 1}) == 1);
  CHECK(eps.coeffs.at({0, 2}) == -1);
  CHECK(eps.coeffs.at({1, 2}) == 1);

  CHECK(top_cycle_space(oracle::projective_plane(), QQ).basis.empty());
  CHECK(top_cycle_space(oracle::projective_plane(), F2).basis.size() == 1);

  const TopCycleSpace tg = top_cycle_space(oracle::ten_vertex_sphere(), QQ);
  REQUIRE(tg.basis.size() == 1);
  CHECK(tg.orientation_flagged);
  CHECK(tg.basis[0].coeffs.size() == 16);
  for (const auto& [face, c] : tg.basis[0].coeffs) CHECK((c == 1 || c == -1));
}

TEST_CASE("Reisner-type flags") {
  const ReisnerFlags g = reisner_check(oracle::ten_vertex_sphere(), QQ);
  CHECK(g.is_cohen_macaulay);
  CHECK(g.is_homology_sphere);

  const ReisnerFlags l = reisner_check(oracle::pinched_torus(), QQ);
  CHECK_FALSE(l.is_cohen_macaulay);
  CHECK_FALSE(l.is_homology_sphere);

  const ReisnerFlags sq = reisner_check(oracle::projective_plane(), QQ);
  CHECK(sq.is_cohen_macaulay);
  CHECK_FALSE(sq.is_homology_sphere);
  const ReisnerFlags s2 = reisner_check(oracle::projective_plane(), F2);
  CHECK_FALSE(s2.is_cohen_macaulay);
  CHECK_FALSE(s2.is_homology_sphere);

  for (int n = 3; n <= 5; ++n) {
    CHECK(reisner_check(oracle::simplex_boundary(n), QQ).is_homology_sphere);
  }
}

TEST_CASE("homology-sphere flag matches CM + closed orientable pseudomanifold") {
  // consistency on non-cones over both fields
  for (const auto& cx : {oracle::projective_plane(), oracle::pinched_torus(),
                         oracle::ten_vertex_sphere(), oracle::simplex_boundary(4),
                         oracle::triangle_boundary()}) {
    REQUIRE(classify_pseudomanifold(cx).cone_apexes.empty());
    for (const auto& f : {QQ, F2}) {
      const ReisnerFlags flags = reisner_check(cx, f);
      const auto pm = classify_pseudomanifold(cx);
      const bool orientable_closed_pm = pm.is_pseudomanifold && pm.is_without_boundary &&
                                        reduced_betti(cx, f).at(cx.dim()) > 0;
      CHECK(flags.is_homology_sphere ==
            (flags.is_cohen_macaulay && orientable_closed_pm));
    }
  }
}

TEST_CASE("closed pseudomanifolds have top kernel of dimension at most one") {
  for (const auto& cx : {oracle::projective_plane(), oracle::pinched_torus(),
                         oracle::ten_vertex_sphere()}) {
    for (const auto& f : {QQ, F2}) {
      CHECK(top_cycle_space(cx, f).basis.size() <= 1);
    }
  }
}
