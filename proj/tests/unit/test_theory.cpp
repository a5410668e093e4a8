#include <random>

#include "doctest.h"
#include "bchlab/distance.hpp"
#include "bchlab/theory.hpp"
#include "test_support.hpp"

using namespace bchlab;

TEST_CASE("dimension table") {
  CHECK(predict_dimension(8, 4) == 7);
  CHECK(predict_dual_dimension(8, 4) == 2);
  CHECK(predict_dimension(9, 4) == 7);
  CHECK(predict_dimension(9, 2) == 6);
  CHECK(predict_dual_dimension(9, 2) == 4);
  CHECK(predict_dimension(9, 0) == 7);
  CHECK(predict_dimension(2, 0) == 0);
  for (std::uint32_t q : {4u, 5u, 7u, 16u, 27u, 64u})
    for (std::uint32_t h = 0; h <= q; ++h) CHECK(predict_dimension(q, h) + predict_dual_dimension(q, h) == q + 1);
  CHECK_THROWS_AS(predict_dimension(9, 10), std::invalid_argument);
}

TEST_CASE("d = 3 criterion") {
  CHECK(d3_criterion(9, 2));
  CHECK_FALSE(d3_criterion(9, 1));
  CHECK_FALSE(d3_criterion(27, 4));
  CHECK(d3_criterion(8, 1));
  CHECK(d3_criterion(8, 4));
  CHECK_FALSE(d3_criterion(64, 4));
}

TEST_CASE("distance predictions") {
  const auto f9 = build_field(3, 2);
  CHECK(predict_min_distance(*f9, 2).outcome == DOutcome::Exactly3);
  CHECK(*predict_min_distance(*f9, 2).resolved == 3);
  CHECK(predict_min_distance(*build_field(3, 3), 4).outcome == DOutcome::Exactly4);
  const auto f8 = build_field(2, 3);
  const auto p0 = predict_min_distance(*f8, 0);
  CHECK(p0.outcome == DOutcome::FourOrFive);
  CHECK(*p0.resolved == 4);
  REQUIRE(p0.quadruple);
  CHECK(validate_quadruple(*f8, 0, *p0.quadruple));
  CHECK(*predict_min_distance(*f8, 2).resolved == 5);
  CHECK_FALSE(predict_min_distance(*f8, 2, false).resolved.has_value());
  CHECK(to_string(DOutcome::Exactly3) == "exactly-3");
  CHECK(to_string(DOutcome::Exactly4) == "exactly-4");
  CHECK(to_string(DOutcome::FourOrFive) == "four-or-five");
}

TEST_CASE("quadruple search") {
  const auto f64 = build_field(2, 6);
  const auto quad = exists_e_quadruple(*f64, 4);
  REQUIRE(quad);
  CHECK(validate_quadruple(*f64, 4, *quad));
  CHECK_FALSE(exists_e_quadruple(*build_field(2, 3), 2).has_value());
  CHECK_THROWS_AS(exists_e_quadruple(*build_field(2, 1), 1), std::invalid_argument);

  const auto f27 = build_field(3, 3);
  const Quadruple q = odd_q_quadruple(*f27, f27->beta());
  CHECK(validate_quadruple(*f27, 4, q));
  Quadruple repeated = q;
  repeated[3] = repeated[0];
  CHECK_FALSE(validate_quadruple(*f27, 4, repeated));
  Quadruple outside = q;
  outside[0] = f27->alpha();
  CHECK_FALSE(validate_quadruple(*f27, 4, outside));
}

TEST_CASE("quadruple search agrees with the computed distance for q even") {
  for (std::uint32_t s : {2u, 3u, 4u, 5u}) {
    const auto f = build_field(2, s);
    for (std::uint32_t h = 0; h <= f->q(); ++h) {
      if (d3_criterion(f->q(), h)) continue;
      CAPTURE(f->q());
      CAPTURE(h);
      const auto d = min_distance_by_columns(build_bch(f, 3, h));
      CHECK(exists_e_quadruple(*f, h).has_value() == (*d.value == 4));
    }
  }
}

TEST_CASE("dual distance bounds") {
  const auto b27 = dual_distance_bounds(27, 4);
  CHECK(b27.applicable);
  CHECK(b27.lo == 18);
  CHECK(b27.hi == 24);
  CHECK(b27.m == 4);
  const auto b25 = dual_distance_bounds(25, 2);
  CHECK(b25.lo == 20);
  CHECK(b25.hi == 24);
  const auto b64 = dual_distance_bounds(64, 4);
  CHECK(b64.lo == 55);
  CHECK(b64.hi == 60);
  CHECK_FALSE(dual_distance_bounds(27, 0).applicable);
  CHECK_FALSE(dual_distance_bounds(27, 13).applicable);
  CHECK_FALSE(dual_distance_bounds(27, 14).applicable);
  CHECK_FALSE(dual_distance_bounds(27, 27).applicable);
  CHECK_FALSE(dual_distance_bounds(64, 32).applicable);
  CHECK(dual_distance_bounds(27, 20).lo < 0);
}

TEST_CASE("classification") {
  CHECK(classify(10, 7, 4, 3, std::nullopt) == CodeClass::MDS);
  CHECK(classify(10, 6, 4, 4, 6) == CodeClass::NMDS);
  CHECK(classify(10, 6, 4, 4, 5) == CodeClass::AMDS);
  CHECK(classify(10, 6, 4, 4, std::nullopt) == CodeClass::AMDS);
  CHECK(classify(10, 6, 3, 4, 6) == CodeClass::Other);
  CHECK(classify(10, 6, std::nullopt, 4, 6) == CodeClass::Undetermined);
  CHECK(to_string(CodeClass::NMDS) == "NMDS");
  CHECK(to_string(CodeClass::Other) == "other");
}

TEST_CASE("locality bounds") {
  CHECK(singleton_like_max_d(28, 24, 17) == 4);
  CHECK(singleton_like_max_d(28, 24, 23) == 4);
  CHECK(cm_rhs_t1(28, 4, 23) == 24);
  CHECK(cm_k_optimal(28, 24, 4, 23, 27));
  CHECK_FALSE(cm_k_optimal(28, 23, 4, 23, 27));
  CHECK(locality(24) == 23);
  CHECK_THROWS_AS(locality(1), std::invalid_argument);
  CHECK_THROWS_AS(singleton_like_max_d(10, 5, 0), std::invalid_argument);
  const LrcAudit a = lrc_audit(28, 24, 4, 24, 27);
  CHECK(a.r == 23);
  CHECK(a.d_optimal);
  CHECK(a.k_optimal);
  CHECK(a.singleton_like_rhs == 4);
  CHECK(a.cm_rhs == 24);
}

TEST_CASE("full prediction") {
  const Prediction p = predict(*build_field(2, 3), 4);
  CHECK(p.k == 7);
  CHECK(p.k_dual == 2);
  CHECK(p.d.outcome == DOutcome::Exactly3);
  CHECK(p.cls == CodeClass::MDS);
  const Prediction p27 = predict(*build_field(3, 3), 4);
  CHECK(p27.d_dual_bounds.applicable);
  CHECK(*p27.d.resolved == 4);
}

TEST_CASE("identities on random points of the unit circle") {
  std::mt19937_64 rng(17);
  for (auto [p, s] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {3u, 3u}, {2u, 6u}}) {
    const auto f = build_field(p, s);
    for (int i = 0; i < 300; ++i) {
      const std::uint32_t h = static_cast<std::uint32_t>(rng() % (f->q() + 1));
      const Elem x = testing::random_unit(*f, rng), y = testing::random_unit(*f, rng),
                 z = testing::random_unit(*f, rng);
      CHECK(d_frobenius_holds(*f, x, y, h));
      if (x != y) CHECK(e_frobenius_holds(*f, x, y, h));
      for (bool plus : {false, true}) {
        CHECK(det3_direct(*f, x, y, z, h, plus) == det3_factored(*f, x, y, z, h, plus));
        if (x != y && y != z && x != z) CHECK(dichotomy_holds(*f, x, y, z, h, plus));
      }
    }
  }
  const auto f9 = build_field(3, 2);
  CHECK_THROWS_AS(e_ratio(*f9, kOne, kOne, 1), std::invalid_argument);
}
