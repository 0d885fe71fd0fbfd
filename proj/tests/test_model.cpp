#include <doctest.h>

#include <cmath>
#include <vector>

#include "normsim/errors.hpp"
#include "normsim/model.hpp"
#include "oracles.hpp"

using namespace normsim;

TEST_SUITE("model") {

TEST_CASE("unit price") {
  const ModelParams p;
  CHECK(unit_price(0.0, p) == 1.0);
  CHECK(unit_price(10.0, p) == doctest::Approx(1.1).epsilon(1e-15));
  CHECK(unit_price(1.0, p) == doctest::Approx(1.001).epsilon(1e-15));
  CHECK_THROWS_AS(unit_price(-1e-9, p), DomainError);
}

TEST_CASE("utility") {
  const ModelParams p;
  CHECK(utility(0.5, 0.0625, 1.0, p) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(utility(0.5, 0.0, 1.0, p) == 0.0);
  CHECK(utility(1.0, 0.25, 1.0, p) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("value per regime") {
  const ModelParams p;
  CHECK(value(NormRegime::Progressive, 0.5, 0.0625, 1.0, 0.0, p) ==
        doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(value(NormRegime::Fixed, 0.5, 0.0625, 1.0, 0.0185, p) ==
        doctest::Approx(0.044).epsilon(1e-14));
  CHECK(value(NormRegime::Proportional, 0.5, 0.04, 1.0, 0.25, p) ==
        doctest::Approx(0.05).epsilon(1e-14));
}

TEST_CASE("best response closed forms") {
  const ModelParams p;
  CHECK(best_response(0.5, 1.0, 0.0, p) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(best_response(0.5, 1.0, 0.25, p) == doctest::Approx(0.04).epsilon(1e-15));

  // Frozen from the numeric maximizer of a x^0.5 - 1.1 x - 0.1 x.
  const double numeric = oracle::numeric_best_response(0.8, 1.1, 0.1, 0.5);
  CHECK(numeric == doctest::Approx(1.0 / 9.0).epsilon(1e-7));
  CHECK(best_response(0.8, 1.1, 0.1, p) == doctest::Approx(0.111111111111111).epsilon(1e-13));

  CHECK_THROWS_AS(best_response(0.5, 0.0, 0.0, p), DomainError);
  CHECK_THROWS_AS(best_response(0.5, 1.0, -1.0, p), DomainError);
}

TEST_CASE("equilibrium value oracle") {
  const ModelParams p;
  CHECK(equilibrium_value(0.5, 1.0, 0.0, 0.0, p) == doctest::Approx(0.0625).epsilon(1e-14));
  CHECK(equilibrium_value(1.0, 1.0, 0.25, 0.0, p) == doctest::Approx(0.2).epsilon(1e-14));
  const double x = oracle::numeric_best_response(0.8, 1.1, 0.1, 0.5);
  const double numeric = oracle::raw_value(0.8, x, 1.1, 0.1, 0.0, 0.5);
  CHECK(numeric == doctest::Approx(0.13333333333333333).epsilon(1e-12));
  CHECK(equilibrium_value(0.8, 1.1, 0.1, 0.0, p) ==
        doctest::Approx(0.13333333333333333).epsilon(1e-13));
}

TEST_CASE("best response monotone in action and effective price") {
  for (double s : {0.3, 0.5, 0.8}) {
    ModelParams p;
    p.s = s;
    for (double a = 0.05; a < 3.0; a += 0.05) {
      for (double e = 0.2; e < 5.0; e += 0.1) {
        const double here = best_response(a, e, 0.0, p);
        CHECK(best_response(a + 0.05, e, 0.0, p) > here);
        CHECK(best_response(a, e + 0.1, 0.0, p) < here);
        // splitting the effective price between p and the norm changes nothing
        CHECK(best_response(a, e / 2, e / 2, p) == doctest::Approx(here).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("doubling the effective price quarters x at s = 0.5") {
  const ModelParams p;
  for (double a : {0.1, 0.5, 2.0}) {
    for (double e : {0.5, 1.0, 3.0}) {
      CHECK(best_response(a, 2 * e, 0.0, p) * 4.0 ==
            doctest::Approx(best_response(a, e, 0.0, p)).epsilon(1e-15));
    }
  }
}

TEST_CASE("best response is the argmax over a grid") {
  ModelParams p;
  for (double s : {0.25, 0.5, 0.75}) {
    p.s = s;
    for (auto regime : {NormRegime::Progressive, NormRegime::Proportional, NormRegime::Fixed}) {
      for (double a : {0.2, 0.5, 1.3}) {
        for (double price : {1.0, 1.7}) {
          const double norm = 0.3;
          const double x = best_response(a, price, linear_norm(regime, norm), p);
          const double best = value(regime, a, x, price, norm, p);
          for (double xg = 0.0; xg < 4.0; xg += 0.001) {
            CHECK(best >= value(regime, a, xg, price, norm, p) - 1e-15);
          }
          CHECK(equilibrium_value(a, price, linear_norm(regime, norm),
                                  regime == NormRegime::Fixed ? norm : 0.0, p) ==
                doctest::Approx(best).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("fixed charge does not move the argmax") {
  const ModelParams p;
  const double base = best_response(0.7, 1.2, linear_norm(NormRegime::Fixed, 0.0), p);
  for (double n3 : {0.01, 0.5, 10.0}) {
    CHECK(best_response(0.7, 1.2, linear_norm(NormRegime::Fixed, n3), p) == base);
  }
}

TEST_CASE("parameter validation") {
  ModelParams p;
  CHECK_NOTHROW(p.validate());
  p.s = 1.5;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  p = {};
  p.r = 1.0;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  p = {};
  p.c = 0.0;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  p = {};
  p.n_agents = 1;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  CHECK(parse_regime("fixed") == NormRegime::Fixed);
  CHECK_THROWS_AS(parse_regime("flat"), ParameterError);
}

}
