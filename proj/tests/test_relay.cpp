#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "rfso/errors.hpp"
#include "rfso/relay/combining.hpp"

using namespace rfso::relay;

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST_CASE("fixed-gain combiner values and limits") {
  CHECK(combine_fixed_gain(2.0, 2.0, 0.5) == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(combine_fixed_gain(3.7, kInf, 0.5) == 3.7);
  CHECK(combine_fixed_gain(0.0, 123.0, 0.5) == 0.0);
  CHECK(combine_fixed_gain(5.0, 0.0, 0.5) == 0.0);
  CHECK_THROWS_AS(RelayStrategy::fixed_gain(0.0), rfso::DomainError);
}

TEST_CASE("channel-dependent combiner values") {
  CHECK(combine_channel_dependent(2.0, 2.0) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(combine_channel_dependent(3.0, 0.0) == 0.0);
  for (double g = 0.1; g < 100.0; g *= 3.0)
    CHECK(combine_channel_dependent(g, g) <= g / 2.0);
}

TEST_CASE("min bound dominates the channel-dependent combiner") {
  CHECK(combine_min_bound(2.0, 3.0) == 2.0);
  CHECK(combine_min_bound(0.0, 7.0) == 0.0);
  CHECK(combine_min_bound(5.0, 5.0) == 5.0);
  CHECK(combine_channel_dependent(5.0, 5.0) == doctest::Approx(25.0 / 11.0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double a = u(rng), b = u(rng);
    CHECK(combine_min_bound(a, b) >= combine_channel_dependent(a, b));
    CHECK(combine_fixed_gain(a, b, 0.5) <= a);
  }
}

TEST_CASE("combiners are nondecreasing in each argument") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 40.0);
  for (int i = 0; i < 500; ++i) {
    const double a = u(rng), b = u(rng), da = u(rng) * 0.1, db = u(rng) * 0.1;
    CHECK(combine_fixed_gain(a + da, b, 0.5) >= combine_fixed_gain(a, b, 0.5) - 1e-15);
    CHECK(combine_fixed_gain(a, b + db, 0.5) >= combine_fixed_gain(a, b, 0.5) - 1e-15);
    CHECK(combine_channel_dependent(a + da, b) >= combine_channel_dependent(a, b) - 1e-15);
    CHECK(combine_channel_dependent(a, b + db) >= combine_channel_dependent(a, b) - 1e-15);
    CHECK(combine_min_bound(a + da, b) >= combine_min_bound(a, b));
    CHECK(combine_min_bound(a, b + db) >= combine_min_bound(a, b));
  }
}
