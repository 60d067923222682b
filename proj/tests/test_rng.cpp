#include <doctest.h>

#include <set>

#include "uavfog/rng.hpp"

using namespace uavfog;

// Known-answer vectors published with the Random123 reference implementation.
TEST_CASE("philox4x32-10 known answers") {
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) ==
        PhiloxCounter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                      {0xffffffffu, 0xffffffffu}) ==
        PhiloxCounter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                      {0xa4093822u, 0x299f31d0u}) ==
        PhiloxCounter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("counter rng is addressable and seed dependent") {
  const CounterRng a(42), b(42), c(43);
  CHECK(a.bits(Stream::Users, 1, 2, 3) == b.bits(Stream::Users, 1, 2, 3));
  CHECK(a.bits(Stream::Users, 1, 2, 3) != c.bits(Stream::Users, 1, 2, 3));
  CHECK(a.bits(Stream::Users, 1, 2, 3) != a.bits(Stream::Churn, 1, 2, 3));

  std::set<std::uint64_t> seen;
  for (std::uint32_t i = 0; i < 1000; ++i) seen.insert(a.bits(Stream::Population, 0, i, 0));
  CHECK(seen.size() == 1000);
}

TEST_CASE("uniform, below and normal ranges") {
  const CounterRng rng(7);
  double sum = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::uint32_t>(i);
    const double u = rng.uniform(Stream::Derive, 0, k, 0);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    REQUIRE(rng.below(Stream::Derive, 1, k, 0, 7) < 7u);
    const double z = rng.normal(Stream::Derive, 2, k, 0);
    sum += z;
    sq += z * z;
  }
  CHECK(sum / n == doctest::Approx(0.0).epsilon(0.05).scale(1.0));
  CHECK(sq / n == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("derived seeds differ per index") {
  CHECK(derive_seed(1, 0, 0) != derive_seed(1, 0, 1));
  CHECK(derive_seed(1, 0, 0) != derive_seed(1, 1, 0));
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
}
