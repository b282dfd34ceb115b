#include <set>

#include "cmlab/rng.hpp"
#include "doctest.h"

using cmlab::rng::Counter;

TEST_CASE("philox4x32-10 known answers") {
  // Reference vectors shipped with Random123 (kat_vectors).
  CHECK(cmlab::rng::philox4x32({0, 0, 0, 0}, 0) ==
        Counter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(cmlab::rng::philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                               0xffffffffffffffffULL) ==
        Counter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(cmlab::rng::philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                               0x299f31d0a4093822ULL) ==
        Counter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("draws are addressed by counter, not by call order") {
  using cmlab::rng::Field;
  const auto late = cmlab::rng::complex_gaussian(9, Field::Xi, 3, 40);
  for (std::uint32_t j = 1; j < 100; ++j) (void)cmlab::rng::complex_gaussian(9, Field::Xi, 1, j);
  CHECK(cmlab::rng::complex_gaussian(9, Field::Xi, 3, 40) == late);
  CHECK(cmlab::rng::complex_gaussian(9, Field::Haar, 3, 40) != late);
}

TEST_CASE("replica seeds are distinct") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t k = 0; k < 1000; ++k) seeds.insert(cmlab::rng::replica_seed(42, k));
  CHECK(seeds.size() == 1000);
}
