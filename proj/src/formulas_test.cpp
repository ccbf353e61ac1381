#include "mbd/formulas.hpp"

#include <doctest.h>

#include "mbd/families.hpp"

using namespace mbd;

namespace {
GameValue fin(int k) { return GameValue::finite(k); }
const GameValue kInf = GameValue::infinite();
}  // namespace

TEST_CASE("integer logarithms") {
  CHECK(floor_log2(1) == 0);
  CHECK(floor_log2(7) == 2);
  CHECK(floor_log2(8) == 3);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(8) == 3);
  CHECK(ceil_log2(9) == 4);
  CHECK(floor_log2(std::uint64_t{1} << 63) == 63);
  CHECK(ceil_log2((std::uint64_t{1} << 63) + 1) == 64);
}

TEST_CASE("paths") {
  CHECK(path_gamma_smb_prime(1) == fin(1));
  CHECK(path_gamma_smb_prime(3) == fin(2));
  CHECK(path_gamma_smb_prime(9) == fin(4));
  CHECK(path_gamma_smb_prime(4) == kInf);
  CHECK_THROWS_AS(path_gamma_smb_prime(0), std::invalid_argument);
  CHECK_THROWS_AS(path_gamma_smb_prime(-3), std::invalid_argument);
  for (int n = 3; n < 2000; n += 2) CHECK(path_gamma_smb_prime(n) == fin(ceil_log2(static_cast<std::uint64_t>(n))));
}

TEST_CASE("path recursion steps") {
  for (int k = 0; k < 500; ++k) {
    const GameValue mid = path_gamma_smb_prime(2 * k + 1).plus(1);
    CHECK(path_gamma_smb_prime(4 * k + 3) <= mid);
    if (k >= 1) CHECK(path_gamma_smb_prime(4 * k + 1) <= mid);
  }
}

TEST_CASE("sigma") {
  CHECK(sigma(4) == 1);
  CHECK(sigma(6) == 2);
  CHECK(sigma(8) == 1);
  CHECK(sigma(10) == 4);
  CHECK_THROWS_AS(sigma(5), std::invalid_argument);
  CHECK_THROWS_AS(sigma(2), std::invalid_argument);
}

TEST_CASE("tadpoles") {
  CHECK(tadpole_values({4, 1}).gamma_smb_prime == fin(3));
  CHECK(tadpole_values({6, 3}).gamma_smb_prime == fin(4));
  CHECK(tadpole_values({4, 3}).gamma_smb_prime == fin(3));
  CHECK(tadpole_values({5, 2}).gamma_smb_prime == kInf);
  CHECK(tadpole_values({6, 2}).gamma_smb_prime == kInf);
  for (int n = 3; n <= 10; ++n) {
    for (int k = 1; k <= 6; ++k) CHECK(tadpole_values({n, k}).gamma_smb == kInf);
  }
}

TEST_CASE("constructions") {
  for (int k = 1; k <= 3; ++k) {
    const StallerValues v = f_prime_values(k);
    CHECK(v.gamma_smb_prime == fin(k + 1));
    CHECK(v.gamma_smb == kInf);
  }
  CHECK(realization_triple(2, 2, 2) == RealizationTriple{2, fin(2), fin(2)});
  CHECK(realization_triple(2, 2, 3) == RealizationTriple{2, fin(2), fin(3)});
  CHECK(realization_triple(2, 3, 3) == RealizationTriple{2, fin(3), fin(3)});
  CHECK_THROWS_AS(realization_triple(3, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(realization_triple(1, 2, 3), std::invalid_argument);
}

TEST_CASE("log inequality") {
  CHECK(log_bound_holds(1, 2));
  CHECK(log_bound_holds(3, 6));
  for (std::uint64_t a = 1; a <= 300; ++a) {
    for (std::uint64_t b = 2; b <= 300; ++b) REQUIRE(log_bound_holds(a, b));
  }
}

TEST_CASE("degree and order bounds") {
  CHECK(bounds(path(5).graph) == DegreeAndOrderBounds{2, 3, 2});
  CHECK(bounds(complete(4).graph) == DegreeAndOrderBounds{4, 2, 2});
  CHECK(bounds(subdivided_star_1(3).graph) == DegreeAndOrderBounds{2, 4, 3});
}
