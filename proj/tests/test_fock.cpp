#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>

#include "multiport/errors.hpp"
#include "multiport/fock.hpp"
#include "oracles.hpp"

using namespace multiport;

TEST_CASE("dimension counts photon placements") {
  CHECK(dimension(1, 0) == 1);
  CHECK(dimension(1, 7) == 1);
  CHECK(dimension(5, 0) == 1);
  CHECK(dimension(2, 2) == 3);
  CHECK(dimension(3, 1) == 3);
  CHECK(dimension(3, 2) == 6);
  CHECK(dimension(4, 3) == 20);
  CHECK(dimension(12, 8) == 75582);
  CHECK(dimension(20, 20) == 68923264410LL);
}

TEST_CASE("dimension satisfies the Pascal identity") {
  for (int m = 2; m <= 10; ++m) {
    for (int n = 1; n <= 6; ++n) {
      CHECK(dimension(m, n) == dimension(m - 1, n) + dimension(m, n - 1));
    }
  }
}

TEST_CASE("dimension is exact up to the 64-bit boundary") {
  // binomial(66, 33) is the largest value on this diagonal that fits.
  CHECK(dimension(34, 33) == 7219428434016265740LL);
  CHECK_THROWS_AS(dimension(35, 33), OverflowError);
  CHECK_THROWS_AS(dimension(200, 100), OverflowError);
}

TEST_CASE("dimension rejects bad arguments") {
  CHECK_THROWS_AS(dimension(0, 1), ValidationError);
  CHECK_THROWS_AS(dimension(-2, 1), ValidationError);
  CHECK_THROWS_AS(dimension(3, -1), ValidationError);
}

TEST_CASE("basis enumeration matches the brute-force oracle") {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const FockBasis basis(m, n);
      const auto expected = testing::brute_force_basis(m, n);
      REQUIRE(basis.size() == static_cast<std::int64_t>(expected.size()));
      CHECK(basis.states() == expected);
      CHECK(basis.size() == dimension(m, n));
    }
  }
}

TEST_CASE("basis order is ascending lexicographic with pinned endpoints") {
  const FockBasis two_two(2, 2);
  CHECK(two_two.states() == std::vector<Occupation>{{0, 2}, {1, 1}, {2, 0}});

  const FockBasis three_one(3, 1);
  CHECK(three_one.states() == std::vector<Occupation>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});

  const FockBasis basis(4, 3);
  CHECK(std::is_sorted(basis.states().begin(), basis.states().end()));
  CHECK(basis.state(0) == Occupation{0, 0, 0, 3});
  CHECK(basis.state(basis.size() - 1) == Occupation{3, 0, 0, 0});
}

TEST_CASE("index inverts state") {
  const FockBasis basis(4, 3);
  for (std::int64_t k = 0; k < basis.size(); ++k) {
    CHECK(basis.index(basis.state(k)) == k);
  }
}

TEST_CASE("index rejects occupations outside the basis") {
  const FockBasis basis(3, 2);
  CHECK_THROWS_AS(basis.index({2, 0}), ValidationError);         // wrong length
  CHECK_THROWS_AS(basis.index({1, 1, 1}), ValidationError);      // wrong total
  CHECK_THROWS_AS(basis.index({3, -1, 0}), ValidationError);     // negative count
}

TEST_CASE("basis construction is guarded") {
  CHECK_THROWS_AS(FockBasis(0, 2), ValidationError);
  CHECK_THROWS_AS(FockBasis(2, -1), ValidationError);
  // binomial(44, 15) ~ 2.3e11 states: representable, but far over the cap.
  CHECK_THROWS_AS(FockBasis(30, 15), CapacityError);
}

TEST_CASE("total_photons sums counts") {
  CHECK(total_photons({}) == 0);
  CHECK(total_photons({0, 0}) == 0);
  CHECK(total_photons({1, 0, 2}) == 3);
}

TEST_CASE("basis_state puts unit amplitude on the right component") {
  const FockBasis basis(3, 2);
  const StateVector state = basis_state(basis, {1, 1, 0});
  CHECK(state.amplitudes.size() == 6);
  CHECK(state.norm() == doctest::Approx(1.0));
  const std::int64_t k = basis.index({1, 1, 0});
  for (std::int64_t j = 0; j < basis.size(); ++j) {
    CHECK(state.amplitudes(j) == (j == k ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
  }
  CHECK_THROWS_AS(basis_state(basis, {2, 2, 0}), ValidationError);
}

TEST_CASE("coherent amplitudes follow the Poissonian recurrence") {
  const Complex alpha(0.3, -1.1);
  const auto amps = coherent_amplitudes(alpha, 12);
  REQUIRE(amps.size() == 13);
  CHECK(std::abs(amps[0] - std::exp(-0.5 * std::norm(alpha))) < 1e-15);
  for (std::size_t k = 0; k + 1 < amps.size(); ++k) {
    const Complex expected = amps[k] * alpha / std::sqrt(static_cast<double>(k + 1));
    CHECK(std::abs(amps[k + 1] - expected) < 1e-15);
  }

  SUBCASE("captured probability approaches one as the cutoff grows") {
    double captured = 0.0;
    for (const Complex& c : coherent_amplitudes(alpha, 40)) captured += std::norm(c);
    CHECK(captured == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("vacuum for alpha = 0") {
    const auto vac = coherent_amplitudes(Complex(0.0, 0.0), 3);
    CHECK(vac[0] == Complex(1.0, 0.0));
    CHECK(vac[1] == Complex(0.0, 0.0));
    CHECK(vac[3] == Complex(0.0, 0.0));
  }

  SUBCASE("negative cutoff is rejected") {
    CHECK_THROWS_AS(coherent_amplitudes(alpha, -1), ValidationError);
  }
}
