#include "multiport/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "multiport/errors.hpp"

namespace multiport {

namespace {

// Largest basis enumerate_basis will materialize.
constexpr std::int64_t kMaxBasisStates = 1'000'000;

void require_mode_photon_counts(int modes, int photons, const char* context) {
  if (modes < 1) {
    throw ValidationError(std::string(context) + ": mode count must be >= 1, got " +
                          std::to_string(modes));
  }
  if (photons < 0) {
    throw ValidationError(std::string(context) + ": photon count must be >= 0, got " +
                          std::to_string(photons));
  }
}

void generate_states(int modes, int photons, int mode, Occupation& current,
                     std::vector<Occupation>& out) {
  if (mode == modes - 1) {
    current[static_cast<std::size_t>(mode)] = photons;
    out.push_back(current);
    return;
  }
  for (int i = 0; i <= photons; ++i) {
    current[static_cast<std::size_t>(mode)] = i;
    generate_states(modes, photons - i, mode + 1, current, out);
  }
}

}  // namespace

std::int64_t total_photons(const Occupation& occ) {
  return std::accumulate(occ.begin(), occ.end(), std::int64_t{0});
}

std::int64_t dimension(int modes, int photons) {
  require_mode_photon_counts(modes, photons, "dimension");
  // binomial(m+n-1, n) by the multiplicative rule; the division at step k is
  // exact because the running value is binomial(m-1+k, k).
  unsigned __int128 result = 1;
  for (int k = 1; k <= photons; ++k) {
    result = result * static_cast<unsigned __int128>(modes - 1 + k) / static_cast<unsigned>(k);
    if (result > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
      throw OverflowError("dimension: binomial(" + std::to_string(modes + photons - 1) + ", " +
                          std::to_string(photons) + ") exceeds 64-bit range");
    }
  }
  return static_cast<std::int64_t>(result);
}

FockBasis::FockBasis(int modes, int photons) : modes_(modes), photons_(photons) {
  require_mode_photon_counts(modes, photons, "enumerate_basis");
  const std::int64_t count = dimension(modes, photons);
  if (count > kMaxBasisStates) {
    throw CapacityError("enumerate_basis: basis with " + std::to_string(count) +
                        " states exceeds the limit of " + std::to_string(kMaxBasisStates));
  }
  states_.reserve(static_cast<std::size_t>(count));
  Occupation current(static_cast<std::size_t>(modes), 0);
  generate_states(modes, photons, 0, current, states_);
}

std::int64_t FockBasis::index(const Occupation& occ) const {
  // Canonical order is ascending lexicographic, so a binary search suffices.
  auto it = std::lower_bound(states_.begin(), states_.end(), occ);
  if (it == states_.end() || *it != occ) {
    std::string repr = "(";
    for (std::size_t i = 0; i < occ.size(); ++i) {
      repr += (i ? "," : "") + std::to_string(occ[i]);
    }
    repr += ")";
    throw ValidationError("FockBasis::index: occupation " + repr + " is not a state of " +
                          std::to_string(photons_) + " photons in " + std::to_string(modes_) +
                          " modes");
  }
  return static_cast<std::int64_t>(it - states_.begin());
}

StateVector basis_state(const FockBasis& basis, const Occupation& occ) {
  StateVector state{basis, Vector::Zero(basis.size())};
  state.amplitudes(basis.index(occ)) = Complex(1.0, 0.0);
  return state;
}

std::vector<Complex> coherent_amplitudes(Complex alpha, int cutoff) {
  if (cutoff < 0) {
    throw ValidationError("coherent_amplitudes: cutoff must be >= 0, got " +
                          std::to_string(cutoff));
  }
  const double mod_sq = std::norm(alpha);
  if (!std::isfinite(mod_sq)) {
    throw OverflowError("coherent_amplitudes: |alpha|^2 overflows");
  }
  std::vector<Complex> amps(static_cast<std::size_t>(cutoff) + 1);
  amps[0] = Complex(std::exp(-mod_sq / 2.0), 0.0);
  // c_{k+1} = c_k * alpha / sqrt(k+1) avoids explicit factorials.
  for (int k = 0; k < cutoff; ++k) {
    amps[static_cast<std::size_t>(k) + 1] =
        amps[static_cast<std::size_t>(k)] * alpha / std::sqrt(static_cast<double>(k + 1));
  }
  for (const Complex& c : amps) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw OverflowError("coherent_amplitudes: amplitude overflow for |alpha| = " +
                          std::to_string(std::abs(alpha)));
    }
  }
  return amps;
}

}  // namespace multiport
