#ifndef MULTIPORT_UNIVERSALITY_HPP
#define MULTIPORT_UNIVERSALITY_HPP

#include <cstdint>
#include <string>

#include "multiport/circuit.hpp"
#include "multiport/fock.hpp"
#include "multiport/lift.hpp"
#include "multiport/matrix.hpp"

namespace multiport {

/// The four-way split of (modes, photons) systems by whether every unitary
/// on the photonic state space is reachable through the scattering matrix.
enum class UniversalityTag {
  Vacuum,        // n = 0: one-dimensional state space, trivially universal
  SingleMode,    // m = 1: any photon number, the device is a phase shifter
  SinglePhoton,  // n = 1: the lifted unitary equals the scattering matrix
  NotUniversal,  // m > 1 and n > 1: the state space outgrows the device
};

std::string to_string(UniversalityTag tag);

struct UniversalityClass {
  UniversalityTag tag;
  int modes;
  int photons;
  std::int64_t dim;  // state-space dimension M
  bool condition_met;
};

/// True iff m >= binomial(m+n-1, n), the counting bound a universal system
/// must satisfy. Holds exactly when n <= 1 or m == 1.
bool necessary_condition(int modes, int photons);

UniversalityClass classify(int modes, int photons);

struct OptimizerConfig {
  int restarts = 8;
  int max_iterations = 600;
  double step_tolerance = 1e-10;   // line-search step floor
  double value_tolerance = 1e-13;  // accepted-improvement floor
  std::uint64_t seed = 7;
};

struct SearchResult {
  double best_value = 0.0;
  Matrix best_s;
  Circuit best_circuit;
  int iterations_used = 0;
  bool converged = false;
};

/// Multi-start search for max over unitary S of |<target| lift(S, n) |input>|^2.
/// S is parameterized by a full triangular mesh (m phase shifters plus
/// m(m-1)/2 beam splitters), ascended with finite-difference gradients. The
/// reported value is re-evaluated from a fresh lift at the best point, so it
/// is always attained by best_s.
SearchResult max_state_overlap(int modes, int photons, const Occupation& input,
                               const StateVector& target, const OptimizerConfig& cfg);

/// Multi-start search for min over unitary S and global phase gamma of
/// || exp(i gamma) lift(S, n) - target ||_F. A small reported distance means
/// the target operator is realizable; a floor bounded away from zero
/// witnesses infeasibility.
SearchResult closest_lifted_unitary(const LiftedUnitary& target, const OptimizerConfig& cfg);

namespace detail {

/// Number of mesh parameters for m modes: m phases + 2 angles per coupler,
/// m^2 in total.
int mesh_parameter_count(int modes);

/// Circuit with the same element layout reck_decompose emits, filled with
/// the given parameters; covers all of U(m).
Circuit mesh_circuit(int modes, const std::vector<double>& params);

}  // namespace detail

}  // namespace multiport

#endif
