#ifndef MULTIPORT_CIRCUIT_HPP
#define MULTIPORT_CIRCUIT_HPP

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "multiport/matrix.hpp"

namespace multiport {

/// Mode indices on circuit elements are 1-based, matching the usual port
/// numbering of an m-port device.
struct PhaseShifter {
  int mode;
  double phi;
};

/// Two-mode coupler acting on modes (mode_a, mode_b) as the block
///   [ cos(theta)                exp(i phi) sin(theta) ]
///   [ -exp(-i phi) sin(theta)   cos(theta)            ].
struct BeamSplitter {
  int mode_a;
  int mode_b;
  double theta;
  double phi;
};

using CircuitElement = std::variant<PhaseShifter, BeamSplitter>;

/// An ordered list of elements; elements[0] acts on the input first.
struct Circuit {
  int modes = 0;
  std::vector<CircuitElement> elements;
};

/// Identity with entry (mode, mode) replaced by exp(i phi).
Matrix phase_shifter(int modes, int mode, double phi);

/// Identity with the 2x2 block on (mode_a, mode_b) set to the beam-splitter
/// block documented on BeamSplitter.
Matrix beam_splitter(int modes, int mode_a, int mode_b, double theta, double phi);

Matrix element_matrix(int modes, const CircuitElement& element);

/// Product of the element matrices; an empty circuit composes to identity.
Matrix compose(const Circuit& circuit);

/// Factors a unitary into at most m(m-1)/2 beam splitters plus m phase
/// shifters whose composition reproduces it. The scheme nulls sub-diagonal
/// entries column by column with adjacent-mode rotations and emits the
/// residual diagonal as explicit phase shifters.
Circuit reck_decompose(const Matrix& s);

/// Haar-distributed random unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases folded back in. Deterministic for a fixed seed.
Matrix haar_random_unitary(int modes, std::uint64_t seed);

namespace detail {

/// Adjacent-mode pairs (1-based) in the order reck_decompose nulls them.
std::vector<std::pair<int, int>> reck_pair_sequence(int modes);

}  // namespace detail

}  // namespace multiport

#endif
