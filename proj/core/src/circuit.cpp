#include "multiport/circuit.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "multiport/errors.hpp"
#include "multiport/lift.hpp"

namespace multiport {

namespace {

void require_mode_index(int modes, int mode, const char* context) {
  if (mode < 1 || mode > modes) {
    throw ValidationError(std::string(context) + ": mode index " + std::to_string(mode) +
                          " out of range [1, " + std::to_string(modes) + "]");
  }
}

void require_finite_angle(double value, const char* context) {
  if (!std::isfinite(value)) {
    throw ValidationError(std::string(context) + ": angle is not finite");
  }
}

// One standard normal deviate from the raw engine; avoids the
// implementation-defined std::normal_distribution so that fixed seeds give
// identical matrices everywhere.
double gaussian(std::mt19937_64& engine, bool& has_spare, double& spare) {
  if (has_spare) {
    has_spare = false;
    return spare;
  }
  const double u1 = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log1p(-u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare = radius * std::sin(angle);
  has_spare = true;
  return radius * std::cos(angle);
}

}  // namespace

Matrix phase_shifter(int modes, int mode, double phi) {
  if (modes < 1) {
    throw ValidationError("phase_shifter: mode count must be >= 1");
  }
  require_mode_index(modes, mode, "phase_shifter");
  require_finite_angle(phi, "phase_shifter");
  Matrix result = Matrix::Identity(modes, modes);
  result(mode - 1, mode - 1) = std::polar(1.0, phi);
  return result;
}

Matrix beam_splitter(int modes, int mode_a, int mode_b, double theta, double phi) {
  if (modes < 2) {
    throw ValidationError("beam_splitter: needs at least two modes");
  }
  require_mode_index(modes, mode_a, "beam_splitter");
  require_mode_index(modes, mode_b, "beam_splitter");
  if (mode_a == mode_b) {
    throw ValidationError("beam_splitter: modes must be distinct");
  }
  require_finite_angle(theta, "beam_splitter");
  require_finite_angle(phi, "beam_splitter");
  const int a = mode_a - 1;
  const int b = mode_b - 1;
  Matrix result = Matrix::Identity(modes, modes);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  result(a, a) = c;
  result(a, b) = std::polar(s, phi);
  result(b, a) = -std::polar(s, -phi);
  result(b, b) = c;
  return result;
}

Matrix element_matrix(int modes, const CircuitElement& element) {
  if (const auto* ps = std::get_if<PhaseShifter>(&element)) {
    return phase_shifter(modes, ps->mode, ps->phi);
  }
  const auto& bs = std::get<BeamSplitter>(element);
  return beam_splitter(modes, bs.mode_a, bs.mode_b, bs.theta, bs.phi);
}

Matrix compose(const Circuit& circuit) {
  if (circuit.modes < 1) {
    throw ValidationError("compose: circuit mode count must be >= 1");
  }
  Matrix result = Matrix::Identity(circuit.modes, circuit.modes);
  // elements[0] acts first, so it sits rightmost in the product.
  for (const CircuitElement& element : circuit.elements) {
    result = element_matrix(circuit.modes, element) * result;
  }
  return result;
}

namespace detail {

std::vector<std::pair<int, int>> reck_pair_sequence(int modes) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(modes) * (static_cast<std::size_t>(modes) - 1) / 2);
  for (int col = 0; col < modes - 1; ++col) {
    for (int row = modes - 1; row > col; --row) {
      pairs.emplace_back(row, row + 1);  // 1-based modes (row-1, row) in 0-based terms
    }
  }
  return pairs;
}

}  // namespace detail

Circuit reck_decompose(const Matrix& s) {
  require_unitary(s, kUnitaryInputTol, "reck_decompose");
  const auto modes = static_cast<int>(s.rows());

  // Null each sub-diagonal entry with a rotation G on adjacent rows; the
  // accumulated G_K ... G_1 S is then diagonal, so S = G_1' ... G_K' D with
  // G' the adjoint rotations (theta negated) and D a phase layer.
  Matrix work = s;
  struct Rotation {
    double theta;
    double phi;
  };
  std::vector<Rotation> rotations;
  const auto pairs = detail::reck_pair_sequence(modes);
  rotations.reserve(pairs.size());
  for (int col = 0; col < modes - 1; ++col) {
    for (int row = modes - 1; row > col; --row) {
      const int a = row - 1;
      const int b = row;
      const Complex above = work(a, col);
      const Complex target = work(b, col);
      const double mag_above = std::abs(above);
      const double mag_target = std::abs(target);
      double theta = 0.0;
      double phi = 0.0;
      if (mag_target > 0.0) {
        theta = std::atan2(mag_target, mag_above);
        phi = std::arg(above) - std::arg(target);
      }
      rotations.push_back({theta, phi});
      // Apply the rotation rows: row a <- c*a + e^{i phi} s*b,
      // row b <- -e^{-i phi} s*a + c*b; this zeroes work(b, col).
      const double c = std::cos(theta);
      const double sn = std::sin(theta);
      const Complex es = std::polar(sn, phi);
      for (Eigen::Index k = 0; k < modes; ++k) {
        const Complex ra = work(a, k);
        const Complex rb = work(b, k);
        work(a, k) = c * ra + es * rb;
        work(b, k) = -std::conj(es) * ra + c * rb;
      }
    }
  }

  Circuit circuit{modes, {}};
  circuit.elements.reserve(static_cast<std::size_t>(modes) + rotations.size());
  // Residual diagonal phases come first (rightmost factor), one per mode.
  for (int k = 0; k < modes; ++k) {
    circuit.elements.push_back(PhaseShifter{k + 1, std::arg(work(k, k))});
  }
  // Adjoint rotations in reverse nulling order complete the product.
  for (std::size_t k = rotations.size(); k-- > 0;) {
    const auto& [mode_a, mode_b] = pairs[k];
    circuit.elements.push_back(BeamSplitter{mode_a, mode_b, -rotations[k].theta, rotations[k].phi});
  }
  return circuit;
}

Matrix haar_random_unitary(int modes, std::uint64_t seed) {
  if (modes < 1) {
    throw ValidationError("haar_random_unitary: mode count must be >= 1");
  }
  std::mt19937_64 engine(seed);
  bool has_spare = false;
  double spare = 0.0;
  Matrix ginibre(modes, modes);
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) {
      const double re = gaussian(engine, has_spare, spare);
      const double im = gaussian(engine, has_spare, spare);
      ginibre(i, j) = Complex(re, im);
    }
  }
  const Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ();
  // Fold the R-diagonal phases back in; without this the QR convention
  // biases the distribution away from Haar.
  const Vector diag = qr.matrixQR().diagonal();
  for (int k = 0; k < modes; ++k) {
    const double mag = std::abs(diag(k));
    const Complex phase = mag > 0.0 ? diag(k) / mag : Complex(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

}  // namespace multiport
