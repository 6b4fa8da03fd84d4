#ifndef MULTIPORT_LIFT_HPP
#define MULTIPORT_LIFT_HPP

#include <vector>

#include "multiport/fock.hpp"
#include "multiport/matrix.hpp"

namespace multiport {

/// Unitarity tolerance applied to scattering-matrix inputs.
inline constexpr double kUnitaryInputTol = 1e-9;

/// Largest n-photon state space lift() will materialize densely.
inline constexpr std::int64_t kMaxLiftDimension = 10'000;

/// The M x M evolution operator induced on the n-photon state space by an
/// m x m scattering matrix, together with the basis it is written in.
/// Entry (row, col) is the amplitude from basis.state(col) to
/// basis.state(row).
struct LiftedUnitary {
  FockBasis basis;
  Matrix matrix;
};

/// Single transition amplitude <out| U |in> for the scattering matrix `s`:
/// Per(repeat_submatrix(s, out, in)) / sqrt(prod out! * prod in!).
/// Unitarity validation of `s` is on by default and can be disabled when the
/// caller already knows the matrix is unitary.
Complex transition_amplitude(const Matrix& s, const Occupation& in_occ, const Occupation& out_occ,
                             bool validate = true);

/// Full lifted unitary for `photons` photons through `s`. Columns are
/// independent and are filled in parallel for large bases; every entry is
/// identical to what the serial path produces.
LiftedUnitary lift(const Matrix& s, int photons, bool validate = true);

/// One column of lift(s, n): the amplitude from |in_occ> to every state of
/// `basis`, in basis order.
Vector lift_column(const Matrix& s, const FockBasis& basis, const Occupation& in_occ,
                   bool validate = true);

/// Evolves |in_occ> by expanding the transformed creation-operator
/// polynomial prod_i (sum_j S_ji a_j^dag)^{in_occ[i]} over monomials.
/// Independent of the permanent-based path; the two must agree.
StateVector evolve_via_operators(const Matrix& s, const Occupation& in_occ, bool validate = true);

/// Per-basis-state output probabilities |<k| U |input>|^2 for U = lift(s, n),
/// where n is the photon number of `input`. Requires a normalized input.
std::vector<double> output_distribution(const Matrix& s, const StateVector& input);

/// Applies a lifted unitary to a state on the same basis.
StateVector apply(const LiftedUnitary& u, const StateVector& input);

}  // namespace multiport

#endif
