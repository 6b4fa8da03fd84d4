#ifndef MULTIPORT_FOCK_HPP
#define MULTIPORT_FOCK_HPP

#include <cstdint>
#include <vector>

#include "multiport/matrix.hpp"

namespace multiport {

/// Photon count per mode; one number-state label such as (1,0,2).
using Occupation = std::vector<int>;

std::int64_t total_photons(const Occupation& occ);

/// Number of ways to place n indistinguishable photons in m modes,
/// binomial(m+n-1, n). Exact in 64 bits; throws OverflowError when the
/// result does not fit.
std::int64_t dimension(int modes, int photons);

/// All occupations of `photons` photons in `modes` modes, in canonical
/// order: the first mode's count runs 0..photons ascending, recursing on
/// the remaining modes. This coincides with ascending lexicographic order.
class FockBasis {
 public:
  FockBasis(int modes, int photons);

  int modes() const { return modes_; }
  int photons() const { return photons_; }
  std::int64_t size() const { return static_cast<std::int64_t>(states_.size()); }

  const std::vector<Occupation>& states() const { return states_; }
  const Occupation& state(std::int64_t k) const { return states_.at(static_cast<std::size_t>(k)); }

  /// Position of `occ` in the canonical order; throws ValidationError if
  /// `occ` does not belong to this basis.
  std::int64_t index(const Occupation& occ) const;

  bool operator==(const FockBasis& other) const {
    return modes_ == other.modes_ && photons_ == other.photons_;
  }

 private:
  int modes_;
  int photons_;
  std::vector<Occupation> states_;
};

inline FockBasis enumerate_basis(int modes, int photons) { return FockBasis(modes, photons); }

/// A superposition over a fixed-photon-number basis.
struct StateVector {
  FockBasis basis;
  Vector amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// The single-occupation state |occ>.
StateVector basis_state(const FockBasis& basis, const Occupation& occ);

/// Number-state amplitudes c_k = exp(-|alpha|^2/2) alpha^k / sqrt(k!) for
/// k = 0..cutoff. Truncated, never renormalized; sum |c_k|^2 tells the
/// caller how much probability the cutoff captured.
std::vector<Complex> coherent_amplitudes(Complex alpha, int cutoff);

}  // namespace multiport

#endif
