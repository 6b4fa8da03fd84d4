#include "multiport/lift.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "multiport/errors.hpp"
#include "multiport/permanent.hpp"

namespace multiport {

namespace {

constexpr std::int64_t kParallelColumnThreshold = 64;

void require_occupation(const Occupation& occ, int modes, const char* name) {
  if (static_cast<int>(occ.size()) != modes) {
    throw ValidationError(std::string(name) + " has length " + std::to_string(occ.size()) +
                          ", expected " + std::to_string(modes));
  }
  for (int c : occ) {
    if (c < 0) {
      throw ValidationError(std::string(name) + " contains a negative photon count");
    }
  }
}

double factorial_product(const Occupation& occ) {
  double prod = 1.0;
  for (int c : occ) {
    for (int k = 2; k <= c; ++k) prod *= static_cast<double>(k);
  }
  return prod;
}

// Amplitude with all validation already done by the caller.
Complex amplitude_unchecked(const Matrix& s, const Occupation& in_occ, const Occupation& out_occ) {
  const Complex per = permanent(repeat_submatrix(s, out_occ, in_occ));
  return per / std::sqrt(factorial_product(out_occ) * factorial_product(in_occ));
}

Vector column_unchecked(const Matrix& s, const FockBasis& basis, const Occupation& in_occ) {
  Vector column(basis.size());
  for (std::int64_t row = 0; row < basis.size(); ++row) {
    column(row) = amplitude_unchecked(s, in_occ, basis.state(row));
  }
  return column;
}

}  // namespace

Complex transition_amplitude(const Matrix& s, const Occupation& in_occ, const Occupation& out_occ,
                             bool validate) {
  if (s.rows() != s.cols()) {
    throw ValidationError("transition_amplitude: matrix is " + std::to_string(s.rows()) + "x" +
                          std::to_string(s.cols()) + ", expected square");
  }
  const auto modes = static_cast<int>(s.rows());
  require_occupation(in_occ, modes, "transition_amplitude: in_occ");
  require_occupation(out_occ, modes, "transition_amplitude: out_occ");
  if (total_photons(in_occ) != total_photons(out_occ)) {
    throw ValidationError("transition_amplitude: photon totals differ between in_occ and out_occ");
  }
  if (validate) require_unitary(s, kUnitaryInputTol, "transition_amplitude");
  return amplitude_unchecked(s, in_occ, out_occ);
}

LiftedUnitary lift(const Matrix& s, int photons, bool validate) {
  if (s.rows() != s.cols() || s.rows() < 1) {
    throw ValidationError("lift: matrix is " + std::to_string(s.rows()) + "x" +
                          std::to_string(s.cols()) + ", expected square and non-empty");
  }
  if (validate) require_unitary(s, kUnitaryInputTol, "lift");
  const auto modes = static_cast<int>(s.rows());
  const std::int64_t dim = dimension(modes, photons);
  if (dim > kMaxLiftDimension) {
    throw CapacityError("lift: state space of dimension " + std::to_string(dim) +
                        " exceeds the dense-storage limit of " + std::to_string(kMaxLiftDimension));
  }

  LiftedUnitary result{FockBasis(modes, photons), Matrix(dim, dim)};
  const FockBasis& basis = result.basis;
  auto fill_column = [&](std::int64_t col) {
    result.matrix.col(col) = column_unchecked(s, basis, basis.state(col));
  };

  if (dim >= kParallelColumnThreshold && std::thread::hardware_concurrency() > 1) {
    // Columns are independent work units; each entry is computed by the same
    // serial code, so the parallel fill is entry-for-entry deterministic.
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
      for (std::int64_t col = next.fetch_add(1); col < dim; col = next.fetch_add(1)) {
        fill_column(col);
      }
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto n_workers = static_cast<std::size_t>(
        std::min<std::int64_t>(static_cast<std::int64_t>(hw), dim));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  } else {
    for (std::int64_t col = 0; col < dim; ++col) fill_column(col);
  }
  return result;
}

Vector lift_column(const Matrix& s, const FockBasis& basis, const Occupation& in_occ,
                   bool validate) {
  if (s.rows() != s.cols() || s.rows() != basis.modes()) {
    throw ValidationError("lift_column: matrix side " + std::to_string(s.rows()) +
                          " does not match the basis over " + std::to_string(basis.modes()) +
                          " modes");
  }
  require_occupation(in_occ, basis.modes(), "lift_column: in_occ");
  if (total_photons(in_occ) != basis.photons()) {
    throw ValidationError("lift_column: in_occ photon total does not match the basis");
  }
  if (validate) require_unitary(s, kUnitaryInputTol, "lift_column");
  return column_unchecked(s, basis, in_occ);
}

StateVector evolve_via_operators(const Matrix& s, const Occupation& in_occ, bool validate) {
  if (s.rows() != s.cols() || s.rows() < 1) {
    throw ValidationError("evolve_via_operators: matrix is " + std::to_string(s.rows()) + "x" +
                          std::to_string(s.cols()) + ", expected square and non-empty");
  }
  const auto modes = static_cast<int>(s.rows());
  require_occupation(in_occ, modes, "evolve_via_operators: in_occ");
  if (validate) require_unitary(s, kUnitaryInputTol, "evolve_via_operators");

  const auto photons = static_cast<int>(total_photons(in_occ));
  FockBasis basis(modes, photons);

  // Polynomial in the m creation operators, keyed by exponent vector.
  // Multiplying once per input photon by (sum_j S_ji a_j^dag) performs the
  // multinomial expansion.
  std::map<Occupation, Complex> poly;
  poly[Occupation(static_cast<std::size_t>(modes), 0)] = Complex(1.0, 0.0);
  for (int i = 0; i < modes; ++i) {
    for (int rep = 0; rep < in_occ[static_cast<std::size_t>(i)]; ++rep) {
      std::map<Occupation, Complex> next;
      for (const auto& [mono, coef] : poly) {
        for (int j = 0; j < modes; ++j) {
          const Complex s_ji = s(j, i);
          if (s_ji == Complex(0.0, 0.0)) continue;
          Occupation raised = mono;
          ++raised[static_cast<std::size_t>(j)];
          next[raised] += coef * s_ji;
        }
      }
      poly = std::move(next);
    }
  }

  // (a_j^dag)^{k_j} |0> = sqrt(k_j!) |k_j>, and the input normalization
  // contributes 1/sqrt(prod in_occ!).
  const double input_norm = std::sqrt(factorial_product(in_occ));
  Vector amps = Vector::Zero(basis.size());
  for (const auto& [mono, coef] : poly) {
    amps(basis.index(mono)) = coef * std::sqrt(factorial_product(mono)) / input_norm;
  }
  return StateVector{std::move(basis), std::move(amps)};
}

std::vector<double> output_distribution(const Matrix& s, const StateVector& input) {
  if (s.rows() != s.cols() || s.rows() != static_cast<Eigen::Index>(input.basis.modes())) {
    throw ValidationError("output_distribution: matrix side " + std::to_string(s.rows()) +
                          " does not match the state's " + std::to_string(input.basis.modes()) +
                          " modes");
  }
  if (input.amplitudes.size() != input.basis.size()) {
    throw ValidationError("output_distribution: amplitude count does not match basis size");
  }
  if (std::abs(input.norm() - 1.0) > kUnitaryInputTol) {
    throw ValidationError("output_distribution: input state is not normalized (norm " +
                          std::to_string(input.norm()) + ")");
  }
  const LiftedUnitary u = lift(s, input.basis.photons());
  const Vector out = u.matrix * input.amplitudes;
  std::vector<double> probs(static_cast<std::size_t>(out.size()));
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    probs[static_cast<std::size_t>(k)] = std::norm(out(k));
  }
  return probs;
}

StateVector apply(const LiftedUnitary& u, const StateVector& input) {
  if (!(u.basis == input.basis)) {
    throw ValidationError("apply: lifted unitary is over " + std::to_string(u.basis.photons()) +
                          " photons in " + std::to_string(u.basis.modes()) +
                          " modes but the state is over " + std::to_string(input.basis.photons()) +
                          " photons in " + std::to_string(input.basis.modes()) + " modes");
  }
  if (u.matrix.rows() != u.matrix.cols() || u.matrix.rows() != u.basis.size()) {
    throw ValidationError("apply: lifted matrix side does not match its basis dimension");
  }
  return StateVector{input.basis, u.matrix * input.amplitudes};
}

}  // namespace multiport
