#include "multiport/universality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "multiport/errors.hpp"

namespace multiport {

namespace {

constexpr double kGradientStep = 1e-6;

void require_system(int modes, int photons, const char* context) {
  if (modes < 1) {
    throw ValidationError(std::string(context) + ": mode count must be >= 1, got " +
                          std::to_string(modes));
  }
  if (photons < 0) {
    throw ValidationError(std::string(context) + ": photon count must be >= 0, got " +
                          std::to_string(photons));
  }
}

void require_config(const OptimizerConfig& cfg, const char* context) {
  if (cfg.restarts < 1 || cfg.max_iterations < 1 || !(cfg.step_tolerance > 0.0) ||
      !(cfg.value_tolerance > 0.0)) {
    throw ValidationError(std::string(context) +
                          ": optimizer config must have positive restarts, iterations and "
                          "tolerances");
  }
}

struct LocalRun {
  std::vector<double> point;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Gradient ascent with central finite differences and a doubling/halving
// line search. Stops when the step collapses below step_tolerance, when an
// accepted step improves by less than value_tolerance, or when the
// iteration budget runs out.
LocalRun ascend(const std::function<double(const std::vector<double>&)>& objective,
                std::vector<double> x, const OptimizerConfig& cfg) {
  LocalRun run;
  double fx = objective(x);
  double step = 0.25;
  std::vector<double> gradient(x.size());
  std::vector<double> trial(x.size());
  while (run.iterations < cfg.max_iterations) {
    ++run.iterations;
    double gradient_norm_sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double saved = x[i];
      x[i] = saved + kGradientStep;
      const double f_plus = objective(x);
      x[i] = saved - kGradientStep;
      const double f_minus = objective(x);
      x[i] = saved;
      gradient[i] = (f_plus - f_minus) / (2.0 * kGradientStep);
      gradient_norm_sq += gradient[i] * gradient[i];
    }
    const double gradient_norm = std::sqrt(gradient_norm_sq);
    if (gradient_norm < 1e-14) {
      run.converged = true;
      break;
    }
    bool accepted = false;
    while (step >= cfg.step_tolerance) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        trial[i] = x[i] + step / gradient_norm * gradient[i];
      }
      const double ft = objective(trial);
      if (ft > fx) {
        const double gain = ft - fx;
        x = trial;
        fx = ft;
        accepted = true;
        step = std::min(2.0 * step, 1.0);
        if (gain < cfg.value_tolerance) run.converged = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      run.converged = true;
      break;
    }
    if (run.converged) break;
  }
  run.point = std::move(x);
  run.value = fx;
  return run;
}

// Multi-start driver: starting points come from one seeded generator, runs
// execute in restart order, and the best run wins with first-found
// tie-breaking, so results are reproducible for a fixed seed.
LocalRun multistart(const std::function<double(const std::vector<double>&)>& objective,
                    std::size_t parameter_count, const OptimizerConfig& cfg) {
  std::mt19937_64 engine(cfg.seed);
  auto uniform_angle = [&engine] {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return (2.0 * u - 1.0) * std::numbers::pi;
  };
  LocalRun best;
  int total_iterations = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> start(parameter_count);
    for (double& p : start) p = uniform_angle();
    LocalRun run = ascend(objective, std::move(start), cfg);
    total_iterations += run.iterations;
    if (r == 0 || run.value > best.value) {
      best = std::move(run);
    }
  }
  best.iterations = total_iterations;
  return best;
}

}  // namespace

namespace detail {

int mesh_parameter_count(int modes) { return modes * modes; }

Circuit mesh_circuit(int modes, const std::vector<double>& params) {
  if (static_cast<int>(params.size()) != mesh_parameter_count(modes)) {
    throw ValidationError("mesh_circuit: expected " + std::to_string(mesh_parameter_count(modes)) +
                          " parameters, got " + std::to_string(params.size()));
  }
  Circuit circuit{modes, {}};
  std::size_t p = 0;
  for (int mode = 1; mode <= modes; ++mode) {
    circuit.elements.push_back(PhaseShifter{mode, params[p++]});
  }
  const auto pairs = multiport::detail::reck_pair_sequence(modes);
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    const double theta = params[p++];
    const double phi = params[p++];
    circuit.elements.push_back(BeamSplitter{it->first, it->second, theta, phi});
  }
  return circuit;
}

}  // namespace detail

std::string to_string(UniversalityTag tag) {
  switch (tag) {
    case UniversalityTag::Vacuum:
      return "Vacuum";
    case UniversalityTag::SingleMode:
      return "SingleMode";
    case UniversalityTag::SinglePhoton:
      return "SinglePhoton";
    case UniversalityTag::NotUniversal:
      return "NotUniversal";
  }
  throw ValidationError("to_string: unknown universality tag");
}

bool necessary_condition(int modes, int photons) {
  require_system(modes, photons, "necessary_condition");
  try {
    return static_cast<std::int64_t>(modes) >= dimension(modes, photons);
  } catch (const OverflowError&) {
    // The state space exceeds 2^63 states; it certainly exceeds m.
    return false;
  }
}

UniversalityClass classify(int modes, int photons) {
  require_system(modes, photons, "classify");
  UniversalityTag tag;
  if (photons == 0) {
    tag = UniversalityTag::Vacuum;
  } else if (modes == 1) {
    tag = UniversalityTag::SingleMode;
  } else if (photons == 1) {
    tag = UniversalityTag::SinglePhoton;
  } else {
    tag = UniversalityTag::NotUniversal;
  }
  const std::int64_t dim = dimension(modes, photons);
  return UniversalityClass{tag, modes, photons, dim, modes >= dim};
}

SearchResult max_state_overlap(int modes, int photons, const Occupation& input,
                               const StateVector& target, const OptimizerConfig& cfg) {
  require_system(modes, photons, "max_state_overlap");
  require_config(cfg, "max_state_overlap");
  if (target.basis.modes() != modes || target.basis.photons() != photons) {
    throw ValidationError("max_state_overlap: target basis is over " +
                          std::to_string(target.basis.photons()) + " photons in " +
                          std::to_string(target.basis.modes()) + " modes, expected (" +
                          std::to_string(modes) + ", " + std::to_string(photons) + ")");
  }
  if (target.amplitudes.size() != target.basis.size()) {
    throw ValidationError("max_state_overlap: target amplitude count does not match its basis");
  }
  if (std::abs(target.norm() - 1.0) > kUnitaryInputTol) {
    throw ValidationError("max_state_overlap: target state is not normalized (norm " +
                          std::to_string(target.norm()) + "); zero or unnormalized targets are "
                          "rejected rather than rescaled");
  }
  if (static_cast<int>(input.size()) != modes || total_photons(input) != photons) {
    throw ValidationError("max_state_overlap: input occupation does not describe " +
                          std::to_string(photons) + " photons in " + std::to_string(modes) +
                          " modes");
  }

  const FockBasis& basis = target.basis;
  auto objective = [&](const std::vector<double>& params) {
    const Matrix s = compose(detail::mesh_circuit(modes, params));
    const Vector column = lift_column(s, basis, input, /*validate=*/false);
    return std::norm(target.amplitudes.dot(column));
  };

  const LocalRun best =
      multistart(objective, static_cast<std::size_t>(detail::mesh_parameter_count(modes)), cfg);

  SearchResult result;
  result.best_circuit = detail::mesh_circuit(modes, best.point);
  result.best_s = compose(result.best_circuit);
  // Certify the value by a fresh, validated evaluation at the best point.
  const Vector column = lift_column(result.best_s, basis, input, /*validate=*/true);
  result.best_value = std::norm(target.amplitudes.dot(column));
  result.iterations_used = best.iterations;
  result.converged = best.converged;
  return result;
}

SearchResult closest_lifted_unitary(const LiftedUnitary& target, const OptimizerConfig& cfg) {
  require_config(cfg, "closest_lifted_unitary");
  const int modes = target.basis.modes();
  const int photons = target.basis.photons();
  const std::int64_t dim = dimension(modes, photons);
  if (target.matrix.rows() != target.matrix.cols() || target.matrix.rows() != dim) {
    throw ValidationError("closest_lifted_unitary: target matrix is " +
                          std::to_string(target.matrix.rows()) + "x" +
                          std::to_string(target.matrix.cols()) + " but its basis has dimension " +
                          std::to_string(dim));
  }

  // Parameters: the m^2 mesh angles plus one global phase applied to the
  // lifted matrix. The squared distance is optimized (it is smooth at the
  // minimum); the reported value is the distance itself.
  const auto mesh_count = static_cast<std::size_t>(detail::mesh_parameter_count(modes));
  auto distance_sq = [&](const std::vector<double>& params) {
    const std::vector<double> mesh(params.begin(), params.begin() + static_cast<long>(mesh_count));
    const Matrix s = compose(detail::mesh_circuit(modes, mesh));
    const LiftedUnitary lifted = lift(s, photons, /*validate=*/false);
    const Complex phase = std::polar(1.0, params[mesh_count]);
    return (phase * lifted.matrix - target.matrix).squaredNorm();
  };
  auto objective = [&](const std::vector<double>& params) { return -distance_sq(params); };

  const LocalRun best = multistart(objective, mesh_count + 1, cfg);

  SearchResult result;
  const std::vector<double> mesh(best.point.begin(), best.point.end() - 1);
  result.best_circuit = detail::mesh_circuit(modes, mesh);
  result.best_s = compose(result.best_circuit);
  const LiftedUnitary lifted = lift(result.best_s, photons, /*validate=*/true);
  const Complex phase = std::polar(1.0, best.point.back());
  result.best_value = (phase * lifted.matrix - target.matrix).norm();
  result.iterations_used = best.iterations;
  result.converged = best.converged;
  return result;
}

}  // namespace multiport
