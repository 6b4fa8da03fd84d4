#include "cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "multiport/circuit.hpp"
#include "multiport/errors.hpp"
#include "multiport/fock.hpp"
#include "multiport/lift.hpp"
#include "multiport/serialize.hpp"
#include "multiport/universality.hpp"

namespace multiport::cli {
namespace {

/// Rounds every float in the document to 12 significant digits so output is
/// stable across platforms and independent of how a value was computed.
void round_floats(Json& value) {
  if (value.is_number_float()) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value.get<double>());
    value = std::strtod(buffer, nullptr);
  } else if (value.is_array() || value.is_object()) {
    for (auto& child : value) {
      round_floats(child);
    }
  }
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

/// Reads a whole file, or standard input when the path is "-".
std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) {
      throw ValidationError("cannot open file: " + path);
    }
    text << file.rdbuf();
  }
  return text.str();
}

Json load_json(const std::string& path, std::istream& in) {
  return parse_json(slurp(path, in), path == "-" ? "<stdin>" : path);
}

void emit(const Json& document, const std::string& output_path, std::ostream& out) {
  Json rounded = document;
  round_floats(rounded);
  const std::string text = rounded.dump(2) + "\n";
  if (output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(output_path);
    if (!file) {
      throw ValidationError("cannot open output file: " + output_path);
    }
    file << text;
  }
}

/// Accepts either a comma-separated list ("1,0,2") or a compact digit string
/// ("102") and returns the per-mode photon counts.
Occupation parse_occupation(const std::string& token) {
  if (token.empty()) {
    throw ValidationError("occupation must not be empty");
  }
  Occupation occupation;
  if (token.find(',') != std::string::npos) {
    std::stringstream parts(token);
    std::string part;
    while (std::getline(parts, part, ',')) {
      std::size_t used = 0;
      int count = 0;
      try {
        count = std::stoi(part, &used);
      } catch (const std::exception&) {
        throw ValidationError("bad occupation entry '" + part + "' in '" + token + "'");
      }
      if (used != part.size() || count < 0) {
        throw ValidationError("bad occupation entry '" + part + "' in '" + token + "'");
      }
      occupation.push_back(count);
    }
    if (occupation.empty()) {
      throw ValidationError("occupation must not be empty");
    }
  } else {
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ValidationError("occupation '" + token + "' must be digits or a comma-separated list");
      }
      occupation.push_back(c - '0');
    }
  }
  return occupation;
}

bool looks_like_occupation(const std::string& token) {
  if (token.empty()) {
    return false;
  }
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != ',') {
      return false;
    }
  }
  return true;
}

Complex parse_complex(const std::string& token) {
  const auto parse_part = [&](const std::string& part) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ValidationError("bad number '" + part + "' in '" + token + "'");
    }
    if (used != part.size()) {
      throw ValidationError("bad number '" + part + "' in '" + token + "'");
    }
    return value;
  };
  const std::size_t comma = token.find(',');
  if (comma == std::string::npos) {
    return {parse_part(token), 0.0};
  }
  return {parse_part(token.substr(0, comma)), parse_part(token.substr(comma + 1))};
}

struct OptimizerFlags {
  OptimizerConfig config;

  void attach(CLI::App& command) {
    command.add_option("--seed", config.seed, "random seed for the restarts");
    command.add_option("--restarts", config.restarts, "number of random restarts")
      ->check(CLI::PositiveNumber);
    command.add_option("--max-iterations", config.max_iterations, "iteration cap per restart")
      ->check(CLI::PositiveNumber);
    command.add_option("--step-tol", config.step_tolerance, "stop when the line-search step shrinks below this");
    command.add_option("--value-tol", config.value_tolerance, "stop when the objective gain falls below this");
  }
};

int run_lift(const std::string& matrix_path, int photons, bool validate,
             const std::string& output_path, std::istream& in, std::ostream& out) {
  const Matrix scattering = matrix_from_json(load_json(matrix_path, in));
  const LiftedUnitary lifted = lift(scattering, photons, validate);
  emit(lifted_to_json(lifted), output_path, out);
  return 0;
}

int run_evolve(const std::string& matrix_path, const std::string& input_token,
               const std::string& state_path, bool distribution,
               const std::string& output_path, std::istream& in, std::ostream& out) {
  const Matrix scattering = matrix_from_json(load_json(matrix_path, in));
  const StateVector output = [&]() -> StateVector {
    if (!state_path.empty()) {
      const StateVector input_state = state_from_json(load_json(state_path, in));
      return apply(lift(scattering, input_state.basis.photons()), input_state);
    }
    return evolve_via_operators(scattering, parse_occupation(input_token));
  }();
  Json document = state_to_json(output);
  if (distribution) {
    Json probabilities = Json::array();
    for (Eigen::Index k = 0; k < output.amplitudes.size(); ++k) {
      probabilities.push_back(std::norm(output.amplitudes(k)));
    }
    document["distribution"] = std::move(probabilities);
  }
  emit(document, output_path, out);
  return 0;
}

int run_decompose(const std::string& matrix_path, const std::string& output_path,
                  std::istream& in, std::ostream& out) {
  const Matrix scattering = matrix_from_json(load_json(matrix_path, in));
  const Circuit circuit = reck_decompose(scattering);
  emit(circuit_to_json(circuit), output_path, out);
  return 0;
}

int run_classify(int modes, int photons, const std::string& output_path, std::ostream& out) {
  emit(classification_to_json(classify(modes, photons)), output_path, out);
  return 0;
}

int run_coherent(const std::string& alpha_token, int cutoff,
                 const std::string& output_path, std::ostream& out) {
  const Complex alpha = parse_complex(alpha_token);
  const std::vector<Complex> amplitudes = coherent_amplitudes(alpha, cutoff);
  double captured = 0.0;
  Json terms = Json::array();
  for (const Complex& amplitude : amplitudes) {
    captured += std::norm(amplitude);
    terms.push_back(Json::array({amplitude.real(), amplitude.imag()}));
  }
  Json document = {
    {"alpha", Json::array({alpha.real(), alpha.imag()})},
    {"cutoff", cutoff},
    {"amplitudes", std::move(terms)},
    {"captured_probability", captured},
  };
  emit(document, output_path, out);
  return 0;
}

int run_overlap(int modes, int photons, const std::string& input_token,
                const std::string& target_token, const OptimizerConfig& config,
                const std::string& output_path, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const FockBasis basis(modes, photons);
  const StateVector target = looks_like_occupation(target_token)
                                 ? basis_state(basis, parse_occupation(target_token))
                                 : state_from_json(load_json(target_token, in));
  const Occupation input = parse_occupation(input_token);
  const SearchResult result = max_state_overlap(modes, photons, input, target, config);
  emit(search_result_to_json(result), output_path, out);
  if (!result.converged) {
    err << "warning: the overlap search hit its iteration cap before converging\n";
    return 1;
  }
  return 0;
}

int run_approx_unitary(const std::string& target_path, const OptimizerConfig& config,
                       const std::string& output_path, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  const LiftedUnitary target = lifted_from_json(load_json(target_path, in));
  const SearchResult result = closest_lifted_unitary(target, config);
  emit(search_result_to_json(result), output_path, out);
  if (!result.converged) {
    err << "warning: the distance search hit its iteration cap before converging\n";
    return 1;
  }
  return 0;
}

/// Two photons entering a balanced beam splitter leave together: the
/// coincidence amplitude cancels exactly. Prints every lifted entry next to
/// its closed form so the cancellation can be checked by eye.
int run_demo_hom(std::ostream& out) {
  const double r = 1.0 / std::numbers::sqrt2;
  Matrix scattering(2, 2);
  scattering << Complex(r, 0.0), Complex(r, 0.0), Complex(r, 0.0), Complex(-r, 0.0);

  out << "Hong-Ou-Mandel demo: two photons meet at a balanced beam splitter.\n\n";
  out << "Scattering matrix S:\n";
  for (int row = 0; row < 2; ++row) {
    out << "  [";
    for (int col = 0; col < 2; ++col) {
      out << (col == 0 ? " " : "   ") << format_double(scattering(row, col).real());
    }
    out << " ]\n";
  }

  const LiftedUnitary lifted = lift(scattering, 2);
  const char* labels[3] = {"|0,2>", "|1,1>", "|2,0>"};
  const char* closed_forms[3][3] = {
    {"S22^2", "sqrt(2)*S21*S22", "S21^2"},
    {"sqrt(2)*S12*S22", "S11*S22 + S12*S21", "sqrt(2)*S11*S21"},
    {"S12^2", "sqrt(2)*S11*S12", "S11^2"},
  };
  out << "\nTwo-photon lifted unitary U (basis |0,2>, |1,1>, |2,0>):\n";
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      char line[96];
      std::snprintf(line, sizeof(line), "  U[%s <- %s] = %-18s = %s\n", labels[row],
                    labels[col], closed_forms[row][col],
                    format_double(lifted.matrix(row, col).real()).c_str());
      out << line;
    }
  }
  out << "\nUnitarity defect of U: " << format_double(unitarity_defect(lifted.matrix)) << "\n";

  const StateVector output = evolve_via_operators(scattering, {1, 1});
  out << "\nEvolving the input |1,1>:\n";
  for (int k = 0; k < 3; ++k) {
    out << "  amplitude on " << labels[k] << ": "
      << format_double(output.amplitudes(k).real()) << "\n";
  }
  out << "Output probabilities: p(0,2) = " << format_double(std::norm(output.amplitudes(0)))
    << ", p(1,1) = " << format_double(std::norm(output.amplitudes(1)))
    << ", p(2,0) = " << format_double(std::norm(output.amplitudes(2))) << "\n";
  out << "The photons always leave through the same port.\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear-optics multiport simulator: lifts scattering matrices to "
               "multi-photon unitaries, decomposes circuits, and probes how far "
               "lifted unitaries can reach."};
  app.require_subcommand(1);
  std::string output_path;

  // lift
  auto* lift_cmd = app.add_subcommand("lift", "lift an m-mode scattering matrix to the n-photon unitary");
  std::string lift_matrix;
  int lift_photons = 0;
  bool lift_no_validate = false;
  lift_cmd->add_option("--matrix", lift_matrix, "JSON matrix file, or - for stdin")->required();
  lift_cmd->add_option("--n", lift_photons, "photon number")->required()->check(CLI::NonNegativeNumber);
  lift_cmd->add_flag("--no-validate", lift_no_validate, "skip the unitarity check on the input");
  lift_cmd->add_option("--output", output_path, "write the result here instead of stdout");

  // evolve
  auto* evolve_cmd = app.add_subcommand("evolve", "send a Fock state through a multiport");
  std::string evolve_matrix;
  std::string evolve_input;
  std::string evolve_state;
  bool evolve_distribution = false;
  evolve_cmd->add_option("--matrix", evolve_matrix, "JSON matrix file, or - for stdin")->required();
  auto* evolve_input_opt =
      evolve_cmd->add_option("--input", evolve_input, "input occupation, e.g. 1,1 or 20");
  auto* evolve_state_opt =
      evolve_cmd->add_option("--state", evolve_state, "JSON state file for a superposition input");
  evolve_input_opt->excludes(evolve_state_opt);
  evolve_cmd->add_flag("--distribution", evolve_distribution, "also print the output probabilities");
  evolve_cmd->add_option("--output", output_path, "write the result here instead of stdout");

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "factor a unitary into beam splitters and phase shifters");
  std::string decompose_matrix;
  decompose_cmd->add_option("--matrix", decompose_matrix, "JSON matrix file, or - for stdin")->required();
  decompose_cmd->add_option("--output", output_path, "write the result here instead of stdout");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "report which universality class (m, n) falls in");
  int classify_modes = 0;
  int classify_photons = 0;
  classify_cmd->add_option("--m", classify_modes, "number of modes")->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--n", classify_photons, "photon number")->required()->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--output", output_path, "write the result here instead of stdout");

  // overlap
  auto* overlap_cmd = app.add_subcommand("overlap", "maximize |<target|U|input>|^2 over scattering matrices");
  int overlap_modes = 0;
  int overlap_photons = 0;
  std::string overlap_input;
  std::string overlap_target;
  OptimizerFlags overlap_flags;
  overlap_cmd->add_option("--m", overlap_modes, "number of modes")->required()->check(CLI::PositiveNumber);
  overlap_cmd->add_option("--n", overlap_photons, "photon number")->required()->check(CLI::NonNegativeNumber);
  overlap_cmd->add_option("--input", overlap_input, "input occupation")->required();
  overlap_cmd->add_option("--target", overlap_target, "target occupation or JSON state file")->required();
  overlap_flags.attach(*overlap_cmd);
  overlap_cmd->add_option("--output", output_path, "write the result here instead of stdout");

  // approx-unitary
  auto* approx_cmd = app.add_subcommand("approx-unitary", "find the lifted unitary closest to a target");
  std::string approx_target;
  OptimizerFlags approx_flags;
  approx_cmd->add_option("--target", approx_target, "JSON lifted-unitary file, or - for stdin")->required();
  approx_flags.attach(*approx_cmd);
  approx_cmd->add_option("--output", output_path, "write the result here instead of stdout");

  // coherent
  auto* coherent_cmd = app.add_subcommand("coherent", "truncated Fock expansion of a coherent state");
  std::string coherent_alpha;
  int coherent_cutoff = 0;
  coherent_cmd->add_option("--alpha", coherent_alpha, "complex amplitude, e.g. 2 or 0,2")->required();
  coherent_cmd->add_option("--cutoff", coherent_cutoff, "largest photon number kept")
    ->required()
    ->check(CLI::NonNegativeNumber);
  coherent_cmd->add_option("--output", output_path, "write the result here instead of stdout");

  // demo-hom
  auto* demo_cmd = app.add_subcommand("demo-hom", "walk through the Hong-Ou-Mandel cancellation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& help) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& parse_error) {
    err << "error: " << parse_error.what() << "\n";
    return 2;
  }

  try {
    if (*lift_cmd) {
      return run_lift(lift_matrix, lift_photons, !lift_no_validate, output_path, in, out);
    }
    if (*evolve_cmd) {
      if (evolve_input.empty() && evolve_state.empty()) {
        throw ValidationError("evolve needs either --input or --state");
      }
      return run_evolve(evolve_matrix, evolve_input, evolve_state, evolve_distribution,
                        output_path, in, out);
    }
    if (*decompose_cmd) {
      return run_decompose(decompose_matrix, output_path, in, out);
    }
    if (*classify_cmd) {
      return run_classify(classify_modes, classify_photons, output_path, out);
    }
    if (*overlap_cmd) {
      return run_overlap(overlap_modes, overlap_photons, overlap_input, overlap_target,
                         overlap_flags.config, output_path, in, out, err);
    }
    if (*approx_cmd) {
      return run_approx_unitary(approx_target, approx_flags.config, output_path, in, out, err);
    }
    if (*coherent_cmd) {
      return run_coherent(coherent_alpha, coherent_cutoff, output_path, out);
    }
    if (*demo_cmd) {
      return run_demo_hom(out);
    }
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const ValidationError& failure) {
    err << "error: " << failure.what() << "\n";
    return 2;
  } catch (const CapacityError& failure) {
    err << "error: " << failure.what() << "\n";
    return 1;
  } catch (const Error& failure) {
    err << "error: " << failure.what() << "\n";
    return 1;
  } catch (const std::exception& failure) {
    err << "internal error: " << failure.what() << "\n";
    return 1;
  }
}

}  // namespace multiport::cli
