#include "multiport/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "multiport/errors.hpp"

namespace multiport {

namespace {

[[noreturn]] void fail(const std::string& message) { throw ValidationError(message); }

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(std::string(what) + ": expected a [re, im] pair");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    fail(std::string(what) + ": non-finite component");
  }
  return {re, im};
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) fail(std::string(what) + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer()) {
    fail(std::string(what) + ": field \"" + key + "\" must be an integer");
  }
  return v.get<int>();
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source_name) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports a byte offset; convert it to line:column.
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(source_name + ":" + std::to_string(line) + ":" + std::to_string(column) +
         ": " + e.what());
  }
}

Json occupation_to_json(const Occupation& occ) {
  Json j = Json::array();
  for (int c : occ) j.push_back(c);
  return j;
}

Occupation occupation_from_json(const Json& j) {
  if (!j.is_array()) fail("occupation: expected a flat array of counts");
  Occupation occ;
  occ.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number_integer()) fail("occupation: counts must be integers");
    const int c = v.get<int>();
    if (c < 0) fail("occupation: counts must be non-negative");
    occ.push_back(c);
  }
  return occ;
}

Json matrix_to_json(const Matrix& matrix) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      entries.push_back(complex_to_json(matrix(i, j)));
    }
  }
  return Json{{"rows", matrix.rows()}, {"cols", matrix.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
  const int rows = int_field(j, "rows", "matrix");
  const int cols = int_field(j, "cols", "matrix");
  if (rows < 0 || cols < 0) fail("matrix: rows and cols must be non-negative");
  const Json& entries = field(j, "entries", "matrix");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    fail("matrix: expected " + std::to_string(rows * cols) + " entries");
  }
  Matrix matrix(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      matrix(i, c) = complex_from_json(entries[k++], "matrix entry");
    }
  }
  return matrix;
}

Json state_to_json(const StateVector& state) {
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < state.amplitudes.size(); ++k) {
    amps.push_back(complex_to_json(state.amplitudes(k)));
  }
  return Json{{"m", state.basis.modes()}, {"n", state.basis.photons()},
              {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const Json& j) {
  const int modes = int_field(j, "m", "state");
  const int photons = int_field(j, "n", "state");
  FockBasis basis(modes, photons);
  const Json& amps = field(j, "amplitudes", "state");
  if (!amps.is_array() || amps.size() != static_cast<std::size_t>(basis.size())) {
    fail("state: expected " + std::to_string(basis.size()) + " amplitudes for " +
         std::to_string(photons) + " photons in " + std::to_string(modes) + " modes");
  }
  Vector amplitudes(basis.size());
  for (std::int64_t k = 0; k < basis.size(); ++k) {
    amplitudes(k) = complex_from_json(amps[static_cast<std::size_t>(k)], "state amplitude");
  }
  return StateVector{std::move(basis), std::move(amplitudes)};
}

Json lifted_to_json(const LiftedUnitary& lifted) {
  Json basis = Json::array();
  for (const Occupation& occ : lifted.basis.states()) {
    basis.push_back(occupation_to_json(occ));
  }
  return Json{{"m", lifted.basis.modes()},
              {"n", lifted.basis.photons()},
              {"basis", std::move(basis)},
              {"matrix", matrix_to_json(lifted.matrix)}};
}

LiftedUnitary lifted_from_json(const Json& j) {
  const int modes = int_field(j, "m", "lifted unitary");
  const int photons = int_field(j, "n", "lifted unitary");
  FockBasis basis(modes, photons);
  const Json& listed = field(j, "basis", "lifted unitary");
  if (!listed.is_array() || listed.size() != static_cast<std::size_t>(basis.size())) {
    fail("lifted unitary: basis must list all " + std::to_string(basis.size()) + " states");
  }
  for (std::int64_t k = 0; k < basis.size(); ++k) {
    if (occupation_from_json(listed[static_cast<std::size_t>(k)]) != basis.state(k)) {
      fail("lifted unitary: basis entry " + std::to_string(k) +
           " is not in canonical order (first mode ascending)");
    }
  }
  Matrix matrix = matrix_from_json(field(j, "matrix", "lifted unitary"));
  if (matrix.rows() != basis.size() || matrix.cols() != basis.size()) {
    fail("lifted unitary: matrix side does not match the basis dimension " +
         std::to_string(basis.size()));
  }
  const double tol = 1e-9 * static_cast<double>(basis.size());
  if (unitarity_defect(matrix) > tol) {
    fail("lifted unitary: matrix violates the unitarity invariant (defect above " +
         std::to_string(tol) + ")");
  }
  return LiftedUnitary{std::move(basis), std::move(matrix)};
}

Json circuit_to_json(const Circuit& circuit) {
  Json elements = Json::array();
  for (const CircuitElement& element : circuit.elements) {
    if (const auto* ps = std::get_if<PhaseShifter>(&element)) {
      elements.push_back(Json{{"kind", "ps"}, {"modes", {ps->mode}}, {"phi", ps->phi}});
    } else {
      const auto& bs = std::get<BeamSplitter>(element);
      elements.push_back(Json{{"kind", "bs"},
                              {"modes", {bs.mode_a, bs.mode_b}},
                              {"theta", bs.theta},
                              {"phi", bs.phi}});
    }
  }
  return Json{{"m", circuit.modes}, {"elements", std::move(elements)}};
}

Circuit circuit_from_json(const Json& j) {
  Circuit circuit;
  circuit.modes = int_field(j, "m", "circuit");
  if (circuit.modes < 1) fail("circuit: mode count must be >= 1");
  const Json& elements = field(j, "elements", "circuit");
  if (!elements.is_array()) fail("circuit: \"elements\" must be an array");
  for (const Json& e : elements) {
    const Json& kind = field(e, "kind", "circuit element");
    const Json& modes = field(e, "modes", "circuit element");
    if (!modes.is_array()) fail("circuit element: \"modes\" must be an array");
    const Json& phi = field(e, "phi", "circuit element");
    if (!phi.is_number()) fail("circuit element: \"phi\" must be a number");
    if (kind == "ps") {
      if (modes.size() != 1 || !modes[0].is_number_integer()) {
        fail("circuit element: a phase shifter takes one mode index");
      }
      circuit.elements.push_back(PhaseShifter{modes[0].get<int>(), phi.get<double>()});
    } else if (kind == "bs") {
      if (modes.size() != 2 || !modes[0].is_number_integer() || !modes[1].is_number_integer()) {
        fail("circuit element: a beam splitter takes two mode indices");
      }
      const Json& theta = field(e, "theta", "circuit element");
      if (!theta.is_number()) fail("circuit element: \"theta\" must be a number");
      circuit.elements.push_back(BeamSplitter{modes[0].get<int>(), modes[1].get<int>(),
                                              theta.get<double>(), phi.get<double>()});
    } else {
      fail("circuit element: kind must be \"ps\" or \"bs\"");
    }
  }
  // Composing validates the element indices against the mode count.
  compose(circuit);
  return circuit;
}

Json classification_to_json(const UniversalityClass& klass) {
  return Json{{"m", klass.modes},
              {"n", klass.photons},
              {"M", klass.dim},
              {"class", to_string(klass.tag)},
              {"condition_met", klass.condition_met}};
}

UniversalityClass classification_from_json(const Json& j) {
  UniversalityClass klass{};
  klass.modes = int_field(j, "m", "classification");
  klass.photons = int_field(j, "n", "classification");
  const Json& dim = field(j, "M", "classification");
  if (!dim.is_number_integer()) fail("classification: \"M\" must be an integer");
  klass.dim = dim.get<std::int64_t>();
  const Json& tag = field(j, "class", "classification");
  if (tag == "Vacuum") {
    klass.tag = UniversalityTag::Vacuum;
  } else if (tag == "SingleMode") {
    klass.tag = UniversalityTag::SingleMode;
  } else if (tag == "SinglePhoton") {
    klass.tag = UniversalityTag::SinglePhoton;
  } else if (tag == "NotUniversal") {
    klass.tag = UniversalityTag::NotUniversal;
  } else {
    fail("classification: unknown class tag");
  }
  const Json& met = field(j, "condition_met", "classification");
  if (!met.is_boolean()) fail("classification: \"condition_met\" must be a boolean");
  klass.condition_met = met.get<bool>();
  return klass;
}

Json search_result_to_json(const SearchResult& result) {
  return Json{{"value", result.best_value},
              {"converged", result.converged},
              {"iterations", result.iterations_used},
              {"matrix", matrix_to_json(result.best_s)},
              {"circuit", circuit_to_json(result.best_circuit)}};
}

SearchResult search_result_from_json(const Json& j) {
  SearchResult result;
  const Json& value = field(j, "value", "search result");
  if (!value.is_number()) fail("search result: \"value\" must be a number");
  result.best_value = value.get<double>();
  const Json& converged = field(j, "converged", "search result");
  if (!converged.is_boolean()) fail("search result: \"converged\" must be a boolean");
  result.converged = converged.get<bool>();
  result.iterations_used = int_field(j, "iterations", "search result");
  result.best_s = matrix_from_json(field(j, "matrix", "search result"));
  result.best_circuit = circuit_from_json(field(j, "circuit", "search result"));
  return result;
}

}  // namespace multiport
