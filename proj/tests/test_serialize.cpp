#include <doctest.h>

#include <cmath>
#include <string>

#include "multiport/circuit.hpp"
#include "multiport/errors.hpp"
#include "multiport/lift.hpp"
#include "multiport/serialize.hpp"
#include "multiport/universality.hpp"

using namespace multiport;

TEST_CASE("json parsing reports the failing position") {
  try {
    parse_json("{\"rows\": 2\n \"cols\": 2}", "input.json");
    FAIL("expected a parse failure");
  } catch (const ValidationError& e) {
    const std::string message = e.what();  // expect "input.json:<line>:<col>: ..."
    CHECK(message.find("input.json:2:") != std::string::npos);
  }
  CHECK(parse_json("[1, 2]", "x")[1] == 2);
}

TEST_CASE("occupations round-trip") {
  const Occupation occ = {1, 0, 2};
  CHECK(occupation_from_json(occupation_to_json(occ)) == occ);
  CHECK_THROWS_AS(occupation_from_json(Json::parse("[1, -2]")), ValidationError);
  CHECK_THROWS_AS(occupation_from_json(Json::parse("{\"a\": 1}")), ValidationError);
  CHECK_THROWS_AS(occupation_from_json(Json::parse("[1, 2.5]")), ValidationError);
}

TEST_CASE("matrices round-trip with [re, im] entries") {
  const Matrix s = haar_random_unitary(3, 4);
  const Json j = matrix_to_json(s);
  CHECK(j["rows"] == 3);
  CHECK(j["cols"] == 3);
  CHECK(j["entries"].size() == 9);
  CHECK(j["entries"][1][0].get<double>() == s(0, 1).real());  // row-major
  CHECK(j["entries"][1][1].get<double>() == s(0, 1).imag());
  const Matrix back = matrix_from_json(j);
  CHECK((back - s).cwiseAbs().maxCoeff() == 0.0);

  SUBCASE("shape violations are named") {
    Json bad = j;
    bad["entries"] = Json::array({Json::array({1.0, 0.0})});
    CHECK_THROWS_AS(matrix_from_json(bad), ValidationError);
    bad = j;
    bad.erase("rows");
    CHECK_THROWS_AS(matrix_from_json(bad), ValidationError);
    bad = j;
    bad["entries"][0] = 3.0;  // not an [re, im] pair
    CHECK_THROWS_AS(matrix_from_json(bad), ValidationError);
  }
}

TEST_CASE("states round-trip") {
  const FockBasis basis(2, 2);
  StateVector state = basis_state(basis, {1, 1});
  state.amplitudes(0) = Complex(0.5, -0.5);
  state.amplitudes(1) = Complex(0.5, 0.0);
  state.amplitudes(2) = Complex(0.0, 0.5);
  const StateVector back = state_from_json(state_to_json(state));
  CHECK(back.basis == state.basis);
  CHECK((back.amplitudes - state.amplitudes).cwiseAbs().maxCoeff() == 0.0);

  SUBCASE("amplitude count must match the dimension") {
    Json j = state_to_json(state);
    j["amplitudes"].erase(2);
    CHECK_THROWS_AS(state_from_json(j), ValidationError);
  }
}

TEST_CASE("lifted unitaries round-trip and are checked on the way in") {
  const LiftedUnitary lifted = lift(haar_random_unitary(2, 9), 2);
  const Json j = lifted_to_json(lifted);
  const LiftedUnitary back = lifted_from_json(j);
  CHECK(back.basis == lifted.basis);
  CHECK((back.matrix - lifted.matrix).cwiseAbs().maxCoeff() == 0.0);

  SUBCASE("a scrambled basis listing is rejected") {
    Json bad = j;
    std::swap(bad["basis"][0], bad["basis"][1]);
    CHECK_THROWS_AS(lifted_from_json(bad), ValidationError);
  }

  SUBCASE("a non-unitary matrix is rejected") {
    Json bad = j;
    bad["matrix"]["entries"][0][0] = 5.0;
    CHECK_THROWS_AS(lifted_from_json(bad), ValidationError);
  }
}

TEST_CASE("circuits round-trip through kind-tagged elements") {
  Circuit circuit{3, {PhaseShifter{2, 0.5}, BeamSplitter{1, 3, 0.4, -0.2}}};
  const Json j = circuit_to_json(circuit);
  CHECK(j["elements"][0]["kind"] == "ps");
  CHECK(j["elements"][1]["kind"] == "bs");
  const Circuit back = circuit_from_json(j);
  CHECK(back.modes == 3);
  REQUIRE(back.elements.size() == 2);
  CHECK(std::get<PhaseShifter>(back.elements[0]).phi == 0.5);
  CHECK(std::get<BeamSplitter>(back.elements[1]).theta == 0.4);
  CHECK((compose(back) - compose(circuit)).cwiseAbs().maxCoeff() == 0.0);

  SUBCASE("unknown kinds and impossible modes are rejected") {
    Json bad = j;
    bad["elements"][0]["kind"] = "mirror";
    CHECK_THROWS_AS(circuit_from_json(bad), ValidationError);
    bad = j;
    bad["elements"][1]["modes"] = Json::array({1, 7});
    CHECK_THROWS_AS(circuit_from_json(bad), ValidationError);
  }
}

TEST_CASE("classifications and search results round-trip") {
  const UniversalityClass klass = classify(4, 2);
  const UniversalityClass back = classification_from_json(classification_to_json(klass));
  CHECK(back.tag == klass.tag);
  CHECK(back.modes == klass.modes);
  CHECK(back.photons == klass.photons);
  CHECK(back.dim == klass.dim);
  CHECK(back.condition_met == klass.condition_met);

  OptimizerConfig cfg;
  cfg.restarts = 1;
  cfg.max_iterations = 50;
  const FockBasis basis(2, 2);
  const SearchResult result =
      max_state_overlap(2, 2, {1, 1}, basis_state(basis, {2, 0}), cfg);
  const SearchResult round = search_result_from_json(search_result_to_json(result));
  CHECK(round.best_value == result.best_value);
  CHECK(round.converged == result.converged);
  CHECK(round.iterations_used == result.iterations_used);
  CHECK((round.best_s - result.best_s).cwiseAbs().maxCoeff() == 0.0);
  CHECK(round.best_circuit.elements.size() == result.best_circuit.elements.size());
}
