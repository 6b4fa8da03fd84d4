#include "multiport/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "multiport/errors.hpp"

namespace multiport {
namespace {

std::string short_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3g", value);
  return buffer;
}

}  // namespace

double unitarity_defect(const Matrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  Matrix gram = a.adjoint() * a;
  gram.diagonal().array() -= 1.0;
  return gram.cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& a, double tol) {
  return a.rows() == a.cols() && unitarity_defect(a) <= tol;
}

void require_unitary(const Matrix& a, double tol, const char* context) {
  if (a.rows() != a.cols()) {
    throw ValidationError(std::string(context) + ": matrix is " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          ", expected square");
  }
  const double defect = unitarity_defect(a);
  if (!(defect <= tol)) {
    throw ValidationError(std::string(context) + ": matrix is not unitary (defect " +
                          short_number(defect) + " > tolerance " + short_number(tol) + ")");
  }
}

void require_finite(const Matrix& a, const char* context) {
  if (!a.allFinite()) {
    throw ValidationError(std::string(context) + ": matrix contains NaN or infinite entries");
  }
}

}  // namespace multiport
