#ifndef MULTIPORT_MATRIX_HPP
#define MULTIPORT_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

namespace multiport {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Max-norm of (A^dag * A - I). Zero for an exactly unitary matrix.
double unitarity_defect(const Matrix& a);

bool is_unitary(const Matrix& a, double tol);

/// Throws ValidationError unless `a` is square and unitary within `tol`.
void require_unitary(const Matrix& a, double tol, const char* context);

/// Throws ValidationError if any entry is NaN or infinite.
void require_finite(const Matrix& a, const char* context);

}  // namespace multiport

#endif
