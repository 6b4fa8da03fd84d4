#ifndef MULTIPORT_PERMANENT_HPP
#define MULTIPORT_PERMANENT_HPP

#include <cstdint>

#include "multiport/fock.hpp"
#include "multiport/matrix.hpp"

namespace multiport {

/// Hard cap on the side of a permanent argument; the cost is O(2^k * k).
inline constexpr int kMaxPermanentSide = 30;

/// Permanent of a square matrix via Ryser's inclusion-exclusion formula with
/// Gray-code subset updates, O(2^k * k). The permanent of the empty (0x0)
/// matrix is 1. Large sides are split into fixed chunks evaluated in
/// parallel; chunk partials are reduced in index order, so the result is
/// reproducible (it may differ from the strictly sequential sum by rounding
/// within ~1e-12 relative).
Complex permanent(const Matrix& a);

/// The n x n matrix whose rows repeat row i of `s` out_occ[i] times and
/// whose columns repeat column j of `s` in_occ[j] times, both in ascending
/// index order.
Matrix repeat_submatrix(const Matrix& s, const Occupation& out_occ, const Occupation& in_occ);

namespace detail {

/// Strictly sequential Gray-code Ryser sum.
Complex permanent_serial(const Matrix& a);

/// Chunked evaluation with an explicit chunk count (testing seam).
Complex permanent_chunked(const Matrix& a, int chunks);

}  // namespace detail

}  // namespace multiport

#endif
