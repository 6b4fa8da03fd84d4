#include "multiport/permanent.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>
#include <vector>

#include "multiport/errors.hpp"

namespace multiport {

namespace {

// Sides at or above this use the chunked parallel path.
constexpr int kParallelThreshold = 22;
constexpr int kParallelChunks = 64;

// Ryser terms for subset indices g in [first, last): the subset of columns
// at step g is gray(g) = g ^ (g >> 1), and exactly one column enters or
// leaves between consecutive steps. Returns sum over the range of
// (-1)^popcount(gray) * prod_i rowsum_i(gray).
Complex ryser_range(const Matrix& a, std::uint64_t first, std::uint64_t last) {
  const auto side = static_cast<int>(a.rows());
  Vector row_sums = Vector::Zero(side);
  std::uint64_t gray = (first - 1) ^ ((first - 1) >> 1);
  for (int j = 0; j < side; ++j) {
    if (gray & (std::uint64_t{1} << j)) row_sums += a.col(j);
  }
  int parity = std::popcount(gray) & 1;
  Complex acc = 0.0;
  for (std::uint64_t g = first; g < last; ++g) {
    const int bit = std::countr_zero(g);
    const std::uint64_t mask = std::uint64_t{1} << bit;
    gray ^= mask;
    if (gray & mask) {
      row_sums += a.col(bit);
    } else {
      row_sums -= a.col(bit);
    }
    parity ^= 1;
    const Complex term = row_sums.prod();
    acc += parity ? -term : term;
  }
  return acc;
}

void require_counts(const Matrix& s, const Occupation& occ, const char* name) {
  if (static_cast<Eigen::Index>(occ.size()) != s.rows()) {
    throw ValidationError("repeat_submatrix: " + std::string(name) + " has length " +
                          std::to_string(occ.size()) + ", expected " + std::to_string(s.rows()));
  }
  for (int c : occ) {
    if (c < 0) {
      throw ValidationError("repeat_submatrix: " + std::string(name) +
                            " contains a negative count");
    }
  }
}

}  // namespace

namespace detail {

Complex permanent_serial(const Matrix& a) {
  const auto side = static_cast<int>(a.rows());
  if (side == 0) return Complex(1.0, 0.0);
  const std::uint64_t subsets = std::uint64_t{1} << side;
  const Complex total = ryser_range(a, 1, subsets);
  return (side & 1) ? -total : total;
}

Complex permanent_chunked(const Matrix& a, int chunks) {
  const auto side = static_cast<int>(a.rows());
  if (side == 0) return Complex(1.0, 0.0);
  const std::uint64_t subsets = std::uint64_t{1} << side;
  const auto n_chunks = static_cast<std::uint64_t>(chunks);

  // Chunk boundaries depend only on the chunk count, and partials are
  // reduced in chunk order, so the result is independent of scheduling.
  std::vector<Complex> partials(static_cast<std::size_t>(chunks));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
      const std::uint64_t first = 1 + (subsets - 1) * c / n_chunks;
      const std::uint64_t last = 1 + (subsets - 1) * (c + 1) / n_chunks;
      partials[static_cast<std::size_t>(c)] = ryser_range(a, first, last);
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto n_workers = static_cast<std::size_t>(std::min<std::uint64_t>(hw, n_chunks));
  std::vector<std::thread> pool;
  pool.reserve(n_workers > 0 ? n_workers - 1 : 0);
  for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Complex total = 0.0;
  for (const Complex& p : partials) total += p;
  return (side & 1) ? -total : total;
}

}  // namespace detail

Complex permanent(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw ValidationError("permanent: matrix is " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + ", expected square");
  }
  const auto side = static_cast<int>(a.rows());
  if (side > kMaxPermanentSide) {
    throw CapacityError("permanent: side " + std::to_string(side) + " exceeds the cap of " +
                        std::to_string(kMaxPermanentSide) + " (cost 2^side)");
  }
  if (side >= kParallelThreshold && std::thread::hardware_concurrency() > 1) {
    return detail::permanent_chunked(a, kParallelChunks);
  }
  return detail::permanent_serial(a);
}

Matrix repeat_submatrix(const Matrix& s, const Occupation& out_occ, const Occupation& in_occ) {
  if (s.rows() != s.cols()) {
    throw ValidationError("repeat_submatrix: matrix is " + std::to_string(s.rows()) + "x" +
                          std::to_string(s.cols()) + ", expected square");
  }
  require_counts(s, out_occ, "out_occ");
  require_counts(s, in_occ, "in_occ");
  const std::int64_t total_out = total_photons(out_occ);
  const std::int64_t total_in = total_photons(in_occ);
  if (total_out != total_in) {
    throw ValidationError("repeat_submatrix: occupation totals differ (" +
                          std::to_string(total_out) + " out vs " + std::to_string(total_in) +
                          " in)");
  }

  Matrix result(total_out, total_in);
  Eigen::Index r = 0;
  for (std::size_t i = 0; i < out_occ.size(); ++i) {
    for (int rep = 0; rep < out_occ[i]; ++rep, ++r) {
      Eigen::Index c = 0;
      for (std::size_t j = 0; j < in_occ.size(); ++j) {
        for (int rep_c = 0; rep_c < in_occ[j]; ++rep_c, ++c) {
          result(r, c) = s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
      }
    }
  }
  return result;
}

}  // namespace multiport
