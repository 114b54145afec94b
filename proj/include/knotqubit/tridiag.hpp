#ifndef KNOTQUBIT_TRIDIAG_HPP
#define KNOTQUBIT_TRIDIAG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace knotqubit {

// Lowest eigenpairs of a real symmetric tridiagonal matrix, eigenvalues by
// Sturm-sequence bisection and eigenvectors by inverse iteration with
// orthogonalization (so near-degenerate tunneling doublets resolve cleanly).
// Eigenvalues are refined by the Rayleigh quotient of the converged vector.
struct TridiagEigen {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // unit l2 norm
};

TridiagEigen lowest_eigenpairs(std::span<const double> diag,
                               std::span<const double> offdiag,
                               std::size_t n_pairs);

// Number of eigenvalues strictly below lambda (Sturm count).
std::size_t eigenvalue_count_below(std::span<const double> diag,
                                   std::span<const double> offdiag,
                                   double lambda);

}  // namespace knotqubit

#endif  // KNOTQUBIT_TRIDIAG_HPP
