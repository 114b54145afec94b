#include "knotqubit/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace knotqubit {

namespace {

constexpr double kPivMin = 1e-300;

// Deterministic, sign-varying start vector for inverse iteration.  A plain
// constant vector is even under reflection and would be exactly orthogonal
// to odd eigenvectors of symmetric problems.
double start_entry(std::size_t i) {
  const double v = std::sin(double(i + 1) * 12.9898) * 43758.5453;
  return v - std::floor(v) - 0.5;
}

double guarded(double piv) {
  if (std::abs(piv) < kPivMin) return piv < 0.0 ? -kPivMin : kPivMin;
  return piv;
}

// LU factorization of (T - shift I) with partial pivoting, LAPACK dgttrf
// style: the factored matrix has two superdiagonals.
struct ShiftedLU {
  std::vector<double> dl, d, du, du2;
  std::vector<bool> swap_next;

  ShiftedLU(std::span<const double> diag, std::span<const double> off, double shift) {
    const std::size_t n = diag.size();
    d.resize(n);
    dl.assign(n > 0 ? n - 1 : 0, 0.0);
    du.assign(n > 0 ? n - 1 : 0, 0.0);
    du2.assign(n > 1 ? n - 2 : 0, 0.0);
    swap_next.assign(n > 0 ? n - 1 : 0, false);
    for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) dl[i] = du[i] = off[i];

    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        const double fact = dl[i] / guarded(d[i]);
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
        if (i + 2 < n) du2[i] = 0.0;
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double tmp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = tmp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du2[i];
        }
        swap_next[i] = true;
      }
    }
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swap_next[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl[i] * b[i];
    }
    b[n - 1] /= guarded(d[n - 1]);
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / guarded(d[n - 2]);
    for (std::ptrdiff_t i = std::ptrdiff_t(n) - 3; i >= 0; --i) {
      b[std::size_t(i)] = (b[std::size_t(i)] - du[std::size_t(i)] * b[std::size_t(i) + 1] -
                           du2[std::size_t(i)] * b[std::size_t(i) + 2]) /
                          guarded(d[std::size_t(i)]);
    }
  }
};

double l2_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void tridiag_apply(std::span<const double> diag, std::span<const double> off,
                   const std::vector<double>& x, std::vector<double>& y) {
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double v = diag[i] * x[i];
    if (i > 0) v += off[i - 1] * x[i - 1];
    if (i + 1 < n) v += off[i] * x[i + 1];
    y[i] = v;
  }
}

}  // namespace

std::size_t eigenvalue_count_below(std::span<const double> diag,
                                   std::span<const double> off, double lambda) {
  const std::size_t n = diag.size();
  // Pivot floor scaled to the off-diagonal magnitude so e^2 / pivmin cannot
  // overflow; a pivot at or below it is counted as negative and clamped.
  double e2_max = 1.0;
  for (double e : off) e2_max = std::max(e2_max, e * e);
  const double pivmin = std::numeric_limits<double>::min() * e2_max;

  std::size_t count = 0;
  double q = diag[0] - lambda;
  if (q <= pivmin) {
    ++count;
    q = std::min(q, -pivmin);
  }
  for (std::size_t i = 1; i < n; ++i) {
    q = diag[i] - lambda - off[i - 1] * off[i - 1] / q;
    if (q <= pivmin) {
      ++count;
      q = std::min(q, -pivmin);
    }
  }
  return count;
}

TridiagEigen lowest_eigenpairs(std::span<const double> diag,
                               std::span<const double> off, std::size_t n_pairs) {
  const std::size_t n = diag.size();
  if (n < 3) throw std::invalid_argument("lowest_eigenpairs: matrix too small");
  if (off.size() != n - 1)
    throw std::invalid_argument("lowest_eigenpairs: off-diagonal size mismatch");
  n_pairs = std::min(n_pairs, n);

  // Gershgorin bounds.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double norm_bound = std::max({std::abs(lo), std::abs(hi), 1e-300});

  TridiagEigen out;
  out.values.reserve(n_pairs);
  for (std::size_t k = 0; k < n_pairs; ++k) {
    double a = lo, b = hi;
    while (b - a > 4.0 * std::numeric_limits<double>::epsilon() * norm_bound) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      (eigenvalue_count_below(diag, off, mid) >= k + 1 ? b : a) = mid;
    }
    out.values.push_back(0.5 * (a + b));
  }

  // Inverse iteration, orthogonalizing against everything already found so
  // that near-degenerate doublets come out as distinct vectors.
  for (std::size_t k = 0; k < n_pairs; ++k) {
    const ShiftedLU lu(diag, off, out.values[k]);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = start_entry(i);
    for (int iter = 0; iter < 5; ++iter) {
      lu.solve(x);
      for (const auto& prev : out.vectors) {
        double proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += prev[i] * x[i];
        for (std::size_t i = 0; i < n; ++i) x[i] -= proj * prev[i];
      }
      const double nrm = l2_norm(x);
      if (nrm == 0.0)
        throw std::runtime_error("lowest_eigenpairs: inverse iteration broke down");
      for (double& v : x) v /= nrm;
    }
    // Rayleigh-quotient refinement of the bisection eigenvalue.
    std::vector<double> tx(n);
    tridiag_apply(diag, off, x, tx);
    double rq = 0.0;
    for (std::size_t i = 0; i < n; ++i) rq += x[i] * tx[i];
    out.values[k] = rq;
    out.vectors.push_back(std::move(x));
  }

  // Refinement can reorder a near-degenerate pair; restore ascending order.
  for (std::size_t k = 1; k < n_pairs; ++k) {
    if (out.values[k] < out.values[k - 1]) {
      std::swap(out.values[k], out.values[k - 1]);
      std::swap(out.vectors[k], out.vectors[k - 1]);
    }
  }
  return out;
}

}  // namespace knotqubit
