#pragma once

#include <array>
#include <complex>
#include <vector>

namespace blowup {

/// Root set of a real quartic. Complex roots are stored once per
/// conjugate pair with positive imaginary part.
struct RootSet {
  std::vector<double> real_roots;                       // ascending
  std::vector<std::pair<double, double>> complex_pairs; // (re, im>0)

  std::size_t multiplicity() const {
    return real_roots.size() + 2 * complex_pairs.size();
  }
};

/// All roots of x^4 + a3 x^3 + a2 x^2 + a1 x + a0, computed from the
/// eigenvalues of the companion matrix and polished with one Newton step.
/// Real roots closer than merge_tol*(1+|root|) to the real axis are
/// snapped; nearly coincident real roots are kept as distinct entries
/// (callers that need double-root detection use root_cluster below).
std::array<std::complex<double>, 4> quartic_roots(double a3, double a2,
                                                  double a1, double a0);

/// Classify the four roots into a RootSet. `merge_tol` controls the
/// imaginary-part snap threshold: |Im z| < merge_tol*(1+|z|) means real.
RootSet classify_quartic(const std::array<std::complex<double>, 4>& roots,
                         double merge_tol = 1e-7);

/// Indices of real roots that form a cluster with separation below
/// tol*(1+|root|); used to tag degenerate (double) roots.
std::vector<std::pair<std::size_t, std::size_t>>
root_clusters(const std::vector<double>& real_roots, double tol = 1e-7);

} // namespace blowup
