#include "blowup/quartic.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace blowup {

namespace {

std::complex<double> horner(double a3, double a2, double a1, double a0,
                            std::complex<double> x) {
  return (((x + a3) * x + a2) * x + a1) * x + a0;
}

std::complex<double> horner_d(double a3, double a2, double a1,
                              std::complex<double> x) {
  return ((4.0 * x + 3.0 * a3) * x + 2.0 * a2) * x + a1;
}

} // namespace

std::array<std::complex<double>, 4> quartic_roots(double a3, double a2,
                                                  double a1, double a0) {
  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  companion(0, 3) = -a0;
  companion(1, 3) = -a1;
  companion(2, 3) = -a2;
  companion(3, 3) = -a3;
  companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;

  Eigen::EigenSolver<Eigen::Matrix4d> es(companion, false);
  std::array<std::complex<double>, 4> roots;
  for (int i = 0; i < 4; ++i)
    roots[i] = es.eigenvalues()[i];

  // one Newton polish step per root
  for (auto& r : roots) {
    const auto d = horner_d(a3, a2, a1, r);
    if (std::abs(d) > 0.0) {
      const auto step = horner(a3, a2, a1, a0, r) / d;
      if (std::isfinite(step.real()) && std::isfinite(step.imag()))
        r -= step;
    }
  }
  return roots;
}

RootSet classify_quartic(const std::array<std::complex<double>, 4>& roots,
                         double merge_tol) {
  RootSet out;
  std::vector<std::complex<double>> complexes;
  for (const auto& r : roots) {
    if (std::abs(r.imag()) < merge_tol * (1.0 + std::abs(r)))
      out.real_roots.push_back(r.real());
    else
      complexes.push_back(r);
  }
  std::sort(out.real_roots.begin(), out.real_roots.end());
  // keep one representative per conjugate pair
  std::sort(complexes.begin(), complexes.end(),
            [](const auto& a, const auto& b) { return a.real() < b.real(); });
  for (std::size_t i = 0; i < complexes.size(); ++i) {
    if (complexes[i].imag() > 0.0)
      out.complex_pairs.emplace_back(complexes[i].real(), complexes[i].imag());
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
root_clusters(const std::vector<double>& real_roots, double tol) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < real_roots.size(); ++i) {
    const double sep = std::abs(real_roots[i + 1] - real_roots[i]);
    if (sep < tol * (1.0 + std::abs(real_roots[i])))
      pairs.emplace_back(i, i + 1);
  }
  return pairs;
}

} // namespace blowup
