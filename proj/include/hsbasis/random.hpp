// Copyright 2026 The hsbasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HSBASIS_RANDOM_HPP
#define HSBASIS_RANDOM_HPP

#include <hsbasis/core.hpp>

#include <cstdint>
#include <random>

namespace hsbasis {

/// Seeded source of random test objects. All draws are complex Gaussian
/// (independent standard normal real and imaginary parts).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  Complex gaussian() {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {re, im};
  }

  ComplexMatrix matrix(std::size_t rows, std::size_t cols) {
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = gaussian();
    return m;
  }

  ComplexMatrix matrix(std::size_t n) { return matrix(n, n); }

  ComplexMatrix hermitian(std::size_t n) {
    ComplexMatrix m = matrix(n);
    return 0.5 * (m + m.adjoint());
  }

  /// Random density matrix: G G^dagger normalized to unit trace.
  ComplexMatrix density(std::size_t n) {
    ComplexMatrix g = matrix(n);
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
  }

  ComplexVector unit_vector(std::size_t n) {
    ComplexVector v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gaussian();
    return v / v.norm();
  }

  /// Haar-distributed unitary: QR of a complex Gaussian matrix with the
  /// phases of R's diagonal absorbed into Q.
  ComplexMatrix haar_unitary(std::size_t n) {
    const ComplexMatrix g = matrix(n);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      const Complex diag = r(j, j);
      const double mag = std::abs(diag);
      if (mag > 0.0) q.col(j) *= diag / mag;
    }
    return q;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace hsbasis

#endif  // HSBASIS_RANDOM_HPP
