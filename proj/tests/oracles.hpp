// Copyright 2026 The Loschmidt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Brute-force references that share no code with the library: Kronecker
// products of 2x2 Pauli matrices and a Pade matrix exponential.
#ifndef LOSCHMIDT_TESTS_ORACLES_HPP
#define LOSCHMIDT_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <complex>

namespace oracle {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline Matrix pauli_x() { return (Matrix(2, 2) << 0, 1, 1, 0).finished(); }
inline Matrix pauli_z() { return (Matrix(2, 2) << 1, 0, 0, -1).finished(); }

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Site i is bit i of the basis index, so site 0 is the rightmost factor.
inline Matrix site_op(const Matrix& op, int site, int sites) {
  Matrix out = Matrix::Identity(1, 1);
  for (int s = sites - 1; s >= 0; --s) out = kron(out, s == site ? op : Matrix::Identity(2, 2));
  return out;
}

inline Matrix tfim(int sites, double g, double j = 1.0, bool periodic = true) {
  const int dim = 1 << sites;
  Matrix h = Matrix::Zero(dim, dim);
  const int bonds = periodic ? sites : sites - 1;
  for (int i = 0; i < bonds; ++i) h -= 0.5 * j * site_op(pauli_z(), i, sites) * site_op(pauli_z(), (i + 1) % sites, sites);
  for (int i = 0; i < sites; ++i) h -= 0.5 * g * site_op(pauli_x(), i, sites);
  return h;
}

inline Matrix global_flip(int sites) {
  Matrix f = Matrix::Identity(1, 1);
  for (int s = 0; s < sites; ++s) f = kron(f, pauli_x());
  return f;
}

// Ground state of h restricted to the +1 eigenspace of the global flip.
inline CVector even_ground(const Matrix& h, int sites) {
  const Matrix shifted = h + 50.0 * (Matrix::Identity(h.rows(), h.cols()) - global_flip(sites)) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(shifted);
  return es.eigenvectors().col(0).cast<std::complex<double>>();
}

inline CMatrix propagator(const Matrix& h, double t) {
  const CMatrix a = CMatrix(h.cast<std::complex<double>>()) * std::complex<double>(0.0, -t);
  return a.exp();
}

inline double echo(const Matrix& h, const CVector& psi, double t) {
  return std::norm(psi.dot(propagator(h, t) * psi));
}

}  // namespace oracle

#endif  // LOSCHMIDT_TESTS_ORACLES_HPP
