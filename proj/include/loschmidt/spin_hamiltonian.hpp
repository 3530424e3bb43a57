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
#ifndef LOSCHMIDT_SPIN_HAMILTONIAN_HPP
#define LOSCHMIDT_SPIN_HAMILTONIAN_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace loschmidt {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Largest chain for which a dense 2^L x 2^L matrix may be materialized.
inline constexpr int kDenseSiteCap = 14;
/// Largest chain the bit-string representation addresses at all.
inline constexpr int kMaxSites = 30;

enum class Boundary { periodic, open };

/// Basis in which StateVector amplitudes are expressed.
///
/// Spin chains use the computational sigma^z product basis: site i (0-based)
/// maps to bit i and bit value 0 is the +1 eigenstate of sigma^z_i.
/// Single-mode models (ladders, Bose site, scar tower) use `fock`.
enum class Basis { sigma_z_product, sigma_x_product, fock };

/// Z2 sector of the global spin flip prod_i sigma^x_i.
enum class Parity { even = 1, odd = -1 };

struct ChainSpec {
  int sites = 8;
  Boundary boundary = Boundary::periodic;
  double field = 1.0;        // g in H = -(J/2) sum Z Z - (g/2) sum X
  double interaction = 1.0;  // J; 0 gives the field-only Hamiltonian

  void validate() const;
};

/// A real-coefficient Pauli string over the alphabet {I, X, Z}.
struct PauliTerm {
  std::string pauli;
  double coeff = 0.0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;

  static PauliTerm parse(std::string pauli, double coeff);
};

/// Sum of Pauli strings acting on `sites` spins. Matrix elements are
/// generated on the fly from the X/Z bit masks.
class PauliSum {
 public:
  PauliSum(int sites, std::vector<PauliTerm> terms);

  int sites() const { return sites_; }
  std::size_t dimension() const { return std::size_t{1} << sites_; }
  std::span<const PauliTerm> terms() const { return terms_; }

  /// out = H in. Basis indices are split across worker threads.
  void apply(std::span<const Complex> in, std::span<Complex> out) const;

  RealMatrix to_dense(int site_cap = kDenseSiteCap) const;
  nlohmann::json to_json() const;

 private:
  int sites_;
  std::vector<PauliTerm> terms_;
};

/// Hermitian (real symmetric) operator stored either as a Pauli term list or
/// as a dense matrix. Immutable after construction.
class Hamiltonian {
 public:
  static Hamiltonian from_terms(PauliSum terms);
  /// Throws unless the matrix is square and symmetric to 1e-12.
  static Hamiltonian from_dense(RealMatrix matrix);

  std::size_t dimension() const;
  bool has_terms() const { return terms_.has_value(); }
  const PauliSum& terms() const;

  /// Dense copy; term lists larger than `site_cap` sites are rejected.
  RealMatrix dense(int site_cap = kDenseSiteCap) const;
  ComplexVector apply(const ComplexVector& v) const;

  /// max |H - H^T| of the stored representation (identically 0 for terms).
  double hermiticity_defect() const;

 private:
  std::optional<PauliSum> terms_;
  std::optional<RealMatrix> dense_;
};

struct StateVector {
  ComplexVector amplitudes;
  Basis basis = Basis::sigma_z_product;

  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
};

/// H = -(J/2) sum_i Z_i Z_{i+1} - (g/2) sum_i X_i.
///
/// Periodic chains carry L bonds (the last one wraps to site 0), open chains
/// L-1. For L = 2 periodic the bond (0,1) therefore appears twice. Terms are
/// ordered bonds ascending, then fields ascending.
Hamiltonian build_tfim(const ChainSpec& spec);

/// prod_i |sign>^z_i as a single computational basis vector.
StateVector product_state_z(int sites, int sign);
/// prod_i (|+>^z + sign |->^z)/sqrt(2), expressed in the sigma^z basis.
StateVector product_state_x(int sites, int sign);

/// Global flip prod_i sigma^x_i applied to a sigma^z-basis state.
StateVector spin_flip(const StateVector& state);
/// Walsh-Hadamard change of basis from sigma^z to sigma^x products.
StateVector to_sigma_x_basis(const StateVector& state);

/// Matrix of H restricted to a spin-flip parity sector. Sector basis vector a
/// (0 <= a < 2^(L-1)) is (|a> + p |a ^ mask>)/sqrt(2), p = +-1. H must commute
/// with the global flip; this holds for every build_tfim output.
RealMatrix sector_hamiltonian(const Hamiltonian& h, Parity parity);
/// Full-space vector of a sector vector.
ComplexVector embed_sector(const ComplexVector& sector_vector, int sites, Parity parity);
/// Sector components of a full-space vector (projection).
ComplexVector restrict_to_sector(const ComplexVector& full_vector, int sites, Parity parity);

}  // namespace loschmidt

#endif  // LOSCHMIDT_SPIN_HAMILTONIAN_HPP
