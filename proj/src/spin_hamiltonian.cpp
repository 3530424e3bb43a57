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
#include "loschmidt/spin_hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "loschmidt/error.hpp"

namespace loschmidt {
namespace {

constexpr const char* kModule = "spin_hamiltonian";

int sites_of_dimension(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw Error(kModule, "dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(dim);
}

void check_sites(int sites, int minimum) {
  if (sites < minimum || sites > kMaxSites) {
    throw Error(kModule, "site count " + std::to_string(sites) + " outside [" +
                             std::to_string(minimum) + ", " + std::to_string(kMaxSites) + "]");
  }
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(kModule, "sign must be +1 or -1");
}

// (-1)^popcount(bits)
inline double parity_sign(std::uint64_t bits) { return (std::popcount(bits) & 1) ? -1.0 : 1.0; }

}  // namespace

void ChainSpec::validate() const {
  // A lone site is allowed only without bonds (the field-only Hamiltonian).
  check_sites(sites, interaction == 0.0 ? 1 : 2);
  if (!std::isfinite(field)) throw Error(kModule, "field g must be finite");
  if (!std::isfinite(interaction)) throw Error(kModule, "interaction J must be finite");
}

PauliTerm PauliTerm::parse(std::string pauli, double coeff) {
  if (pauli.empty() || pauli.size() > kMaxSites) {
    throw Error(kModule, "Pauli string length must be in [1, " + std::to_string(kMaxSites) + "]");
  }
  PauliTerm term{std::move(pauli), coeff, 0, 0};
  for (std::size_t i = 0; i < term.pauli.size(); ++i) {
    switch (term.pauli[i]) {
      case 'I':
        break;
      case 'X':
        term.x_mask |= std::uint64_t{1} << i;
        break;
      case 'Z':
        term.z_mask |= std::uint64_t{1} << i;
        break;
      default:
        throw Error(kModule, "Pauli string '" + term.pauli + "' uses a letter outside {I, X, Z}");
    }
  }
  if (!std::isfinite(coeff)) throw Error(kModule, "non-finite Pauli coefficient");
  return term;
}

PauliSum::PauliSum(int sites, std::vector<PauliTerm> terms) : sites_(sites), terms_(std::move(terms)) {
  check_sites(sites, 1);
  for (const auto& t : terms_) {
    if (static_cast<int>(t.pauli.size()) != sites_) {
      throw Error(kModule, "Pauli string '" + t.pauli + "' does not have length " + std::to_string(sites_));
    }
  }
}

void PauliSum::apply(std::span<const Complex> in, std::span<Complex> out) const {
  const std::size_t dim = dimension();
  if (in.size() != dim || out.size() != dim) throw Error(kModule, "matvec dimension mismatch");
  // Gather form: out[b] = sum_t c_t <b|P_t|b ^ x_t> in[b ^ x_t]; rows are independent.
  const auto n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t row = 0; row < n; ++row) {
    const auto b = static_cast<std::uint64_t>(row);
    Complex acc{0.0, 0.0};
    for (const auto& t : terms_) {
      const std::uint64_t col = b ^ t.x_mask;
      // Z acts after X on the ket |col>, so the sign is read from |b>.
      acc += t.coeff * parity_sign(b & t.z_mask) * in[col];
    }
    out[b] = acc;
  }
}

RealMatrix PauliSum::to_dense(int site_cap) const {
  if (sites_ > site_cap) {
    throw Error(kModule, "dense materialization of " + std::to_string(sites_) +
                             " sites exceeds the cap of " + std::to_string(site_cap));
  }
  const auto dim = static_cast<Eigen::Index>(dimension());
  RealMatrix m = RealMatrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto c = static_cast<std::uint64_t>(col);
    for (const auto& t : terms_) {
      const std::uint64_t row = c ^ t.x_mask;
      m(static_cast<Eigen::Index>(row), col) += t.coeff * parity_sign(row & t.z_mask);
    }
  }
  return m;
}

nlohmann::json PauliSum::to_json() const {
  auto out = nlohmann::json::array();
  for (const auto& t : terms_) out.push_back({{"pauli", t.pauli}, {"coeff", t.coeff}});
  return out;
}

Hamiltonian Hamiltonian::from_terms(PauliSum terms) {
  Hamiltonian h;
  h.terms_ = std::move(terms);
  return h;
}

Hamiltonian Hamiltonian::from_dense(RealMatrix matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw Error(kModule, "dense Hamiltonian must be a non-empty square matrix");
  }
  const double defect = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (defect > 1e-12) throw Error(kModule, "dense Hamiltonian is not Hermitian (defect " + std::to_string(defect) + ")");
  Hamiltonian h;
  h.dense_ = std::move(matrix);
  return h;
}

std::size_t Hamiltonian::dimension() const {
  return terms_ ? terms_->dimension() : static_cast<std::size_t>(dense_->rows());
}

const PauliSum& Hamiltonian::terms() const {
  if (!terms_) throw Error(kModule, "Hamiltonian has no Pauli term representation");
  return *terms_;
}

RealMatrix Hamiltonian::dense(int site_cap) const {
  if (dense_) return *dense_;
  return terms_->to_dense(site_cap);
}

ComplexVector Hamiltonian::apply(const ComplexVector& v) const {
  if (static_cast<std::size_t>(v.size()) != dimension()) throw Error(kModule, "matvec dimension mismatch");
  if (dense_) return dense_->cast<Complex>() * v;
  ComplexVector out(v.size());
  terms_->apply(std::span<const Complex>(v.data(), v.size()), std::span<Complex>(out.data(), out.size()));
  return out;
}

double Hamiltonian::hermiticity_defect() const {
  if (terms_) return 0.0;  // real coefficients on {I, X, Z} strings
  return (*dense_ - dense_->transpose()).cwiseAbs().maxCoeff();
}

Hamiltonian build_tfim(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.sites;
  const int bonds = n == 1 ? 0 : spec.boundary == Boundary::periodic ? n : n - 1;
  std::vector<PauliTerm> terms;
  terms.reserve(static_cast<std::size_t>(bonds + n));
  for (int i = 0; i < bonds; ++i) {
    std::string s(static_cast<std::size_t>(n), 'I');
    s[static_cast<std::size_t>(i)] = 'Z';
    s[static_cast<std::size_t>((i + 1) % n)] = 'Z';
    terms.push_back(PauliTerm::parse(std::move(s), -0.5 * spec.interaction));
  }
  for (int i = 0; i < n; ++i) {
    std::string s(static_cast<std::size_t>(n), 'I');
    s[static_cast<std::size_t>(i)] = 'X';
    terms.push_back(PauliTerm::parse(std::move(s), -0.5 * spec.field));
  }
  return Hamiltonian::from_terms(PauliSum(n, std::move(terms)));
}

StateVector product_state_z(int sites, int sign) {
  check_sites(sites, 1);
  check_sign(sign);
  const auto dim = Eigen::Index{1} << sites;
  StateVector s{ComplexVector::Zero(dim), Basis::sigma_z_product};
  s.amplitudes[sign > 0 ? 0 : dim - 1] = 1.0;
  return s;
}

StateVector product_state_x(int sites, int sign) {
  check_sites(sites, 1);
  check_sign(sign);
  const auto dim = Eigen::Index{1} << sites;
  const double scale = std::pow(2.0, -0.5 * sites);
  StateVector s{ComplexVector(dim), Basis::sigma_z_product};
  for (Eigen::Index b = 0; b < dim; ++b) {
    const double phase = sign > 0 ? 1.0 : parity_sign(static_cast<std::uint64_t>(b));
    s.amplitudes[b] = scale * phase;
  }
  return s;
}

StateVector spin_flip(const StateVector& state) {
  const int sites = sites_of_dimension(state.dimension());
  const std::uint64_t mask = (std::uint64_t{1} << sites) - 1;
  StateVector out{ComplexVector(state.amplitudes.size()), state.basis};
  if (state.basis == Basis::sigma_x_product) {
    // Diagonal in the x basis: eigenvalue (-1)^(number of |-> sites).
    for (Eigen::Index b = 0; b < state.amplitudes.size(); ++b) {
      out.amplitudes[b] = parity_sign(static_cast<std::uint64_t>(b)) * state.amplitudes[b];
    }
    return out;
  }
  for (Eigen::Index b = 0; b < state.amplitudes.size(); ++b) {
    out.amplitudes[static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ mask)] = state.amplitudes[b];
  }
  return out;
}

StateVector to_sigma_x_basis(const StateVector& state) {
  if (state.basis != Basis::sigma_z_product) throw Error(kModule, "expected a sigma^z-basis state");
  sites_of_dimension(state.dimension());
  StateVector out{state.amplitudes, Basis::sigma_x_product};
  auto& a = out.amplitudes;
  const Eigen::Index n = a.size();
  const double r = 1.0 / std::sqrt(2.0);
  for (Eigen::Index half = 1; half < n; half <<= 1) {
    for (Eigen::Index block = 0; block < n; block += 2 * half) {
      for (Eigen::Index j = block; j < block + half; ++j) {
        const Complex u = a[j];
        const Complex v = a[j + half];
        a[j] = r * (u + v);
        a[j + half] = r * (u - v);
      }
    }
  }
  return out;
}

RealMatrix sector_hamiltonian(const Hamiltonian& h, Parity parity) {
  const PauliSum& terms = h.terms();
  const int sites = terms.sites();
  const std::uint64_t mask = (std::uint64_t{1} << sites) - 1;
  const std::uint64_t top = std::uint64_t{1} << (sites - 1);
  const double p = static_cast<double>(parity);
  for (const auto& t : terms.terms()) {
    if (std::popcount(t.z_mask) & 1) throw Error(kModule, "Hamiltonian does not commute with the global spin flip");
  }
  const auto dim = static_cast<Eigen::Index>(top);
  RealMatrix m = RealMatrix::Zero(dim, dim);
  // H(|a> + p|~a>) = sum_c h_c (|c> + p|~c>); a non-representative c folds
  // onto its flip with an extra factor p.
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto a = static_cast<std::uint64_t>(col);
    for (const auto& t : terms.terms()) {
      const std::uint64_t c = a ^ t.x_mask;
      const double amp = t.coeff * parity_sign(c & t.z_mask);
      if (c & top) {
        m(static_cast<Eigen::Index>(c ^ mask), col) += p * amp;
      } else {
        m(static_cast<Eigen::Index>(c), col) += amp;
      }
    }
  }
  return m;
}

ComplexVector embed_sector(const ComplexVector& sector_vector, int sites, Parity parity) {
  check_sites(sites, 1);
  const auto half = Eigen::Index{1} << (sites - 1);
  if (sector_vector.size() != half) throw Error(kModule, "sector vector has the wrong dimension");
  const Eigen::Index mask = (Eigen::Index{1} << sites) - 1;
  const double r = 1.0 / std::sqrt(2.0);
  const double p = static_cast<double>(parity);
  ComplexVector full(2 * half);
  for (Eigen::Index a = 0; a < half; ++a) {
    full[a] = r * sector_vector[a];
    full[a ^ mask] = p * r * sector_vector[a];
  }
  return full;
}

ComplexVector restrict_to_sector(const ComplexVector& full_vector, int sites, Parity parity) {
  check_sites(sites, 1);
  const auto half = Eigen::Index{1} << (sites - 1);
  if (full_vector.size() != 2 * half) throw Error(kModule, "full vector has the wrong dimension");
  const Eigen::Index mask = (Eigen::Index{1} << sites) - 1;
  const double r = 1.0 / std::sqrt(2.0);
  const double p = static_cast<double>(parity);
  ComplexVector out(half);
  for (Eigen::Index a = 0; a < half; ++a) out[a] = r * (full_vector[a] + p * full_vector[a ^ mask]);
  return out;
}

}  // namespace loschmidt
