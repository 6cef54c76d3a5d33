#pragma once

// Hamiltonians of permutation dynamics, U = exp(-i H T).
//
// Energies use the branch E = theta / T with theta in [0, 2pi), i.e. the
// eigenphase index m runs over 0..L-1 on every cycle of length L.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ontic/dense.hpp"
#include "ontic/permops.hpp"

namespace ontic {

struct Hamiltonian {
  DenseOperator matrix;
  double timescale = 1.0;

  std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }
  /// exp(-i H T).
  DenseOperator evolution() const;
};

struct SpectralData {
  std::vector<double> eigenvalues;  // column order of `eigenvectors`
  DenseOperator eigenvectors;
  std::vector<std::pair<double, std::size_t>> multiplicities;  // ascending energy

  DenseOperator reconstruct() const;
};

/// Groups nearly equal values (|a-b| <= tol) into (value, count), ascending.
std::vector<std::pair<double, std::size_t>> group_multiplicities(std::vector<double> values,
                                                                 double tol = 1e-9);

/// { (sum phases + 2 pi m) / (n T) : m = 0..n-1 } with n = phases.size().
std::vector<double> cogwheel_spectrum(std::span<const double> phases, double timescale = 1.0);

struct PermutationSpectrum {
  Hamiltonian hamiltonian;
  SpectralData spectrum;
  CycleData cycles;
};

/// Exact per-cycle discrete-Fourier diagonalisation of p.
PermutationSpectrum hamiltonian_from_permutation(const GeneralizedPermutation& p,
                                                 double timescale = 1.0);

/// L x L unitary with entries w^{jk} / sqrt(L), w = exp(-2 pi i / L).
DenseOperator dft_matrix(std::size_t length);

/// c = -1/2 + i / (2 sqrt 3).
Complex three_spin_coupling();

/// Hamiltonian of the 3-cycle u3(0,0,0) on its auxiliary basis:
/// (2pi/3T) [[1, c*, c], [c, 1, c*], [c*, c, 1]] = D diag(0,1,2) D^dag (2pi/3T).
DenseOperator aux_hamiltonian(double timescale = 1.0);

/// (2pi/3T) (1 + c P13 P23 + c* P23 P13) on three spins; the exact
/// logarithm of P12 P23 on the principal branch.
Hamiltonian closed_form_three_spin_hamiltonian(double timescale = 1.0);

/// Generic dense route: Schur factorisation of the unitary `u`, eigenphases
/// taken in [0, 2pi). Throws std::invalid_argument if `u` is not unitary
/// within 1e-10 or T <= 0.
Hamiltonian matrix_log_unitary(const DenseOperator& u, double timescale = 1.0);

/// Checks P13 P23 |x,y,z> = |y,z,x>, its square gives |z,x,y>, and the
/// cube is the identity, on all eight configurations.
bool cyclic_shift_identity_check(int n_spins = 3);

}  // namespace ontic
