#include "ontic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ontic {

namespace {

void require_positive_timescale(double t) {
  if (!(t > 0.0)) throw std::invalid_argument("timescale T must be positive");
}

constexpr double kUnitaryTolerance = 1e-10;

}  // namespace

DenseOperator Hamiltonian::evolution() const {
  return exp_normal(DenseOperator(-kI * timescale * matrix));
}

DenseOperator SpectralData::reconstruct() const {
  DenseVector e(static_cast<Eigen::Index>(eigenvalues.size()));
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    e(static_cast<Eigen::Index>(k)) = eigenvalues[k];
  }
  return eigenvectors * e.asDiagonal() * eigenvectors.adjoint();
}

std::vector<std::pair<double, std::size_t>> group_multiplicities(std::vector<double> values,
                                                                 double tol) {
  std::sort(values.begin(), values.end());
  std::vector<std::pair<double, std::size_t>> out;
  for (double v : values) {
    if (!out.empty() && std::abs(v - out.back().first) <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

std::vector<double> cogwheel_spectrum(std::span<const double> phases, double timescale) {
  require_positive_timescale(timescale);
  if (phases.empty()) throw std::invalid_argument("cogwheel needs at least one state");
  const double n = static_cast<double>(phases.size());
  double total = 0.0;
  for (double p : phases) total += p;
  std::vector<double> out;
  out.reserve(phases.size());
  for (std::size_t m = 0; m < phases.size(); ++m) {
    out.push_back((total + kTwoPi * static_cast<double>(m)) / (n * timescale));
  }
  return out;
}

PermutationSpectrum hamiltonian_from_permutation(const GeneralizedPermutation& p,
                                                 double timescale) {
  require_positive_timescale(timescale);
  const auto d = static_cast<Eigen::Index>(p.dim());

  PermutationSpectrum out;
  out.cycles = cycle_decomposition(p);
  out.hamiltonian.timescale = timescale;
  out.hamiltonian.matrix = DenseOperator::Zero(d, d);
  out.spectrum.eigenvectors = DenseOperator::Zero(d, d);
  out.spectrum.eigenvalues.reserve(p.dim());

  Eigen::Index column = 0;
  for (const Cycle& cycle : out.cycles.cycles) {
    const std::size_t len = cycle.members.size();
    const double norm = 1.0 / std::sqrt(static_cast<double>(len));

    // Cumulative phase psi_k of the first k steps along the cycle; the
    // eigenvector for branch m has amplitude exp(-i psi_k) lambda^{-k}
    // on member k, with lambda^L = exp(-i Phi).
    std::vector<double> psi(len, 0.0);
    for (std::size_t k = 1; k < len; ++k) psi[k] = psi[k - 1] + p.phase()[cycle.members[k - 1]];

    std::vector<double> steps(len);
    for (std::size_t k = 0; k < len; ++k) steps[k] = p.phase()[cycle.members[k]];
    const std::vector<double> energies = cogwheel_spectrum(steps, timescale);
    for (std::size_t m = 0; m < len; ++m) {
      const double theta = energies[m] * timescale;
      for (std::size_t k = 0; k < len; ++k) {
        const double arg = -psi[k] + static_cast<double>(k) * theta;
        out.spectrum.eigenvectors(static_cast<Eigen::Index>(cycle.members[k]), column) =
            norm * std::exp(kI * arg);
      }
      out.spectrum.eigenvalues.push_back(energies[m]);
      ++column;
    }

    // Block of H on this cycle: sum_m E_m |v_m><v_m|.
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t c = 0; c < len; ++c) {
        Complex acc = 0.0;
        const Eigen::Index first = column - static_cast<Eigen::Index>(len);
        for (std::size_t m = 0; m < len; ++m) {
          const Eigen::Index col = first + static_cast<Eigen::Index>(m);
          acc += energies[m] *
                 out.spectrum.eigenvectors(static_cast<Eigen::Index>(cycle.members[r]), col) *
                 std::conj(out.spectrum.eigenvectors(
                     static_cast<Eigen::Index>(cycle.members[c]), col));
        }
        out.hamiltonian.matrix(static_cast<Eigen::Index>(cycle.members[r]),
                               static_cast<Eigen::Index>(cycle.members[c])) = acc;
      }
    }
  }
  out.spectrum.multiplicities = group_multiplicities(out.spectrum.eigenvalues);
  return out;
}

DenseOperator dft_matrix(std::size_t length) {
  if (length == 0) throw std::invalid_argument("dft_matrix: length must be positive");
  const auto n = static_cast<Eigen::Index>(length);
  const double norm = 1.0 / std::sqrt(static_cast<double>(length));
  DenseOperator d(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      // reduce jk mod L before scaling so the angle stays small
      const auto jk = static_cast<double>((j * k) % n);
      d(j, k) = norm * std::exp(-kI * kTwoPi * jk / static_cast<double>(length));
    }
  }
  return d;
}

Complex three_spin_coupling() { return {-0.5, 1.0 / (2.0 * std::sqrt(3.0))}; }

DenseOperator aux_hamiltonian(double timescale) {
  require_positive_timescale(timescale);
  const Complex c = three_spin_coupling();
  const Complex cc = std::conj(c);
  DenseOperator h(3, 3);
  h << 1.0, cc, c,
       c, 1.0, cc,
       cc, c, 1.0;
  return (kTwoPi / (3.0 * timescale)) * h;
}

Hamiltonian closed_form_three_spin_hamiltonian(double timescale) {
  require_positive_timescale(timescale);
  const Complex c = three_spin_coupling();
  const DenseOperator p13 = lift_exchange({1, 3}, 3).dense();
  const DenseOperator p23 = lift_exchange({2, 3}, 3).dense();
  const DenseOperator id = DenseOperator::Identity(8, 8);
  Hamiltonian h;
  h.timescale = timescale;
  h.matrix = (kTwoPi / (3.0 * timescale)) * (id + c * p13 * p23 + std::conj(c) * p23 * p13);
  return h;
}

Hamiltonian matrix_log_unitary(const DenseOperator& u, double timescale) {
  require_positive_timescale(timescale);
  if (u.rows() != u.cols()) throw std::invalid_argument("matrix_log_unitary: not square");
  const double defect = unitarity_defect(u);
  if (defect > kUnitaryTolerance) {
    throw std::invalid_argument("matrix_log_unitary: input is not unitary (defect " +
                                std::to_string(defect) + ")");
  }
  Hamiltonian h;
  h.timescale = timescale;
  if (u.rows() == 0) {
    h.matrix = u;
    return h;
  }
  Eigen::ComplexSchur<DenseOperator> schur(u, true);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("matrix_log_unitary: Schur factorisation did not converge");
  }
  const DenseOperator& q = schur.matrixU();
  const DenseVector lambda = schur.matrixT().diagonal();
  Eigen::VectorXd energy(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    energy(k) = wrap_phase(-std::arg(lambda(k))) / timescale;
  }
  DenseOperator m = q * energy.cast<Complex>().asDiagonal() * q.adjoint();
  h.matrix = 0.5 * (m + m.adjoint());
  return h;
}

bool cyclic_shift_identity_check(int n_spins) {
  if (n_spins != 3) throw std::invalid_argument("cyclic shift check is defined for three spins");
  const auto p = compose(lift_exchange({1, 3}, 3), lift_exchange({2, 3}, 3));
  const auto p2 = compose(p, p);
  const auto p3 = compose(p, p2);
  for (BasisIndex idx = 0; idx < 8; ++idx) {
    const SpinConfig s(3, idx);
    const auto x = s.spin(1), y = s.spin(2), z = s.spin(3);
    if (SpinConfig(3, p.target()[idx]) != SpinConfig::from_spins({y, z, x})) return false;
    if (SpinConfig(3, p2.target()[idx]) != SpinConfig::from_spins({z, x, y})) return false;
    if (p3.target()[idx] != idx) return false;
  }
  return true;
}

}  // namespace ontic
