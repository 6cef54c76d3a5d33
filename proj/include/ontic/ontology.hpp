#pragma once

// Ontological (permutation) evolution versus perturbed evolution that
// produces superpositions, with a leakage measure 1 - max_k |<k|U|s>|^2.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontic/bitspace.hpp"
#include "ontic/dense.hpp"
#include "ontic/permops.hpp"

namespace ontic {

class StateVector {
 public:
  /// Throws std::invalid_argument unless sum |a|^2 = 1 within 1e-12.
  explicit StateVector(DenseVector amplitudes);

  static StateVector basis(std::size_t dim, BasisIndex index);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const DenseVector& amplitudes() const { return amplitudes_; }
  std::vector<double> probabilities() const;

  static constexpr double kNormTolerance = 1e-12;

 private:
  DenseVector amplitudes_;
};

struct OntologicalStep {
  BasisIndex state = 0;
  double phase = 0.0;  // accumulated, unreduced
};

OntologicalStep evolve_ontological(BasisIndex state, const GeneralizedPermutation& p,
                                   unsigned steps);

/// Carries every amplitude along p; the multiset of |a|^2 is unchanged.
StateVector evolve_template(const StateVector& q, const GeneralizedPermutation& p);

/// i exp(-i (pi/2)(1 + eps) P_ij), evaluated in closed form (exact at
/// eps = 0). Requires |eps| < 1.
DenseOperator perturbed_exchange(SpinPair pair, int n_spins, double epsilon);

/// exp(-i H (1 + eps) T) with H the closed-form three-spin Hamiltonian.
DenseOperator perturbed_hamiltonian_evolution(double epsilon, double timescale = 1.0);

struct LeakageGenerator {
  enum class Kind { PerturbedExchange, PerturbedHamiltonian };

  Kind kind = Kind::PerturbedExchange;
  SpinPair pair{1, 2};
  int n_spins = 2;
  double timescale = 1.0;

  static LeakageGenerator exchange(SpinPair pair, int n_spins);
  static LeakageGenerator hamiltonian(double timescale = 1.0);

  std::size_t dim() const;
  DenseOperator evolution(double epsilon) const;
  std::string label() const;
};

struct LeakageReport {
  double epsilon = 0.0;
  BasisIndex source = 0;
  BasisIndex dominant = 0;
  double dominant_prob = 1.0;
  double leakage = 0.0;
  std::optional<LeakageGenerator> generator;
};

/// Throws if u is not unitary within 1e-10 or source is out of range.
LeakageReport leakage(const DenseOperator& u, BasisIndex source);

struct SourceSlope {
  BasisIndex source = 0;
  std::optional<double> slope;  // log-log, two smallest positive eps
};

struct LeakageSweep {
  std::vector<LeakageReport> reports;  // epsilon-major, then source order
  std::vector<SourceSlope> slopes;     // one per source
};

/// One report per (eps, source). Cells run concurrently under OpenMP.
LeakageSweep leakage_sweep(const LeakageGenerator& gen, const std::vector<double>& epsilons,
                           const std::vector<BasisIndex>& sources);

/// Single-threaded reference for leakage_sweep.
LeakageSweep leakage_sweep_serial(const LeakageGenerator& gen,
                                  const std::vector<double>& epsilons,
                                  const std::vector<BasisIndex>& sources);

}  // namespace ontic
