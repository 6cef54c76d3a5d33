#pragma once

// Generalized permutation matrices: one unit-modulus entry per row and
// column. Column j is carried to row target[j] with entry exp(-i phase[j]).

#include <cstddef>
#include <optional>
#include <vector>

#include "ontic/bitspace.hpp"
#include "ontic/dense.hpp"

namespace ontic {

class GeneralizedPermutation {
 public:
  /// Throws std::invalid_argument if `target` is not a bijection on
  /// {0..D-1} or the lengths differ.
  GeneralizedPermutation(std::vector<std::size_t> target, std::vector<double> phase);

  /// Zero phases.
  explicit GeneralizedPermutation(std::vector<std::size_t> target);

  static GeneralizedPermutation identity(std::size_t dim);

  std::size_t dim() const { return target_.size(); }
  const std::vector<std::size_t>& target() const { return target_; }
  const std::vector<double>& phase() const { return phase_; }

  DenseOperator dense() const;
  GeneralizedPermutation inverse() const;

  /// Same map, phases compared modulo 2pi within `tol`.
  bool equivalent(const GeneralizedPermutation& other, double tol = 1e-12) const;

 private:
  std::vector<std::size_t> target_;
  std::vector<double> phase_;
};

/// The 3x3 cycle with M[0,1] = e^{-i phi1}, M[1,2] = e^{-i phi2},
/// M[2,0] = e^{-i phi3}.
GeneralizedPermutation u3(double phi1, double phi2, double phi3);

/// P_ij on the 2^n configuration basis.
GeneralizedPermutation lift_exchange(SpinPair pair, int n_spins);

/// Matrix product a*b (b acts first). Phases add without reduction.
GeneralizedPermutation compose(const GeneralizedPermutation& a, const GeneralizedPermutation& b);

/// Ordered product P_{k1} P_{k2} ... of lifted exchanges; the rightmost
/// pair acts first. An empty chain is the identity.
GeneralizedPermutation exchange_chain(const std::vector<SpinPair>& chain, int n_spins);

/// p^k for k >= 0.
GeneralizedPermutation power(const GeneralizedPermutation& p, unsigned k);

struct Cycle {
  std::vector<std::size_t> members;  // j, target[j], target[target[j]], ...
  double total_phase = 0.0;          // sum of phase along the cycle
};

struct CycleData {
  std::vector<Cycle> cycles;  // ordered by smallest starting index

  /// Cycle lengths sorted ascending.
  std::vector<std::size_t> cycle_type() const;
  std::size_t order() const;  // lcm of the cycle lengths
};

CycleData cycle_decomposition(const GeneralizedPermutation& p);

struct OntologyWitness {
  std::size_t column = 0;
  double second_largest = 0.0;  // largest off-support magnitude in that column
  double support_defect = 0.0;  // | |largest| - 1 |
};

struct OntologyCheck {
  bool ontological = false;
  std::optional<GeneralizedPermutation> permutation;  // set on success
  std::optional<OntologyWitness> witness;             // set on failure
};

inline constexpr double kOntologyTolerance = 1e-10;

/// Tests whether `m` is a generalized permutation matrix. Throws on
/// non-square input.
OntologyCheck is_ontological(const DenseOperator& m, double tol = kOntologyTolerance);

}  // namespace ontic
