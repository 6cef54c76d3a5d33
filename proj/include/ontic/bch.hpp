#pragma once

// Exponential identities for spin exchanges on three spins, and the
// truncated Baker-Campbell-Hausdorff series they are contrasted with.

#include <optional>
#include <string_view>

#include "ontic/bitspace.hpp"
#include "ontic/dense.hpp"

namespace ontic {

enum class BchIdentity {
  ExchangeExponential,  // P = i exp(-i pi/2 P)
  TerminatingBch,       // i^2 exp(-i pi/2 P12) exp(-i pi/2 P23) = exp(-i H T)
  FactorizedBch,        // exp(-i H T) as a product of commuting exponentials
  TruncatedBch,         // i^2 exp(Z_k) with Z_k the series through order k
};

std::string_view identity_name(BchIdentity id);

struct BchReport {
  BchIdentity identity = BchIdentity::ExchangeExponential;
  DenseOperator lhs;
  DenseOperator rhs;
  double max_abs_diff = 0.0;
  int terms_evaluated = 0;  // series terms used; 0 for closed identities

  /// max(|lhs - P12 P23|, |rhs - P12 P23|) where that product is the target.
  std::optional<double> product_diff;
  /// max_norm([P23 P13, P13 P23]) for the factorised form.
  std::optional<double> commutator_norm;

  std::size_t dim() const { return static_cast<std::size_t>(lhs.rows()); }
};

/// a b - b a; throws on shape mismatch.
DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);

/// lhs = P_ij, rhs = i exp(-i (pi/2 + 2 pi shift) P_ij).
BchReport exchange_exponential_identity(SpinPair pair, int n_spins, int shift = 0);

struct TerminatingBchOptions {
  int shift_first = 0;   // 2pi multiples added to the P12 coefficient
  int shift_second = 0;  // 2pi multiples added to the P23 coefficient
  bool conjugate_coupling = false;  // swap c and c* on the right-hand side
};

BchReport verify_terminating_bch(const TerminatingBchOptions& options = {});

BchReport verify_factorized_form();

/// X + Y + [X,Y]/2 + ([X,[X,Y]] + [Y,[Y,X]])/12 - [Y,[X,[X,Y]]]/24,
/// summed through `max_order` (1..4).
DenseOperator truncated_bch_series(const DenseOperator& x, const DenseOperator& y, int max_order);

/// Number of displayed series terms up to `max_order`: 2, 3, 5, 6.
int truncated_term_count(int max_order);

/// Compares i^2 exp(Z_k) for X = -i pi/2 P12, Y = -i pi/2 P23 with P12 P23.
BchReport truncated_bch_report(int max_order);

}  // namespace ontic
