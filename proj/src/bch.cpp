#include "ontic/bch.hpp"

#include <stdexcept>

#include "ontic/permops.hpp"
#include "ontic/spectral.hpp"

namespace ontic {

namespace {

DenseOperator exchange_dense(int i, int j) { return lift_exchange({i, j}, 3).dense(); }

DenseOperator three_spin_product() {
  return compose(lift_exchange({1, 2}, 3), lift_exchange({2, 3}, 3)).dense();
}

DenseOperator terminating_rhs(bool conjugate) {
  Complex c = three_spin_coupling();
  if (conjugate) c = std::conj(c);
  const DenseOperator p13 = exchange_dense(1, 3);
  const DenseOperator p23 = exchange_dense(2, 3);
  const DenseOperator exponent = DenseOperator::Identity(8, 8) + c * p13 * p23 +
                                 std::conj(c) * p23 * p13;
  return exp_normal(DenseOperator(-kI * (kTwoPi / 3.0) * exponent));
}

void check_order(int max_order) {
  if (max_order < 1 || max_order > 4) {
    throw std::invalid_argument("truncated BCH series is available through order 4");
  }
}

}  // namespace

std::string_view identity_name(BchIdentity id) {
  switch (id) {
    case BchIdentity::ExchangeExponential: return "exchange_exponential";
    case BchIdentity::TerminatingBch: return "terminating_bch";
    case BchIdentity::FactorizedBch: return "factorized_bch";
    case BchIdentity::TruncatedBch: return "truncated_bch";
  }
  return "unknown";
}

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("commutator: operands must be square with equal shape");
  }
  return a * b - b * a;
}

BchReport exchange_exponential_identity(SpinPair pair, int n_spins, int shift) {
  const DenseOperator p = lift_exchange(pair, n_spins).dense();
  const double angle = kPi / 2.0 + kTwoPi * shift;
  BchReport r;
  r.identity = BchIdentity::ExchangeExponential;
  r.lhs = p;
  r.rhs = kI * exp_normal(DenseOperator(-kI * angle * p));
  r.max_abs_diff = max_abs_diff(r.lhs, r.rhs);
  return r;
}

BchReport verify_terminating_bch(const TerminatingBchOptions& options) {
  const double a1 = kPi / 2.0 + kTwoPi * options.shift_first;
  const double a2 = kPi / 2.0 + kTwoPi * options.shift_second;
  BchReport r;
  r.identity = BchIdentity::TerminatingBch;
  r.lhs = (kI * kI) * exp_normal(DenseOperator(-kI * a1 * exchange_dense(1, 2))) *
          exp_normal(DenseOperator(-kI * a2 * exchange_dense(2, 3)));
  r.rhs = terminating_rhs(options.conjugate_coupling);
  r.max_abs_diff = max_abs_diff(r.lhs, r.rhs);
  const DenseOperator u = three_spin_product();
  r.product_diff = std::max(max_abs_diff(r.lhs, u), max_abs_diff(r.rhs, u));
  return r;
}

BchReport verify_factorized_form() {
  const Complex c = three_spin_coupling();
  const DenseOperator p13p23 = exchange_dense(1, 3) * exchange_dense(2, 3);
  const DenseOperator p23p13 = exchange_dense(2, 3) * exchange_dense(1, 3);
  const double k = kTwoPi / 3.0;

  BchReport r;
  r.identity = BchIdentity::FactorizedBch;
  r.lhs = terminating_rhs(false);
  r.rhs = std::exp(-kI * k) * exp_normal(DenseOperator(-kI * k * c * p13p23)) *
          exp_normal(DenseOperator(-kI * k * std::conj(c) * p23p13));
  r.max_abs_diff = max_abs_diff(r.lhs, r.rhs);
  r.commutator_norm = max_norm(commutator(p23p13, p13p23));
  return r;
}

DenseOperator truncated_bch_series(const DenseOperator& x, const DenseOperator& y, int max_order) {
  check_order(max_order);
  const DenseOperator xy = commutator(x, y);
  DenseOperator z = x + y;
  if (max_order >= 2) z += 0.5 * xy;
  if (max_order >= 3) z += (commutator(x, xy) + commutator(y, commutator(y, x))) / 12.0;
  if (max_order >= 4) z -= commutator(y, commutator(x, xy)) / 24.0;
  return z;
}

int truncated_term_count(int max_order) {
  check_order(max_order);
  constexpr int counts[] = {2, 3, 5, 6};
  return counts[max_order - 1];
}

BchReport truncated_bch_report(int max_order) {
  const DenseOperator x = -kI * (kPi / 2.0) * exchange_dense(1, 2);
  const DenseOperator y = -kI * (kPi / 2.0) * exchange_dense(2, 3);
  BchReport r;
  r.identity = BchIdentity::TruncatedBch;
  r.lhs = (kI * kI) * exp_normal(truncated_bch_series(x, y, max_order));
  r.rhs = three_spin_product();
  r.max_abs_diff = max_abs_diff(r.lhs, r.rhs);
  r.terms_evaluated = truncated_term_count(max_order);
  return r;
}

}  // namespace ontic
