#include "ontic/permops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ontic {

GeneralizedPermutation::GeneralizedPermutation(std::vector<std::size_t> target,
                                               std::vector<double> phase)
    : target_(std::move(target)), phase_(std::move(phase)) {
  if (target_.size() != phase_.size()) {
    throw std::invalid_argument("permutation target/phase length mismatch");
  }
  std::vector<bool> seen(target_.size(), false);
  for (std::size_t t : target_) {
    if (t >= target_.size() || seen[t]) {
      throw std::invalid_argument("permutation target is not a bijection");
    }
    seen[t] = true;
  }
}

GeneralizedPermutation::GeneralizedPermutation(std::vector<std::size_t> target)
    : GeneralizedPermutation(target, std::vector<double>(target.size(), 0.0)) {}

GeneralizedPermutation GeneralizedPermutation::identity(std::size_t dim) {
  std::vector<std::size_t> t(dim);
  std::iota(t.begin(), t.end(), std::size_t{0});
  return GeneralizedPermutation(std::move(t));
}

DenseOperator GeneralizedPermutation::dense() const {
  const auto d = static_cast<Eigen::Index>(dim());
  DenseOperator m = DenseOperator::Zero(d, d);
  for (std::size_t j = 0; j < dim(); ++j) {
    m(static_cast<Eigen::Index>(target_[j]), static_cast<Eigen::Index>(j)) =
        std::exp(-kI * phase_[j]);
  }
  return m;
}

GeneralizedPermutation GeneralizedPermutation::inverse() const {
  std::vector<std::size_t> t(dim());
  std::vector<double> ph(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    t[target_[j]] = j;
    ph[target_[j]] = -phase_[j];
  }
  return GeneralizedPermutation(std::move(t), std::move(ph));
}

bool GeneralizedPermutation::equivalent(const GeneralizedPermutation& other, double tol) const {
  if (target_ != other.target_) return false;
  for (std::size_t j = 0; j < dim(); ++j) {
    const double d = wrap_phase(phase_[j] - other.phase_[j], 0.0);
    if (std::min(d, kTwoPi - d) > tol) return false;
  }
  return true;
}

GeneralizedPermutation u3(double phi1, double phi2, double phi3) {
  // column 1 -> row 0 (phi1), column 2 -> row 1 (phi2), column 0 -> row 2 (phi3)
  return GeneralizedPermutation({2, 0, 1}, {phi3, phi1, phi2});
}

GeneralizedPermutation lift_exchange(SpinPair pair, int n_spins) {
  const std::size_t dim = basis_dim(n_spins);
  pair.validate(n_spins);
  std::vector<std::size_t> t(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    t[idx] = apply_exchange(SpinConfig(n_spins, idx), pair).index();
  }
  return GeneralizedPermutation(std::move(t));
}

GeneralizedPermutation compose(const GeneralizedPermutation& a, const GeneralizedPermutation& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("compose: dimension mismatch " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
  }
  std::vector<std::size_t> t(a.dim());
  std::vector<double> ph(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const std::size_t mid = b.target()[j];
    t[j] = a.target()[mid];
    ph[j] = b.phase()[j] + a.phase()[mid];
  }
  return GeneralizedPermutation(std::move(t), std::move(ph));
}

GeneralizedPermutation exchange_chain(const std::vector<SpinPair>& chain, int n_spins) {
  auto out = GeneralizedPermutation::identity(basis_dim(n_spins));
  for (const SpinPair& pair : chain) out = compose(out, lift_exchange(pair, n_spins));
  return out;
}

GeneralizedPermutation power(const GeneralizedPermutation& p, unsigned k) {
  auto out = GeneralizedPermutation::identity(p.dim());
  for (unsigned s = 0; s < k; ++s) out = compose(p, out);
  return out;
}

std::vector<std::size_t> CycleData::cycle_type() const {
  std::vector<std::size_t> lengths;
  lengths.reserve(cycles.size());
  for (const auto& c : cycles) lengths.push_back(c.members.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t CycleData::order() const {
  std::size_t l = 1;
  for (const auto& c : cycles) l = std::lcm(l, c.members.size());
  return l;
}

CycleData cycle_decomposition(const GeneralizedPermutation& p) {
  CycleData out;
  std::vector<bool> visited(p.dim(), false);
  for (std::size_t start = 0; start < p.dim(); ++start) {
    if (visited[start]) continue;
    Cycle c;
    std::size_t j = start;
    do {
      visited[j] = true;
      c.members.push_back(j);
      c.total_phase += p.phase()[j];
      j = p.target()[j];
    } while (j != start);
    out.cycles.push_back(std::move(c));
  }
  return out;
}

OntologyCheck is_ontological(const DenseOperator& m, double tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("is_ontological: matrix is not square");
  }
  const auto d = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> target(d);
  std::vector<double> phase(d);
  std::vector<bool> row_used(d, false);

  OntologyCheck result;
  bool ok = true;
  bool bijective = true;
  OntologyWitness worst;
  double worst_score = -1.0;

  for (std::size_t j = 0; j < d; ++j) {
    const auto col = m.col(static_cast<Eigen::Index>(j));
    Eigen::Index top = 0;
    const double largest = col.cwiseAbs().maxCoeff(&top);
    double second = 0.0;
    for (Eigen::Index r = 0; r < col.size(); ++r) {
      if (r != top) second = std::max(second, std::abs(col(r)));
    }
    const double defect = std::abs(largest - 1.0);
    const bool col_ok = defect <= tol && second <= tol;
    const double score = std::max(defect, second);
    if (!col_ok) ok = false;
    if (score > worst_score) {
      worst_score = score;
      worst = {j, second, defect};
    }
    target[j] = static_cast<std::size_t>(top);
    phase[j] = -std::arg(col(top));
    if (row_used[target[j]]) bijective = false;
    row_used[target[j]] = true;
  }

  if (ok && bijective) {
    result.ontological = true;
    result.permutation.emplace(std::move(target), std::move(phase));
  } else {
    result.witness = worst;
  }
  return result;
}

}  // namespace ontic
