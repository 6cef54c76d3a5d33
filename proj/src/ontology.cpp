#include "ontic/ontology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <stdexcept>

#include "ontic/spectral.hpp"

namespace ontic {

namespace {

void check_epsilon(double eps) {
  if (!(std::abs(eps) < 1.0)) throw std::invalid_argument("perturbation must satisfy |eps| < 1");
}

void check_sweep_inputs(const LeakageGenerator& gen, const std::vector<double>& epsilons,
                        const std::vector<BasisIndex>& sources) {
  if (epsilons.empty()) throw std::invalid_argument("leakage sweep needs at least one epsilon");
  if (sources.empty()) throw std::invalid_argument("leakage sweep needs at least one source");
  for (double e : epsilons) check_epsilon(e);
  const std::size_t dim = gen.dim();
  for (BasisIndex s : sources) {
    if (s >= dim) throw std::invalid_argument("leakage source index out of range");
  }
}

std::vector<SourceSlope> fit_slopes(const std::vector<LeakageReport>& reports,
                                    const std::vector<double>& epsilons,
                                    const std::vector<BasisIndex>& sources) {
  std::vector<SourceSlope> out;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    std::vector<std::pair<double, double>> points;
    for (std::size_t e = 0; e < epsilons.size(); ++e) {
      const auto& r = reports[e * sources.size() + s];
      if (r.epsilon > 0.0 && r.leakage > 0.0) points.emplace_back(r.epsilon, r.leakage);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end(),
                             [](auto& a, auto& b) { return a.first == b.first; }),
                 points.end());
    SourceSlope slope{sources[s], std::nullopt};
    if (points.size() >= 2) {
      slope.slope = std::log(points[1].second / points[0].second) /
                    std::log(points[1].first / points[0].first);
    }
    out.push_back(slope);
  }
  return out;
}

}  // namespace

StateVector::StateVector(DenseVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw std::invalid_argument("state vector is empty");
  const double norm = amplitudes_.squaredNorm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state vector is not normalized (sum |a|^2 = " +
                                std::to_string(norm) + ")");
  }
}

StateVector StateVector::basis(std::size_t dim, BasisIndex index) {
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  DenseVector v = DenseVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(dim());
  for (std::size_t k = 0; k < dim(); ++k) p[k] = std::norm(amplitudes_(static_cast<Eigen::Index>(k)));
  return p;
}

OntologicalStep evolve_ontological(BasisIndex state, const GeneralizedPermutation& p,
                                   unsigned steps) {
  if (state >= p.dim()) throw std::invalid_argument("basis index out of range");
  OntologicalStep out{state, 0.0};
  for (unsigned s = 0; s < steps; ++s) {
    out.phase += p.phase()[out.state];
    out.state = p.target()[out.state];
  }
  return out;
}

StateVector evolve_template(const StateVector& q, const GeneralizedPermutation& p) {
  if (q.dim() != p.dim()) throw std::invalid_argument("state/permutation dimension mismatch");
  DenseVector out = DenseVector::Zero(static_cast<Eigen::Index>(q.dim()));
  for (std::size_t j = 0; j < q.dim(); ++j) {
    out(static_cast<Eigen::Index>(p.target()[j])) =
        std::exp(-kI * p.phase()[j]) * q.amplitudes()(static_cast<Eigen::Index>(j));
  }
  return StateVector(std::move(out));
}

DenseOperator perturbed_exchange(SpinPair pair, int n_spins, double epsilon) {
  check_epsilon(epsilon);
  const DenseOperator p = lift_exchange(pair, n_spins).dense();
  // P^2 = 1 collapses the exponential to cos(pi eps/2) P - i sin(pi eps/2) 1.
  const double x = kPi * epsilon / 2.0;
  DenseOperator out = std::cos(x) * p;
  out.diagonal().array() -= kI * std::sin(x);
  return out;
}

DenseOperator perturbed_hamiltonian_evolution(double epsilon, double timescale) {
  check_epsilon(epsilon);
  const Hamiltonian h = closed_form_three_spin_hamiltonian(timescale);
  return exp_normal(DenseOperator(-kI * (1.0 + epsilon) * timescale * h.matrix));
}

LeakageGenerator LeakageGenerator::exchange(SpinPair pair, int n_spins) {
  validate_spin_count(n_spins);
  pair.validate(n_spins);
  LeakageGenerator g;
  g.kind = Kind::PerturbedExchange;
  g.pair = pair;
  g.n_spins = n_spins;
  return g;
}

LeakageGenerator LeakageGenerator::hamiltonian(double timescale) {
  if (!(timescale > 0.0)) throw std::invalid_argument("timescale T must be positive");
  LeakageGenerator g;
  g.kind = Kind::PerturbedHamiltonian;
  g.n_spins = 3;
  g.timescale = timescale;
  return g;
}

std::size_t LeakageGenerator::dim() const { return basis_dim(n_spins); }

DenseOperator LeakageGenerator::evolution(double epsilon) const {
  return kind == Kind::PerturbedExchange ? perturbed_exchange(pair, n_spins, epsilon)
                                         : perturbed_hamiltonian_evolution(epsilon, timescale);
}

std::string LeakageGenerator::label() const {
  if (kind == Kind::PerturbedHamiltonian) return "hamiltonian";
  return "exchange(" + std::to_string(pair.i) + "," + std::to_string(pair.j) + ")";
}

LeakageReport leakage(const DenseOperator& u, BasisIndex source) {
  if (u.rows() != u.cols()) throw std::invalid_argument("leakage: operator is not square");
  if (source >= static_cast<std::size_t>(u.cols())) {
    throw std::invalid_argument("leakage: source index out of range");
  }
  if (unitarity_defect(u) > 1e-10) throw std::invalid_argument("leakage: operator is not unitary");
  LeakageReport r;
  r.source = source;
  Eigen::Index top = 0;
  r.dominant_prob = u.col(static_cast<Eigen::Index>(source)).cwiseAbs2().maxCoeff(&top);
  r.dominant = static_cast<BasisIndex>(top);
  r.leakage = std::clamp(1.0 - r.dominant_prob, 0.0, 1.0);
  return r;
}

LeakageSweep leakage_sweep_serial(const LeakageGenerator& gen,
                                  const std::vector<double>& epsilons,
                                  const std::vector<BasisIndex>& sources) {
  check_sweep_inputs(gen, epsilons, sources);
  LeakageSweep out;
  out.reports.resize(epsilons.size() * sources.size());
  for (std::size_t e = 0; e < epsilons.size(); ++e) {
    const DenseOperator u = gen.evolution(epsilons[e]);
    for (std::size_t s = 0; s < sources.size(); ++s) {
      LeakageReport r = leakage(u, sources[s]);
      r.epsilon = epsilons[e];
      r.generator = gen;
      out.reports[e * sources.size() + s] = r;
    }
  }
  out.slopes = fit_slopes(out.reports, epsilons, sources);
  return out;
}

LeakageSweep leakage_sweep(const LeakageGenerator& gen, const std::vector<double>& epsilons,
                           const std::vector<BasisIndex>& sources) {
  check_sweep_inputs(gen, epsilons, sources);
  LeakageSweep out;
  out.reports.resize(epsilons.size() * sources.size());
  std::exception_ptr failure;
  const auto n_eps = static_cast<std::int64_t>(epsilons.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t e = 0; e < n_eps; ++e) {
    try {
      const auto ei = static_cast<std::size_t>(e);
      const DenseOperator u = gen.evolution(epsilons[ei]);
      for (std::size_t s = 0; s < sources.size(); ++s) {
        LeakageReport r = leakage(u, sources[s]);
        r.epsilon = epsilons[ei];
        r.generator = gen;
        out.reports[ei * sources.size() + s] = r;
      }
    } catch (...) {
#pragma omp critical(ontic_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  out.slopes = fit_slopes(out.reports, epsilons, sources);
  return out;
}

}  // namespace ontic
