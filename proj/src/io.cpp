#include "ontic/io.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ontic::io {

namespace {

void write_json(std::string& out, const json& v, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d, 17) : "null";
      break;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write_json(out, e, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      break;
    }
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write_json(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      break;
    }
    default:
      out += v.dump();
  }
}

std::string state_label(BasisIndex idx, int n_spins) { return SpinConfig(n_spins, idx).to_bits(); }

}  // namespace

std::string format_double(double value, int digits) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string dump_json(const json& value, int indent) {
  std::string out;
  write_json(out, value, indent, 0);
  return out;
}

json to_json(const GeneralizedPermutation& p) {
  return {{"dim", p.dim()}, {"target", p.target()}, {"phase", p.phase()}};
}

static GeneralizedPermutation permutation_from_json_unchecked(const json& j) {
  auto target = j.at("target").get<std::vector<std::size_t>>();
  auto phase = j.at("phase").get<std::vector<double>>();
  if (j.at("dim").get<std::size_t>() != target.size()) {
    throw std::invalid_argument("permutation JSON: dim does not match target length");
  }
  return GeneralizedPermutation(std::move(target), std::move(phase));
}

json to_json(const DenseOperator& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back({m(r, c).real(), m(r, c).imag()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

static DenseOperator dense_from_json_unchecked(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols) {
    throw std::invalid_argument("matrix JSON: data length does not match rows*cols");
  }
  DenseOperator m(rows, cols);
  for (Eigen::Index k = 0; k < rows * cols; ++k) {
    const auto& e = data[static_cast<std::size_t>(k)];
    m(k / cols, k % cols) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
  }
  return m;
}

std::string to_csv(const DenseOperator& m) {
  std::string out = "row,col,re,im\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out += std::to_string(r) + ',' + std::to_string(c) + ',' +
             format_double(m(r, c).real(), 17) + ',' + format_double(m(r, c).imag(), 17) + '\n';
    }
  }
  return out;
}

json to_json(const PauliSum& s) {
  json terms = json::array();
  for (const auto& [str, c] : s.terms()) {
    terms.push_back({{"string", str.str()}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"n_sites", s.n_sites()}, {"terms", std::move(terms)}};
}

static PauliSum pauli_sum_from_json_unchecked(const json& j) {
  PauliSum s(j.at("n_sites").get<int>());
  for (const auto& t : j.at("terms")) {
    s.add(PauliString::parse(t.at("string").get<std::string>()),
          Complex(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return s;
}

json to_json(const BchReport& r) {
  json j = {{"identity", identity_name(r.identity)},
            {"max_abs_diff", r.max_abs_diff},
            {"dims", r.dim()},
            {"terms_evaluated", r.terms_evaluated}};
  if (r.product_diff) j["product_diff"] = *r.product_diff;
  if (r.commutator_norm) j["commutator_norm"] = *r.commutator_norm;
  return j;
}

json spectral_json(const std::vector<double>& eigenvalues, const CycleData& cycles) {
  std::vector<double> sorted = eigenvalues;
  std::sort(sorted.begin(), sorted.end());
  json mult = json::array();
  for (const auto& [e, n] : group_multiplicities(sorted)) {
    mult.push_back({{"energy", e}, {"count", n}});
  }
  return {{"eigenvalues", sorted}, {"multiplicities", std::move(mult)},
          {"cycle_type", cycles.cycle_type()}};
}

std::string spectral_csv(const std::vector<double>& eigenvalues) {
  std::string out = "eigenvalue,multiplicity\n";
  for (const auto& [e, n] : group_multiplicities(eigenvalues)) {
    out += format_double(e, 17) + ',' + std::to_string(n) + '\n';
  }
  return out;
}

json to_json(const LeakageReport& r, int n_spins) {
  json j = {{"epsilon", r.epsilon},
            {"source", state_label(r.source, n_spins)},
            {"dominant", state_label(r.dominant, n_spins)},
            {"dominant_prob", r.dominant_prob},
            {"leakage", r.leakage}};
  if (r.generator) j["generator"] = r.generator->label();
  return j;
}

json to_json(const LeakageSweep& sweep, int n_spins) {
  json reports = json::array();
  for (const auto& r : sweep.reports) reports.push_back(to_json(r, n_spins));
  json slopes = json::array();
  for (const auto& s : sweep.slopes) {
    slopes.push_back({{"source", state_label(s.source, n_spins)},
                      {"slope", s.slope ? json(*s.slope) : json(nullptr)}});
  }
  return {{"reports", std::move(reports)}, {"slopes", std::move(slopes)}};
}

std::string to_csv(const LeakageSweep& sweep, int n_spins) {
  std::string out = "epsilon,source,dominant,dominant_prob,leakage,slope\n";
  for (const auto& r : sweep.reports) {
    std::string slope;
    for (const auto& s : sweep.slopes) {
      if (s.source == r.source && s.slope) slope = format_double(*s.slope, 17);
    }
    out += format_double(r.epsilon, 17) + ',' + state_label(r.source, n_spins) + ',' +
           state_label(r.dominant, n_spins) + ',' + format_double(r.dominant_prob, 17) + ',' +
           format_double(r.leakage, 17) + ',' + slope + '\n';
  }
  return out;
}

// Schema errors from nlohmann (missing keys, wrong types) surface as
// std::invalid_argument like every other input error in the library.
template <typename F>
auto rethrow_schema_errors(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(what) + " JSON: " + e.what());
  }
}

GeneralizedPermutation permutation_from_json(const json& j) {
  return rethrow_schema_errors("permutation", [&] { return permutation_from_json_unchecked(j); });
}

DenseOperator dense_from_json(const json& j) {
  return rethrow_schema_errors("dense operator", [&] { return dense_from_json_unchecked(j); });
}

PauliSum pauli_sum_from_json(const json& j) {
  return rethrow_schema_errors("Pauli sum", [&] { return pauli_sum_from_json_unchecked(j); });
}

}  // namespace ontic::io
