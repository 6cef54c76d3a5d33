// ontic: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
// Default output format comes from --format, then $ONTIC_FORMAT, then text.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ontic/bch.hpp"
#include "ontic/bitspace.hpp"
#include "ontic/io.hpp"
#include "ontic/ontology.hpp"
#include "ontic/pauli.hpp"
#include "ontic/permops.hpp"
#include "ontic/spectral.hpp"

namespace {

using namespace ontic;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

// Dense cross-checks (Schur log, exponential round trip) above this size
// would allocate 2^n x 2^n matrices that are no longer desk scale.
constexpr int kDenseCheckMaxSpins = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct RunConfig {
  int n_spins = 3;
  double timescale = 1.0;
  std::string format;
  std::string output_path;
};

Format resolve_format(const std::string& flag) {
  std::string f = flag;
  if (f.empty()) {
    const char* env = std::getenv("ONTIC_FORMAT");
    f = env ? env : "text";
  }
  if (f == "text") return Format::Text;
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  throw UsageError("unknown output format '" + f + "' (expected text, json or csv)");
}

void emit(const RunConfig& cfg, const std::string& payload) {
  std::string body = payload;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (cfg.output_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + cfg.output_path + "'");
  out << body;
}

std::string text_num(double v) { return io::format_double(v, 12); }

void validate_common(const RunConfig& cfg) {
  try {
    validate_spin_count(cfg.n_spins);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(cfg.timescale > 0.0)) throw UsageError("--t must be positive");
}

SpinPair parse_pair_token(const std::string& token) {
  std::string a, b;
  if (auto colon = token.find(':'); colon != std::string::npos) {
    a = token.substr(0, colon);
    b = token.substr(colon + 1);
  } else if (auto dash = token.find('-'); dash != std::string::npos) {
    a = token.substr(0, dash);
    b = token.substr(dash + 1);
  } else if (token.size() == 2) {
    a = token.substr(0, 1);
    b = token.substr(1, 1);
  } else {
    throw UsageError("cannot read exchange '" + token + "' (use 12, 1:2 or 1-2)");
  }
  try {
    std::size_t pa = 0, pb = 0;
    SpinPair p{std::stoi(a, &pa), std::stoi(b, &pb)};
    if (pa != a.size() || pb != b.size()) throw std::invalid_argument("trailing characters");
    return p;
  } catch (const std::exception&) {
    throw UsageError("cannot read exchange '" + token + "'");
  }
}

// "12,23" -> {P12, P23}; the product P12 P23 applies P23 first.
std::vector<SpinPair> parse_chain(const std::string& text, int n_spins) {
  std::vector<SpinPair> chain;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    chain.push_back(parse_pair_token(token));
  }
  for (const auto& p : chain) {
    try {
      p.validate(n_spins);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return chain;
}

// "1,2" -> P12
SpinPair parse_pair_list(const std::string& text, int n_spins) {
  auto comma = text.find(',');
  SpinPair p = comma == std::string::npos
                   ? parse_pair_token(text)
                   : parse_pair_token(text.substr(0, comma) + ":" + text.substr(comma + 1));
  try {
    p.validate(n_spins);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const RunConfig& cfg, const std::string& chain_text) {
  validate_common(cfg);
  const Format fmt = resolve_format(cfg.format);
  const auto chain = parse_chain(chain_text, cfg.n_spins);
  const GeneralizedPermutation p = exchange_chain(chain, cfg.n_spins);
  const CycleData cycles = cycle_decomposition(p);

  std::vector<double> eigenvalues;
  for (const Cycle& c : cycles.cycles) {
    std::vector<double> steps;
    for (auto m : c.members) steps.push_back(p.phase()[m]);
    for (double e : cogwheel_spectrum(steps, cfg.timescale)) eigenvalues.push_back(e);
  }

  std::optional<double> oracle_diff;
  std::optional<double> roundtrip_diff;
  if (cfg.n_spins <= kDenseCheckMaxSpins) {
    const auto extracted = hamiltonian_from_permutation(p, cfg.timescale);
    const auto dense_log = matrix_log_unitary(p.dense(), cfg.timescale);
    oracle_diff = max_abs_diff(extracted.hamiltonian.matrix, dense_log.matrix);
    roundtrip_diff = max_abs_diff(extracted.hamiltonian.evolution(), p.dense());
  }
  const bool ok = (!oracle_diff || *oracle_diff <= 1e-8) &&
                  (!roundtrip_diff || *roundtrip_diff <= 1e-10);

  std::sort(eigenvalues.begin(), eigenvalues.end());
  switch (fmt) {
    case Format::Json: {
      json j = io::spectral_json(eigenvalues, cycles);
      j["command"] = "spectrum";
      j["chain"] = chain_text;
      j["n_spins"] = cfg.n_spins;
      j["timescale"] = cfg.timescale;
      j["oracle_max_abs_diff"] = oracle_diff ? json(*oracle_diff) : json(nullptr);
      j["exp_roundtrip_max_abs_diff"] = roundtrip_diff ? json(*roundtrip_diff) : json(nullptr);
      j["pass"] = ok;
      emit(cfg, io::dump_json(j));
      break;
    }
    case Format::Csv:
      emit(cfg, io::spectral_csv(eigenvalues));
      break;
    case Format::Text: {
      std::ostringstream os;
      os << "cycle type:";
      for (auto l : cycles.cycle_type()) os << ' ' << l;
      os << "\n";
      for (const auto& [e, n] : group_multiplicities(eigenvalues)) {
        os << "E = " << text_num(e) << "  (x" << n << ")  = 2pi/T * " << text_num(e * cfg.timescale / kTwoPi)
           << "\n";
      }
      if (oracle_diff) {
        os << "dense-log oracle max_abs_diff " << text_num(*oracle_diff) << "\n";
        os << "exp(-iHT) round trip max_abs_diff " << text_num(*roundtrip_diff) << "\n";
      }
      emit(cfg, os.str());
      break;
    }
  }
  if (!ok) {
    std::cerr << "spectrum: Hamiltonian extraction exceeded tolerance\n";
    return kExitVerification;
  }
  return kExitOk;
}

// -------------------------------------------------------------- bch-verify

int cmd_bch_verify(const RunConfig& cfg, bool corrupt_c, int shift, bool with_truncated) {
  const Format fmt = resolve_format(cfg.format);
  constexpr double kThreshold = 1e-9;

  BchReport exch = exchange_exponential_identity({1, 2}, 3, shift);
  BchReport exch23 = exchange_exponential_identity({2, 3}, 3, shift);
  if (exch23.max_abs_diff > exch.max_abs_diff) exch = exch23;

  TerminatingBchOptions opts;
  opts.shift_first = shift;
  opts.shift_second = shift;
  opts.conjugate_coupling = corrupt_c;
  const BchReport term = verify_terminating_bch(opts);
  const BchReport fact = verify_factorized_form();

  std::vector<BchReport> gated = {exch, term, fact};
  std::vector<BchReport> informational;
  if (with_truncated) {
    for (int order = 2; order <= 4; ++order) informational.push_back(truncated_bch_report(order));
  }

  bool ok = true;
  std::string failing;
  for (const auto& r : gated) {
    bool pass = r.max_abs_diff < kThreshold;
    if (r.commutator_norm && *r.commutator_norm != 0.0) pass = false;
    if (!pass) {
      ok = false;
      if (failing.empty()) failing = std::string(identity_name(r.identity));
    }
  }

  switch (fmt) {
    case Format::Json: {
      json reports = json::array();
      for (const auto& r : gated) {
        json j = io::to_json(r);
        j["pass"] = r.max_abs_diff < kThreshold;
        reports.push_back(std::move(j));
      }
      json extra = json::array();
      for (const auto& r : informational) extra.push_back(io::to_json(r));
      json j = {{"command", "bch-verify"},
                {"threshold", kThreshold},
                {"shift_2pi", shift},
                {"corrupt_c", corrupt_c},
                {"reports", std::move(reports)},
                {"pass", ok}};
      if (with_truncated) j["truncated"] = std::move(extra);
      emit(cfg, io::dump_json(j));
      break;
    }
    case Format::Csv: {
      std::string out = "identity,max_abs_diff,dims,terms_evaluated,pass\n";
      for (const auto* list : {&gated, &informational}) {
        for (const auto& r : *list) {
          const bool gate = list == &gated;
          out += std::string(identity_name(r.identity)) + ',' +
                 io::format_double(r.max_abs_diff, 17) + ',' + std::to_string(r.dim()) + ',' +
                 std::to_string(r.terms_evaluated) + ',' +
                 (gate ? (r.max_abs_diff < kThreshold ? "true" : "false") : "") + '\n';
        }
      }
      emit(cfg, out);
      break;
    }
    case Format::Text: {
      std::ostringstream os;
      for (const auto& r : gated) {
        os << (r.max_abs_diff < kThreshold ? "PASS " : "FAIL ") << identity_name(r.identity)
           << "  max_abs_diff " << text_num(r.max_abs_diff);
        if (r.commutator_norm) os << "  commutator " << text_num(*r.commutator_norm);
        os << "\n";
      }
      for (const auto& r : informational) {
        os << "INFO " << identity_name(r.identity) << " terms " << r.terms_evaluated
           << "  max_abs_diff " << text_num(r.max_abs_diff) << "\n";
      }
      emit(cfg, os.str());
      break;
    }
  }
  if (!ok) {
    std::cerr << "bch-verify: identity " << failing << " failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

// ----------------------------------------------------------------- leakage

int cmd_leakage(const RunConfig& cfg, const std::string& gen_name,
                const std::vector<double>& epsilons, const std::vector<std::string>& source_text,
                const std::string& pair_text) {
  const Format fmt = resolve_format(cfg.format);
  if (epsilons.empty()) throw UsageError("--eps needs at least one value");
  if (source_text.empty()) throw UsageError("--source needs at least one configuration");
  if (!(cfg.timescale > 0.0)) throw UsageError("--t must be positive");

  std::vector<SpinConfig> sources;
  try {
    for (const auto& s : source_text) sources.push_back(SpinConfig::parse(s));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int n = sources.front().n_spins();
  std::vector<BasisIndex> idx;
  for (const auto& s : sources) {
    if (s.n_spins() != n) throw UsageError("all --source configurations must have equal length");
    idx.push_back(s.index());
  }
  for (double e : epsilons) {
    if (!(std::abs(e) < 1.0)) throw UsageError("--eps values must satisfy |eps| < 1");
  }

  LeakageGenerator gen;
  if (gen_name == "exchange") {
    if (n < 2) throw UsageError("exchange generator needs at least two spins");
    gen = LeakageGenerator::exchange(parse_pair_list(pair_text, n), n);
  } else if (gen_name == "hamiltonian") {
    if (n != 3) throw UsageError("hamiltonian generator acts on three spins");
    gen = LeakageGenerator::hamiltonian(cfg.timescale);
  } else {
    throw UsageError("--gen must be 'exchange' or 'hamiltonian'");
  }

  const LeakageSweep sweep = leakage_sweep(gen, epsilons, idx);
  switch (fmt) {
    case Format::Json: {
      json j = io::to_json(sweep, n);
      j["command"] = "leakage";
      j["generator"] = gen.label();
      j["timescale"] = cfg.timescale;
      emit(cfg, io::dump_json(j));
      break;
    }
    case Format::Csv:
      emit(cfg, io::to_csv(sweep, n));
      break;
    case Format::Text: {
      std::ostringstream os;
      os << "generator " << gen.label() << "\n";
      for (const auto& r : sweep.reports) {
        os << "eps " << text_num(r.epsilon) << "  source " << SpinConfig(n, r.source).to_bits()
           << "  dominant " << SpinConfig(n, r.dominant).to_bits() << "  leakage "
           << text_num(r.leakage) << "\n";
      }
      for (const auto& s : sweep.slopes) {
        os << "slope " << SpinConfig(n, s.source).to_bits() << "  "
           << (s.slope ? text_num(*s.slope) : std::string("n/a")) << "\n";
      }
      emit(cfg, os.str());
      break;
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------ pauli-expand

int cmd_pauli_expand(const RunConfig& cfg, const std::string& exchange, const std::string& chain,
                     bool three_spin, bool zero) {
  const Format fmt = resolve_format(cfg.format);
  const int chosen = int(!exchange.empty()) + int(!chain.empty()) + int(three_spin) + int(zero);
  if (chosen != 1) {
    throw UsageError("choose exactly one of --exchange, --chain, --eq19, --zero");
  }
  if (!(cfg.timescale > 0.0)) throw UsageError("--t must be positive");

  int n = cfg.n_spins;
  PauliSum sum(three_spin ? 3 : std::max(1, n));
  if (three_spin) {
    n = 3;
    sum = dense_to_pauli(closed_form_three_spin_hamiltonian(cfg.timescale).matrix, 3);
  } else {
    validate_common(cfg);
    if (n > kMaxPauliProjectionSites) {
      throw UsageError("pauli-expand supports at most " +
                       std::to_string(kMaxPauliProjectionSites) + " spins");
    }
    if (!exchange.empty()) {
      sum = exchange_as_pauli(parse_pair_list(exchange, n), n);
    } else if (!chain.empty()) {
      sum = dense_to_pauli(exchange_chain(parse_chain(chain, n), n).dense(), n);
    } else {
      sum = PauliSum(n);
    }
  }

  switch (fmt) {
    case Format::Json: {
      json j = io::to_json(sum);
      j["command"] = "pauli-expand";
      emit(cfg, io::dump_json(j));
      break;
    }
    case Format::Csv: {
      std::string out = "string,re,im\n";
      for (const auto& [s, c] : sum.terms()) {
        out += s.str() + ',' + io::format_double(c.real(), 17) + ',' +
               io::format_double(c.imag(), 17) + '\n';
      }
      emit(cfg, out);
      break;
    }
    case Format::Text: {
      std::ostringstream os;
      if (sum.empty()) os << "(empty)\n";
      for (const auto& [s, c] : sum.terms()) {
        os << s.str() << "  " << text_num(c.real()) << "  " << text_num(c.imag()) << "i\n";
      }
      emit(cfg, os.str());
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------- property-check

int cmd_property_check(const RunConfig& cfg, std::uint64_t seed, int trials) {
  const Format fmt = resolve_format(cfg.format);
  if (trials < 1) throw UsageError("--trials must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(2, 4);

  double worst_leakage = 0.0, worst_oracle = 0.0;
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_len(0, 6);
    std::uniform_int_distribution<int> pick_spin(1, n);
    std::vector<SpinPair> chain;
    const int len = pick_len(rng);
    while (static_cast<int>(chain.size()) < len) {
      SpinPair p{pick_spin(rng), pick_spin(rng)};
      if (p.i != p.j) chain.push_back(p);
    }
    const auto p = exchange_chain(chain, n);
    const DenseOperator u = p.dense();
    bool ok = is_ontological(u).ontological;
    for (BasisIndex s = 0; s < p.dim(); ++s) {
      const double l = leakage(u, s).leakage;
      worst_leakage = std::max(worst_leakage, l);
      ok = ok && l < 1e-12 && weight(s) == weight(p.target()[s]);
    }
    const double oracle = max_abs_diff(hamiltonian_from_permutation(p).hamiltonian.matrix,
                                       matrix_log_unitary(u).matrix);
    worst_oracle = std::max(worst_oracle, oracle);
    ok = ok && oracle <= 1e-8;
    failures += ok ? 0 : 1;
  }

  if (fmt == Format::Json) {
    emit(cfg, io::dump_json({{"command", "property-check"},
                             {"seed", seed},
                             {"trials", trials},
                             {"failures", failures},
                             {"max_leakage", worst_leakage},
                             {"max_oracle_diff", worst_oracle},
                             {"pass", failures == 0}}));
  } else if (fmt == Format::Csv) {
    emit(cfg, "seed,trials,failures,max_leakage,max_oracle_diff\n" + std::to_string(seed) + ',' +
                  std::to_string(trials) + ',' + std::to_string(failures) + ',' +
                  io::format_double(worst_leakage, 17) + ',' +
                  io::format_double(worst_oracle, 17) + '\n');
  } else {
    std::ostringstream os;
    os << (failures == 0 ? "PASS" : "FAIL") << " " << trials << " random exchange products (seed "
       << seed << "), failures " << failures << ", max leakage " << text_num(worst_leakage)
       << ", max oracle diff " << text_num(worst_oracle) << "\n";
    emit(cfg, os.str());
  }
  return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation dynamics of Ising spins and their exact Hamiltonians"};
  app.require_subcommand(1);

  RunConfig cfg;
  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, json or csv (default $ONTIC_FORMAT or text)");
    sub->add_option("-o,--output", cfg.output_path, "write to this file instead of stdout");
  };

  std::string chain_text;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of an exchange product");
  spectrum->add_option("--chain", chain_text, "exchange chain, e.g. 12,23 for P12 P23")->required();
  spectrum->add_option("--n", cfg.n_spins, "number of spins")->required();
  spectrum->add_option("--t", cfg.timescale, "time step T");
  add_common(spectrum);

  bool corrupt_c = false, with_truncated = false;
  int shift = 0;
  auto* bch = app.add_subcommand("bch-verify", "check the exchange exponential identities");
  bch->add_flag("--corrupt-c", corrupt_c, "swap c and c* in the exponent (diagnostic)");
  bch->add_option("--shift-2pi", shift, "add this many 2pi to each pi/2 coefficient");
  bch->add_flag("--with-truncated", with_truncated, "also report the truncated series");
  add_common(bch);

  std::string gen_name = "exchange", pair_text = "1,2";
  std::vector<double> epsilons;
  std::vector<std::string> sources;
  auto* leak = app.add_subcommand("leakage", "superposition leakage of perturbed evolution");
  leak->add_option("--gen", gen_name, "exchange or hamiltonian");
  leak->add_option("--eps", epsilons, "perturbations, comma separated")->delimiter(',');
  leak->add_option("--source", sources, "source configurations (010 or arrows)")->delimiter(',');
  leak->add_option("--pair", pair_text, "exchanged spins for the exchange generator");
  leak->add_option("--t", cfg.timescale, "time step T");
  add_common(leak);

  std::string exchange_text, pauli_chain;
  bool three_spin = false, zero = false;
  auto* pauli = app.add_subcommand("pauli-expand", "Pauli-string expansion of an operator");
  pauli->add_option("--exchange", exchange_text, "exchange pair, e.g. 1,2");
  pauli->add_option("--chain", pauli_chain, "exchange chain, e.g. 12,23");
  pauli->add_flag("--eq19,--three-spin-h", three_spin, "closed-form three-spin Hamiltonian");
  pauli->add_flag("--zero", zero, "the zero operator");
  pauli->add_option("--n", cfg.n_spins, "number of spins");
  pauli->add_option("--t", cfg.timescale, "time step T");
  add_common(pauli);

  std::uint64_t seed = 12345;
  int trials = 200;
  auto* prop = app.add_subcommand("property-check", "randomised ontology checks");
  prop->add_option("--seed", seed, "RNG seed");
  prop->add_option("--trials", trials, "number of random exchange products");
  add_common(prop);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(cfg, chain_text);
    if (*bch) return cmd_bch_verify(cfg, corrupt_c, shift, with_truncated);
    if (*leak) return cmd_leakage(cfg, gen_name, epsilons, sources, pair_text);
    if (*pauli) return cmd_pauli_expand(cfg, exchange_text, pauli_chain, three_spin, zero);
    if (*prop) return cmd_property_check(cfg, seed, trials);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
