#include "ontic/bitspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ontic {

namespace {

constexpr std::string_view kUpArrow = "\xE2\x86\x91";    // ↑
constexpr std::string_view kDownArrow = "\xE2\x86\x93";  // ↓

BasisIndex bit_of(int n_spins, int k) {
  return BasisIndex{1} << static_cast<unsigned>(n_spins - k);
}

}  // namespace

void SpinPair::validate(int n_spins) const {
  if (i < 1 || i > n_spins || j < 1 || j > n_spins) {
    throw std::invalid_argument("spin label out of range 1.." + std::to_string(n_spins) +
                                ": (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (i == j) {
    throw std::invalid_argument("exchange needs two distinct spins, got i = j = " +
                                std::to_string(i));
  }
}

void validate_spin_count(int n_spins) {
  if (n_spins < 1 || n_spins > kMaxSpins) {
    throw std::invalid_argument("spin count must be in 1.." + std::to_string(kMaxSpins) +
                                ", got " + std::to_string(n_spins));
  }
}

std::size_t basis_dim(int n_spins) {
  validate_spin_count(n_spins);
  return std::size_t{1} << static_cast<unsigned>(n_spins);
}

SpinConfig::SpinConfig(int n_spins, BasisIndex index) : n_(n_spins), index_(index) {
  if (index >= basis_dim(n_spins)) {
    throw std::invalid_argument("basis index " + std::to_string(index) +
                                " out of range for " + std::to_string(n_spins) + " spins");
  }
}

SpinConfig SpinConfig::from_spins(const std::vector<Spin>& spins) {
  const int n = static_cast<int>(spins.size());
  validate_spin_count(n);
  BasisIndex idx = 0;
  for (int k = 1; k <= n; ++k) {
    if (spins[static_cast<std::size_t>(k - 1)] == Spin::Down) idx |= bit_of(n, k);
  }
  return SpinConfig(n, idx);
}

SpinConfig SpinConfig::parse(std::string_view text) {
  std::vector<Spin> spins;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::string_view rest = text.substr(pos);
    if (rest.front() == '0') {
      spins.push_back(Spin::Up);
      pos += 1;
    } else if (rest.front() == '1') {
      spins.push_back(Spin::Down);
      pos += 1;
    } else if (rest.starts_with(kUpArrow)) {
      spins.push_back(Spin::Up);
      pos += kUpArrow.size();
    } else if (rest.starts_with(kDownArrow)) {
      spins.push_back(Spin::Down);
      pos += kDownArrow.size();
    } else {
      throw std::invalid_argument("cannot parse spin configuration '" + std::string(text) +
                                  "': expected 0/1 or arrows");
    }
  }
  if (spins.empty()) throw std::invalid_argument("empty spin configuration");
  return from_spins(spins);
}

Spin SpinConfig::spin(int k) const {
  if (k < 1 || k > n_) throw std::invalid_argument("spin label out of range");
  return (index_ & bit_of(n_, k)) ? Spin::Down : Spin::Up;
}

std::string SpinConfig::to_arrows() const {
  std::string out;
  for (int k = 1; k <= n_; ++k) out += spin(k) == Spin::Up ? kUpArrow : kDownArrow;
  return out;
}

std::string SpinConfig::to_bits() const {
  std::string out;
  for (int k = 1; k <= n_; ++k) out += spin(k) == Spin::Up ? '0' : '1';
  return out;
}

SpinConfig apply_exchange(const SpinConfig& config, SpinPair pair) {
  const int n = config.n_spins();
  pair.validate(n);
  const BasisIndex bi = bit_of(n, pair.i);
  const BasisIndex bj = bit_of(n, pair.j);
  BasisIndex idx = config.index();
  const bool si = idx & bi;
  const bool sj = idx & bj;
  if (si != sj) idx ^= (bi | bj);
  return SpinConfig(n, idx);
}

int weight(const SpinConfig& config) { return weight(config.index()); }

int weight(BasisIndex index) { return std::popcount(index); }

std::array<BasisIndex, 8> paper_ordering(int n_spins) {
  if (n_spins != 3) {
    throw std::invalid_argument("the display ordering exists only for three spins");
  }
  // ↑↑↑ ↑↑↓ ↑↓↑ ↓↑↑ ↓↓↑ ↓↑↓ ↑↓↓ ↓↓↓
  return {0b000, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111};
}

SectorDecomposition sector_decomposition(int n_spins) {
  const std::size_t dim = basis_dim(n_spins);
  SectorDecomposition out;
  out.n_spins = n_spins;
  out.sectors.resize(static_cast<std::size_t>(n_spins) + 1);
  for (int w = 0; w <= n_spins; ++w) out.sectors[static_cast<std::size_t>(w)].weight = w;

  if (n_spins == 3) {
    for (BasisIndex idx : paper_ordering(3)) {
      out.sectors[static_cast<std::size_t>(weight(idx))].members.push_back(idx);
    }
  } else {
    for (BasisIndex idx = 0; idx < dim; ++idx) {
      out.sectors[static_cast<std::size_t>(weight(idx))].members.push_back(idx);
    }
  }
  return out;
}

}  // namespace ontic
