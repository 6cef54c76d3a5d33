#pragma once

// Ising-spin configurations and their Hamming-weight sectors.
//
// Spins carry 1-based labels. Spin k is stored at bit position n-k of the
// basis index, so spin 1 is the most significant bit and the canonical
// basis order is lexicographic in (s_1, ..., s_n). Bit 0 is spin up.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#ifndef ONTIC_MAX_SPINS
#define ONTIC_MAX_SPINS 14
#endif

namespace ontic {

inline constexpr int kMaxSpins = ONTIC_MAX_SPINS;
static_assert(kMaxSpins >= 1 && kMaxSpins <= 30);

using BasisIndex = std::size_t;

enum class Spin : std::uint8_t { Up = 0, Down = 1 };

/// Unordered pair of distinct 1-based spin labels; P_ij == P_ji.
struct SpinPair {
  int i = 1;
  int j = 2;

  /// Throws std::invalid_argument unless 1 <= i, j <= n and i != j.
  void validate(int n_spins) const;

  friend bool operator==(const SpinPair&, const SpinPair&) = default;
};

/// Throws std::invalid_argument unless 1 <= n <= kMaxSpins.
void validate_spin_count(int n_spins);

/// Dimension 2^n of the configuration space.
std::size_t basis_dim(int n_spins);

class SpinConfig {
 public:
  SpinConfig(int n_spins, BasisIndex index);

  static SpinConfig from_spins(const std::vector<Spin>& spins);

  /// Accepts arrow strings ("↑↓↑") or bit strings ("010").
  static SpinConfig parse(std::string_view text);

  int n_spins() const { return n_; }
  BasisIndex index() const { return index_; }

  /// 1-based spin label.
  Spin spin(int k) const;

  std::string to_arrows() const;
  std::string to_bits() const;

  friend bool operator==(const SpinConfig&, const SpinConfig&) = default;

 private:
  int n_;
  BasisIndex index_;
};

/// Swap spins i and j (1-based).
SpinConfig apply_exchange(const SpinConfig& config, SpinPair pair);

/// Number of down spins.
int weight(const SpinConfig& config);

/// Down-spin count of a raw basis index.
int weight(BasisIndex index);

/// Basis indices of the kets |1>..|8> in the three-spin display order
/// ↑↑↑, ↑↑↓, ↑↓↑, ↓↑↑, ↓↓↑, ↓↑↓, ↑↓↓, ↓↓↓. Only n = 3 is accepted.
std::array<BasisIndex, 8> paper_ordering(int n_spins);

struct Sector {
  int weight = 0;
  std::vector<BasisIndex> members;
};

struct SectorDecomposition {
  int n_spins = 0;
  std::vector<Sector> sectors;  // ascending weight, 0..n
};

/// Partition of the basis by down-spin count. Members are listed in the
/// three-spin display order for n = 3 and ascending otherwise.
SectorDecomposition sector_decomposition(int n_spins);

}  // namespace ontic
