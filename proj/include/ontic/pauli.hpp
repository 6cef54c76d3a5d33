#pragma once

// Pauli strings and sums in qubit language. Site 1 is the leftmost
// Kronecker factor, matching the spin-1-most-significant basis order; the
// single-site basis is (psi_+, psi_-) = (up, down).

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ontic/bitspace.hpp"
#include "ontic/dense.hpp"

namespace ontic {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

class PauliString {
 public:
  /// Identity string on `n_sites`.
  explicit PauliString(int n_sites);
  explicit PauliString(std::vector<PauliLetter> letters);

  /// "XIZ" style, one letter per site.
  static PauliString parse(std::string_view text);

  int n_sites() const { return static_cast<int>(letters_.size()); }
  const std::vector<PauliLetter>& letters() const { return letters_; }
  PauliLetter at(int site) const;  // 1-based
  PauliString with(int site, PauliLetter letter) const;

  /// Number of non-identity letters.
  int support_size() const;

  /// Bit masks over basis indices: X or Y sites flip, Y or Z sites sign.
  BasisIndex x_mask() const;
  BasisIndex z_mask() const;
  int y_count() const;

  std::string str() const;
  DenseOperator dense() const;

  auto operator<=>(const PauliString&) const = default;
  bool operator==(const PauliString&) const = default;

 private:
  std::vector<PauliLetter> letters_;
};

class PauliSum {
 public:
  explicit PauliSum(int n_sites) : n_(n_sites) {}

  int n_sites() const { return n_; }
  const std::map<PauliString, Complex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Adds `coef` to the coefficient of `s`, pruning it if it falls below
  /// kPruneTolerance in magnitude.
  void add(const PauliString& s, Complex coef);
  Complex coefficient(const PauliString& s) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  DenseOperator dense() const;

  static constexpr double kPruneTolerance = 1e-14;

 private:
  int n_;
  std::map<PauliString, Complex> terms_;
};

/// P_ij = (1 + X_i X_j + Y_i Y_j + Z_i Z_j) / 2.
PauliSum exchange_as_pauli(SpinPair pair, int n_sites);

DenseOperator pauli_to_dense(const PauliSum& s);

inline constexpr int kMaxPauliProjectionSites = 8;

/// Coefficient of string S is tr(S m) / 2^n, over all 4^n strings.
/// Throws if m is not 2^n x 2^n or n exceeds kMaxPauliProjectionSites.
PauliSum dense_to_pauli(const DenseOperator& m, int n_sites);

/// Same as dense_to_pauli, inferring n from the dimension; throws if the
/// dimension is not a power of two.
PauliSum dense_to_pauli(const DenseOperator& m);

}  // namespace ontic
