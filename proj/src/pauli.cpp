#include "ontic/pauli.hpp"

#include <bit>
#include <stdexcept>

#include "ontic/kernels.hpp"

namespace ontic {

namespace {

char letter_char(PauliLetter l) { return "IXYZ"[static_cast<int>(l)]; }

kernels::MaskedTerm to_masked(const PauliString& s, Complex coef) {
  return {s.x_mask(), s.z_mask(), s.y_count(), coef};
}

PauliString from_code(std::size_t code, int n_sites) {
  std::vector<PauliLetter> letters(static_cast<std::size_t>(n_sites));
  for (int k = n_sites; k >= 1; --k) {
    letters[static_cast<std::size_t>(k - 1)] = static_cast<PauliLetter>(code & 3u);
    code >>= 2;
  }
  return PauliString(std::move(letters));
}

}  // namespace

PauliString::PauliString(int n_sites) {
  validate_spin_count(n_sites);
  letters_.assign(static_cast<std::size_t>(n_sites), PauliLetter::I);
}

PauliString::PauliString(std::vector<PauliLetter> letters) : letters_(std::move(letters)) {
  validate_spin_count(n_sites());
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<PauliLetter> letters;
  for (char ch : text) {
    switch (ch) {
      case 'I': letters.push_back(PauliLetter::I); break;
      case 'X': letters.push_back(PauliLetter::X); break;
      case 'Y': letters.push_back(PauliLetter::Y); break;
      case 'Z': letters.push_back(PauliLetter::Z); break;
      default:
        throw std::invalid_argument("bad Pauli letter '" + std::string(1, ch) + "' in '" +
                                    std::string(text) + "'");
    }
  }
  return PauliString(std::move(letters));
}

PauliLetter PauliString::at(int site) const {
  if (site < 1 || site > n_sites()) throw std::invalid_argument("Pauli site out of range");
  return letters_[static_cast<std::size_t>(site - 1)];
}

PauliString PauliString::with(int site, PauliLetter letter) const {
  if (site < 1 || site > n_sites()) throw std::invalid_argument("Pauli site out of range");
  PauliString out = *this;
  out.letters_[static_cast<std::size_t>(site - 1)] = letter;
  return out;
}

int PauliString::support_size() const {
  int count = 0;
  for (auto l : letters_) count += l != PauliLetter::I;
  return count;
}

BasisIndex PauliString::x_mask() const {
  BasisIndex mask = 0;
  const int n = n_sites();
  for (int k = 1; k <= n; ++k) {
    const auto l = letters_[static_cast<std::size_t>(k - 1)];
    if (l == PauliLetter::X || l == PauliLetter::Y) mask |= BasisIndex{1} << (n - k);
  }
  return mask;
}

BasisIndex PauliString::z_mask() const {
  BasisIndex mask = 0;
  const int n = n_sites();
  for (int k = 1; k <= n; ++k) {
    const auto l = letters_[static_cast<std::size_t>(k - 1)];
    if (l == PauliLetter::Z || l == PauliLetter::Y) mask |= BasisIndex{1} << (n - k);
  }
  return mask;
}

int PauliString::y_count() const {
  int count = 0;
  for (auto l : letters_) count += l == PauliLetter::Y;
  return count;
}

std::string PauliString::str() const {
  std::string out;
  for (auto l : letters_) out += letter_char(l);
  return out;
}

DenseOperator PauliString::dense() const {
  return kernels::serial::pauli_accumulate({to_masked(*this, 1.0)}, n_sites());
}

void PauliSum::add(const PauliString& s, Complex coef) {
  if (s.n_sites() != n_) throw std::invalid_argument("PauliSum: site count mismatch");
  auto [it, inserted] = terms_.try_emplace(s, coef);
  if (!inserted) it->second += coef;
  if (std::abs(it->second) < kPruneTolerance) terms_.erase(it);
}

Complex PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_) throw std::invalid_argument("PauliSum: site count mismatch");
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    if (std::abs(it->second) < kPruneTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

DenseOperator PauliSum::dense() const { return pauli_to_dense(*this); }

PauliSum exchange_as_pauli(SpinPair pair, int n_sites) {
  validate_spin_count(n_sites);
  pair.validate(n_sites);
  PauliSum out(n_sites);
  const PauliString id(n_sites);
  out.add(id, 0.5);
  for (auto l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
    out.add(id.with(pair.i, l).with(pair.j, l), 0.5);
  }
  return out;
}

DenseOperator pauli_to_dense(const PauliSum& s) {
  std::vector<kernels::MaskedTerm> terms;
  terms.reserve(s.terms().size());
  for (const auto& [str, c] : s.terms()) terms.push_back(to_masked(str, c));
  return kernels::parallel::pauli_accumulate(terms, s.n_sites());
}

PauliSum dense_to_pauli(const DenseOperator& m, int n_sites) {
  validate_spin_count(n_sites);
  if (n_sites > kMaxPauliProjectionSites) {
    throw std::invalid_argument("dense_to_pauli: at most " +
                                std::to_string(kMaxPauliProjectionSites) + " sites");
  }
  const auto dim = static_cast<Eigen::Index>(basis_dim(n_sites));
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument("dense_to_pauli: matrix is not 2^n x 2^n");
  }
  const std::vector<Complex> coefs = kernels::parallel::pauli_projection(m, n_sites);
  PauliSum out(n_sites);
  for (std::size_t code = 0; code < coefs.size(); ++code) {
    if (std::abs(coefs[code]) >= PauliSum::kPruneTolerance) {
      out.add(from_code(code, n_sites), coefs[code]);
    }
  }
  return out;
}

PauliSum dense_to_pauli(const DenseOperator& m) {
  const auto dim = static_cast<std::size_t>(m.rows());
  if (m.rows() != m.cols() || dim < 2 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("dense_to_pauli: dimension is not a power of two");
  }
  return dense_to_pauli(m, std::countr_zero(dim));
}

}  // namespace ontic
