#pragma once

// Data-parallel inner loops. Every kernel has a serial reference with the
// same arithmetic order per output element, so both produce bit-identical
// results; tests compare them and bench/ times them.

#include <cstddef>
#include <vector>

#include "ontic/bitspace.hpp"
#include "ontic/dense.hpp"

namespace ontic::kernels {

/// One Pauli string in mask form: entry S[r, r ^ x_mask] equals
/// (-i)^y_count * (-1)^popcount(r & z_mask).
struct MaskedTerm {
  BasisIndex x_mask = 0;
  BasisIndex z_mask = 0;
  int y_count = 0;
  Complex coefficient{0.0, 0.0};
};

/// Decodes a base-4 string code (site 1 most significant digit,
/// I=0 X=1 Y=2 Z=3) into masks, coefficient 1.
MaskedTerm decode_string(std::size_t code, int n_sites);

namespace serial {

/// tr(S m) / 2^n for every string code 0..4^n-1.
std::vector<Complex> pauli_projection(const DenseOperator& m, int n_sites);

/// sum_t coef_t S_t as a dense 2^n matrix.
DenseOperator pauli_accumulate(const std::vector<MaskedTerm>& terms, int n_sites);

}  // namespace serial

namespace parallel {

std::vector<Complex> pauli_projection(const DenseOperator& m, int n_sites);
DenseOperator pauli_accumulate(const std::vector<MaskedTerm>& terms, int n_sites);

}  // namespace parallel

/// Threads OpenMP would use, 1 when built without OpenMP.
int max_threads();

}  // namespace ontic::kernels
