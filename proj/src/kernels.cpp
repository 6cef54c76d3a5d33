#include "ontic/kernels.hpp"

#include <bit>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ontic::kernels {

namespace {

Complex y_phase(int y_count) {
  switch (y_count & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

Complex project_one(const DenseOperator& m, const MaskedTerm& s, std::size_t dim) {
  Complex acc{0.0, 0.0};
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t c = r ^ s.x_mask;
    const Complex v = m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r));
    acc += (std::popcount(r & s.z_mask) & 1) ? -v : v;
  }
  return acc * y_phase(s.y_count) / static_cast<double>(dim);
}

void accumulate_row(DenseOperator& out, const std::vector<MaskedTerm>& terms, std::size_t r) {
  for (const MaskedTerm& t : terms) {
    const Complex sign = (std::popcount(r & t.z_mask) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r ^ t.x_mask)) +=
        t.coefficient * y_phase(t.y_count) * sign;
  }
}

}  // namespace

MaskedTerm decode_string(std::size_t code, int n_sites) {
  MaskedTerm t;
  for (int k = n_sites; k >= 1; --k) {
    const auto letter = code & 3u;
    code >>= 2;
    const BasisIndex bit = BasisIndex{1} << static_cast<unsigned>(n_sites - k);
    if (letter == 1 || letter == 2) t.x_mask |= bit;
    if (letter == 2 || letter == 3) t.z_mask |= bit;
    if (letter == 2) ++t.y_count;
  }
  t.coefficient = 1.0;
  return t;
}

namespace serial {

std::vector<Complex> pauli_projection(const DenseOperator& m, int n_sites) {
  const std::size_t dim = std::size_t{1} << static_cast<unsigned>(n_sites);
  const std::size_t count = dim * dim;
  std::vector<Complex> out(count);
  for (std::size_t code = 0; code < count; ++code) {
    out[code] = project_one(m, decode_string(code, n_sites), dim);
  }
  return out;
}

DenseOperator pauli_accumulate(const std::vector<MaskedTerm>& terms, int n_sites) {
  const std::size_t dim = std::size_t{1} << static_cast<unsigned>(n_sites);
  DenseOperator out = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                          static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) accumulate_row(out, terms, r);
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<Complex> pauli_projection(const DenseOperator& m, int n_sites) {
  const std::size_t dim = std::size_t{1} << static_cast<unsigned>(n_sites);
  const auto count = static_cast<std::int64_t>(dim * dim);
  std::vector<Complex> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t code = 0; code < count; ++code) {
    const auto c = static_cast<std::size_t>(code);
    out[c] = project_one(m, decode_string(c, n_sites), dim);
  }
  return out;
}

DenseOperator pauli_accumulate(const std::vector<MaskedTerm>& terms, int n_sites) {
  const std::size_t dim = std::size_t{1} << static_cast<unsigned>(n_sites);
  DenseOperator out = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                          static_cast<Eigen::Index>(dim));
  const auto rows = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < rows; ++r) accumulate_row(out, terms, static_cast<std::size_t>(r));
  return out;
}

}  // namespace parallel

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ontic::kernels
