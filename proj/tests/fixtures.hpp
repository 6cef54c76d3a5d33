#pragma once

// Values frozen from tests/oracles/fixtures.py (numpy/scipy, independent of
// this library). Regenerate with: python3 tests/oracles/fixtures.py

#include <array>
#include <string_view>

namespace ontic::fixtures {

struct PauliCoefficient {
  std::string_view string;
  double re;
  double im;
};

// Exhaustive trace projection of the three-spin Hamiltonian, T = 1.
inline constexpr std::array<PauliCoefficient, 16> kThreeSpinPauli = {{
    {"III", 1.5707963267948966, 0},
    {"IXX", -0.52359877559829882, 0},
    {"IYY", -0.52359877559829882, 0},
    {"IZZ", -0.52359877559829882, 0},
    {"XIX", -0.52359877559829882, 0},
    {"XXI", -0.52359877559829882, 0},
    {"XYZ", -0.30229989403903634, 0},
    {"XZY", 0.30229989403903634, 0},
    {"YIY", -0.52359877559829882, 0},
    {"YXZ", 0.30229989403903634, 0},
    {"YYI", -0.52359877559829882, 0},
    {"YZX", -0.30229989403903634, 0},
    {"ZIZ", -0.52359877559829882, 0},
    {"ZXY", -0.30229989403903634, 0},
    {"ZYX", 0.30229989403903634, 0},
    {"ZZI", -0.52359877559829882, 0},
}};

// Perturbed three-spin evolution exp(-i H (1+eps) T), T = 1, source |↑↓↑>.
inline constexpr double kHamiltonianLeakageEps1em2 = 0.00029240065587798902;
inline constexpr double kHamiltonianLeakageEps1em1 = 0.028924297975509217;
inline constexpr std::size_t kHamiltonianLeakageDominant = 1;  // |↑↑↓>

// max_norm(i^2 exp(Z_k) - P12 P23) for the series truncated at order k.
inline constexpr std::array<double, 4> kTruncatedBchGap = {
    0.94280904158206336,  // order 1
    0.94021791904845253,  // order 2
    0.71441857993565339,  // order 3
    0.24236159080713876,  // order 4
};

// Eigenphases / 2pi of P12 P23 P34 on four spins.
inline constexpr std::array<double, 16> kChain4Phases = {
    0, 0, 0, 0, 0, 0, 0.25, 0.25, 0.25, 0.5, 0.5, 0.5, 0.5, 0.75, 0.75, 0.75};

}  // namespace ontic::fixtures
