#pragma once

// JSON and CSV encodings of the library's value types.
//
// JSON is built with nlohmann::json but written by dump_json, which prints
// every floating-point number with 17 significant digits so identical
// inputs give byte-identical output. CSV output has a header row and LF
// line endings.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ontic/bch.hpp"
#include "ontic/dense.hpp"
#include "ontic/ontology.hpp"
#include "ontic/pauli.hpp"
#include "ontic/permops.hpp"
#include "ontic/spectral.hpp"

namespace ontic::io {

using nlohmann::json;

/// %.{digits}g formatting; "nan"/"inf" are written as JSON null by dump_json.
std::string format_double(double value, int digits);

std::string dump_json(const json& value, int indent = 2);

json to_json(const GeneralizedPermutation& p);
GeneralizedPermutation permutation_from_json(const json& j);

/// {"rows", "cols", "data": [[re, im], ...]} in row-major order.
json to_json(const DenseOperator& m);
DenseOperator dense_from_json(const json& j);

/// Header "row,col,re,im", one line per entry in row-major order.
std::string to_csv(const DenseOperator& m);

/// {"n_sites", "terms": [{"string", "re", "im"}, ...]}, strings ascending.
json to_json(const PauliSum& s);
PauliSum pauli_sum_from_json(const json& j);

json to_json(const BchReport& r);

/// {"eigenvalues", "multiplicities": [{"energy", "count"}], "cycle_type"}.
json spectral_json(const std::vector<double>& eigenvalues, const CycleData& cycles);

/// Rows "eigenvalue,multiplicity".
std::string spectral_csv(const std::vector<double>& eigenvalues);

json to_json(const LeakageReport& r, int n_spins);
json to_json(const LeakageSweep& sweep, int n_spins);

/// Header "epsilon,source,dominant,dominant_prob,leakage,slope".
std::string to_csv(const LeakageSweep& sweep, int n_spins);

}  // namespace ontic::io
