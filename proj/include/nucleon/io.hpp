#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "nucleon/approx.hpp"
#include "nucleon/exponents.hpp"
#include "nucleon/grid.hpp"
#include "nucleon/hermite.hpp"
#include "nucleon/lattice.hpp"
#include "nucleon/nuclear.hpp"
#include "nucleon/simple_function.hpp"
#include "nucleon/stft.hpp"
#include "nucleon/weight.hpp"

namespace nucleon::io {

using json = nlohmann::json;

// JSON layouts
//
//   grid      {"axes": [axis, ...]} with axis one of
//             {"points": [...], "measures": [...]}, {"uniform": [lo, hi, n]},
//             {"equispaced": [lo, step, n]}, {"cells": [w, ...], "origin": x0}
//   values    array of numbers or [re, im] pairs, grid flat order (axis 0 fastest)
//   function  {"grid": grid, "values": values}
//   simple    {"grid": grid, "boxes": [{"intervals": [[lo, hi], ...], "coeff": c, "gamma": g}]}
//   partition {"grid": grid, "intervals": [[[lo, hi], ...] per axis], "cells": [[k...]], "gammas": [...]}
//   rep       {"grid": grid, "r": r, "self_adjoint": b, "in_exponents": [...],
//              "out_exponents": [...], "in_weight": tag, "out_weight": tag,
//              "terms": [{"g": values, "h": values}]}
//   lattice   {"alpha", "beta", "k_bound", "l_bound", "coeffs": values, "weights": [...]}
//
// Every reader throws ValidationError("malformed_json") on a missing or
// mistyped field.

json read_json(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames over the target.
void write_atomic(const std::filesystem::path& path, std::string_view content);

TensorGrid grid_from_json(const json& j);
json to_json(const TensorGrid& grid);

std::vector<cplx> values_from_json(const json& j);
json values_to_json(const std::vector<cplx>& values);

GridFunction grid_function_from_json(const json& j);
json to_json(const GridFunction& f);

struct WeightedSimple {
  SimpleFunction f;
  std::vector<double> gammas; // one per box; all 1 when no box carries "gamma"
  bool weighted = false;
};
WeightedSimple simple_function_from_json(const json& j);

PartitionSpec partition_from_json(const json& j);

NuclearRep rep_from_json(const json& j);
json to_json(const NuclearRep& rep);

LatticeCoefficients lattice_from_json(const json& j);
json to_json(const LatticeCoefficients& a);

/// {"x": [...], "xi": [...], "values": [[re, im], ...]}, x outermost.
json to_json(const TFGridFunction& v);

// Flag grammars

/// "1,2,3" -> {1, 2, 3}; "inf" is accepted where noted by the caller.
std::vector<double> parse_list(std::string_view text);
/// "lo:hi:n" -> uniform trapezoid axis.
Axis parse_range(std::string_view text);
/// Factor tags joined by "|": constant:v, poly:s, bracket:s. One tag is
/// repeated over all n axes.
SeparableWeight parse_weight(std::string_view text, std::size_t n);
/// exp:t | power:-N | table:path.csv (header row, then lambda,F rows).
SpectralFunction parse_spectral(std::string_view text);

/// printf %.17g.
std::string format_double(double x);

/// RFC 4180 writer; the header is mandatory and fixes the column count.
class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

private:
  void emit(const std::vector<std::string>& cells);
  std::size_t columns_;
  std::string out_;
};

std::string csv_field(double x);

} // namespace nucleon::io
