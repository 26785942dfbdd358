#include "nucleon/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "nucleon/error.hpp"

namespace nucleon::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ValidationError("malformed_json", what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed(std::string(what) + " must be a count");
  return j.get<std::size_t>();
}

std::vector<double> numbers(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const json& e : j) out.push_back(number(e, what));
  return out;
}

cplx complex_value(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  malformed("complex values must be numbers or [re, im] pairs");
}

Interval interval(const json& j) {
  if (!j.is_array() || j.size() != 2) malformed("intervals must be [lo, hi] pairs");
  return {count(j[0], "interval bound"), count(j[1], "interval bound")};
}

Axis axis_from_json(const json& j) {
  if (!j.is_object()) malformed("axis must be an object");
  if (j.contains("points")) {
    return Axis{numbers(j.at("points"), "points"), numbers(field(j, "measures"), "measures")};
  }
  if (j.contains("uniform")) {
    const json& u = j.at("uniform");
    if (!u.is_array() || u.size() != 3) malformed("uniform axis needs [lo, hi, n]");
    return Axis::uniform(number(u[0], "lo"), number(u[1], "hi"), count(u[2], "n"));
  }
  if (j.contains("equispaced")) {
    const json& u = j.at("equispaced");
    if (!u.is_array() || u.size() != 3) malformed("equispaced axis needs [lo, step, n]");
    return Axis::equispaced(number(u[0], "lo"), number(u[1], "step"), count(u[2], "n"));
  }
  if (j.contains("cells")) {
    const double origin = j.contains("origin") ? number(j.at("origin"), "origin") : 0.0;
    return Axis::cells(numbers(j.at("cells"), "cells"), origin);
  }
  malformed("axis needs points, uniform, equispaced or cells");
}

ExponentTuple exponents_from_json(const json& j, std::size_t n) {
  if (j.is_null()) return ExponentTuple::uniform(n, 2.0);
  return ExponentTuple(numbers(j, "exponents"));
}

SeparableWeight weight_from_json(const json& j, std::size_t n) {
  if (j.is_null()) return SeparableWeight::constant(n);
  if (!j.is_string()) malformed("weights are given as tag strings");
  return parse_weight(j.get<std::string>(), n);
}

double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
    fail_validation("malformed_number", std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

} // namespace

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_validation("file_not_found", "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json read_json(const fs::path& path) {
  const std::string text = read_text(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) malformed("cannot parse JSON in " + path.string());
  return j;
}

void write_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail_validation("output_unwritable", "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) fail_validation("output_unwritable", "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail_validation("output_unwritable", "cannot move output into " + path.string());
  }
}

TensorGrid grid_from_json(const json& j) {
  const json& axes = field(j, "axes");
  if (!axes.is_array() || axes.empty()) malformed("axes must be a non-empty array");
  std::vector<Axis> out;
  for (const json& a : axes) out.push_back(axis_from_json(a));
  return TensorGrid(std::move(out));
}

json to_json(const TensorGrid& grid) {
  json axes = json::array();
  for (const Axis& a : grid.axes()) axes.push_back({{"points", a.points}, {"measures", a.measures}});
  return {{"axes", axes}};
}

std::vector<cplx> values_from_json(const json& j) {
  if (!j.is_array()) malformed("values must be an array");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(complex_value(e));
  return out;
}

json values_to_json(const std::vector<cplx>& values) {
  json out = json::array();
  for (const cplx& z : values) out.push_back({z.real(), z.imag()});
  return out;
}

GridFunction grid_function_from_json(const json& j) {
  return GridFunction(grid_from_json(field(j, "grid")), values_from_json(field(j, "values")));
}

json to_json(const GridFunction& f) { return {{"grid", to_json(f.grid)}, {"values", values_to_json(f.values)}}; }

WeightedSimple simple_function_from_json(const json& j) {
  TensorGrid grid = grid_from_json(field(j, "grid"));
  const json& boxes = field(j, "boxes");
  if (!boxes.is_array()) malformed("boxes must be an array");
  std::vector<Box> out_boxes;
  std::vector<cplx> coeffs;
  WeightedSimple ws;
  for (const json& b : boxes) {
    Box box;
    const json& iv = field(b, "intervals");
    if (!iv.is_array()) malformed("box intervals must be an array");
    for (const json& e : iv) box.intervals.push_back(interval(e));
    out_boxes.push_back(std::move(box));
    coeffs.push_back(complex_value(field(b, "coeff")));
    if (b.contains("gamma")) {
      ws.weighted = true;
      ws.gammas.push_back(number(b.at("gamma"), "gamma"));
    } else {
      ws.gammas.push_back(1.0);
    }
  }
  ws.f = SimpleFunction(std::move(grid), std::move(out_boxes), std::move(coeffs));
  return ws;
}

PartitionSpec partition_from_json(const json& j) {
  TensorGrid grid = grid_from_json(field(j, "grid"));
  const json& lists = field(j, "intervals");
  if (!lists.is_array()) malformed("intervals must be an array of per-axis lists");
  std::vector<std::vector<Interval>> axis_intervals;
  for (const json& list : lists) {
    if (!list.is_array()) malformed("per-axis interval list must be an array");
    std::vector<Interval> ivs;
    for (const json& e : list) ivs.push_back(interval(e));
    axis_intervals.push_back(std::move(ivs));
  }
  std::vector<std::vector<std::size_t>> cells;
  if (j.contains("cells")) {
    for (const json& c : j.at("cells")) {
      if (!c.is_array()) malformed("cells must be index arrays");
      std::vector<std::size_t> k;
      for (const json& e : c) k.push_back(count(e, "cell index"));
      cells.push_back(std::move(k));
    }
  }
  std::vector<double> gammas;
  if (j.contains("gammas")) gammas = numbers(j.at("gammas"), "gammas");
  return PartitionSpec(std::move(grid), std::move(axis_intervals), std::move(cells), std::move(gammas));
}

NuclearRep rep_from_json(const json& j) {
  TensorGrid grid = grid_from_json(field(j, "grid"));
  const std::size_t n = grid.dimension();
  const json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be an array");
  std::vector<std::pair<GridFunction, GridFunction>> pairs;
  for (const json& t : terms) {
    pairs.emplace_back(GridFunction(grid, values_from_json(field(t, "g"))),
                       GridFunction(grid, values_from_json(field(t, "h"))));
  }
  const double r = j.contains("r") ? number(j.at("r"), "r") : 1.0;
  const bool sa = j.contains("self_adjoint") && j.at("self_adjoint").is_boolean() && j.at("self_adjoint").get<bool>();
  auto opt = [&](const char* key) { return j.contains(key) ? j.at(key) : json(); };
  return NuclearRep(grid, std::move(pairs), exponents_from_json(opt("out_exponents"), n),
                    weight_from_json(opt("out_weight"), n), exponents_from_json(opt("in_exponents"), n),
                    weight_from_json(opt("in_weight"), n), r, sa);
}

json to_json(const NuclearRep& rep) {
  json terms = json::array();
  for (const auto& [g, h] : rep.terms) terms.push_back({{"g", values_to_json(g.values)}, {"h", values_to_json(h.values)}});
  return {{"grid", to_json(rep.grid)},
          {"r", rep.r},
          {"self_adjoint", rep.self_adjoint},
          {"out_exponents", rep.out_exponents.values()},
          {"out_weight", rep.out_weight.tag()},
          {"in_exponents", rep.in_exponents.values()},
          {"in_weight", rep.in_weight.tag()},
          {"terms", terms}};
}

LatticeCoefficients lattice_from_json(const json& j) {
  const json& kb = field(j, "k_bound");
  const json& lb = field(j, "l_bound");
  if (!kb.is_number_integer() || !lb.is_number_integer()) malformed("lattice bounds must be integers");
  std::vector<double> weights;
  if (j.contains("weights")) weights = numbers(j.at("weights"), "weights");
  return LatticeCoefficients(number(field(j, "alpha"), "alpha"), number(field(j, "beta"), "beta"),
                             kb.get<int>(), lb.get<int>(), values_from_json(field(j, "coeffs")),
                             std::move(weights), j.value("weight_tag", std::string("constant:1")));
}

json to_json(const LatticeCoefficients& a) {
  return {{"alpha", a.alpha},     {"beta", a.beta},       {"k_bound", a.k_bound},
          {"l_bound", a.l_bound}, {"coeffs", values_to_json(a.coeffs)},
          {"weights", a.weights}, {"weight_tag", a.weight_tag}};
}

json to_json(const TFGridFunction& v) {
  const std::size_t nx = v.x_axis().size();
  const std::size_t nxi = v.xi_axis().size();
  json values = json::array();
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t ixi = 0; ixi < nxi; ++ixi) {
      const cplx z = v.at(ix, ixi);
      values.push_back({z.real(), z.imag()});
    }
  }
  return {{"x", v.x_axis().points}, {"xi", v.xi_axis().points}, {"values", values}};
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_double(trim(part), "list entry"));
  return out;
}

Axis parse_range(std::string_view text) {
  const auto parts = split(text, ':');
  require(parts.size() == 3, "malformed_range", "ranges are written lo:hi:n");
  const double lo = parse_double(parts[0], "range start");
  const double hi = parse_double(parts[1], "range end");
  const double n = parse_double(parts[2], "range count");
  require(n >= 2 && n == std::floor(n) && hi > lo, "malformed_range", "ranges need hi > lo and n >= 2");
  return Axis::uniform(lo, hi, static_cast<std::size_t>(n));
}

SeparableWeight parse_weight(std::string_view text, std::size_t n) {
  std::vector<WeightFactor> factors;
  for (std::string_view tag : split(text, '|')) {
    const auto kv = split(tag, ':');
    require(kv.size() == 2, "malformed_weight", "weight tags are kind:value");
    const double v = parse_double(kv[1], "weight parameter");
    if (kv[0] == "constant") {
      require(v > 0.0, "nonpositive_weight", "constant weight must be > 0");
      factors.push_back({WeightFactor::Kind::constant, v, {}});
    } else if (kv[0] == "poly" || kv[0] == "polynomial") {
      factors.push_back({WeightFactor::Kind::polynomial, v, {}});
    } else if (kv[0] == "bracket") {
      factors.push_back({WeightFactor::Kind::bracket, v, {}});
    } else {
      fail_validation("malformed_weight", "unknown weight kind '" + std::string(kv[0]) + "'");
    }
  }
  if (factors.size() == 1 && n > 1) factors.assign(n, factors[0]);
  require(factors.size() == n, "dimension_mismatch", "weight has the wrong number of factors");
  return SeparableWeight(std::move(factors));
}

SpectralFunction parse_spectral(std::string_view text) {
  const std::size_t colon = text.find(':');
  require(colon != std::string_view::npos, "malformed_spectral", "F is written exp:t, power:-N or table:path");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  if (kind == "exp") return SpectralFunction::exp(parse_double(arg, "exp rate"));
  if (kind == "power") {
    const double v = parse_double(arg, "power order");
    require(v < 0 && v == std::floor(v), "spectral_param", "power order must be a negative integer");
    return SpectralFunction::power(static_cast<int>(-v));
  }
  if (kind == "table") {
    const std::string text_csv = read_text(std::string(arg));
    std::vector<std::pair<double, double>> entries;
    std::istringstream in(text_csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (header) {
        header = false;
        continue;
      }
      if (trim(line).empty()) continue;
      const auto cells = split(line, ',');
      require(cells.size() == 2, "malformed_table", "table rows are lambda,F");
      entries.emplace_back(parse_double(trim(cells[0]), "lambda"), parse_double(trim(cells[1]), "F"));
    }
    return SpectralFunction::table(std::move(entries));
  }
  fail_validation("malformed_spectral", "unknown spectral function '" + std::string(kind) + "'");
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(double x) { return format_double(x); }

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  require(columns_ > 0, "csv_header", "CSV header is mandatory");
  emit(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  require(cells.size() == columns_, "csv_shape", "CSV row width differs from the header");
  emit(cells);
}

void CsvWriter::emit(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\r\n") != std::string::npos) {
      out_ += '"';
      for (char ch : c) {
        if (ch == '"') out_ += '"';
        out_ += ch;
      }
      out_ += '"';
    } else {
      out_ += c;
    }
  }
  out_ += "\r\n";
}

} // namespace nucleon::io
