#include "nucleon/approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "nucleon/error.hpp"
#include "nucleon/mixed_norm.hpp"
#include "nucleon/simd/kernels.hpp"

namespace nucleon {

PartitionSpec::PartitionSpec(TensorGrid grid, std::vector<std::vector<Interval>> axis_intervals,
                             std::vector<std::vector<std::size_t>> cells, std::vector<double> gammas)
    : grid_(std::move(grid)), axis_intervals_(std::move(axis_intervals)), cells_(std::move(cells)),
      gammas_(std::move(gammas)) {
  const std::size_t n = grid_.dimension();
  require(axis_intervals_.size() == n, "dimension_mismatch",
          "partition needs one interval list per grid axis");
  for (std::size_t j = 0; j < n; ++j) {
    auto& list = axis_intervals_[j];
    for (std::size_t a = 0; a < list.size(); ++a) {
      require(list[a].hi <= grid_.axis(j).size(), "box_out_of_range",
              "partition interval exceeds axis " + std::to_string(j));
      require(list[a].lo < list[a].hi, "degenerate_box", "partition intervals must be non-empty");
      for (std::size_t b = 0; b < a; ++b) {
        require(!list[a].overlaps(list[b]), "overlapping_boxes",
                "partition intervals overlap on axis " + std::to_string(j));
      }
    }
  }
  if (cells_.empty()) {
    std::size_t total = 1;
    for (const auto& list : axis_intervals_) total *= list.size();
    for (std::size_t c = 0; c < total; ++c) {
      std::vector<std::size_t> k(n);
      std::size_t rest = c;
      for (std::size_t j = 0; j < n; ++j) {
        k[j] = rest % axis_intervals_[j].size();
        rest /= axis_intervals_[j].size();
      }
      cells_.push_back(std::move(k));
    }
  }
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    require(cells_[c].size() == n, "dimension_mismatch", "cell index has the wrong dimension");
    for (std::size_t j = 0; j < n; ++j) {
      require(cells_[c][j] < axis_intervals_[j].size(), "box_out_of_range",
              "cell index exceeds the interval list on axis " + std::to_string(j));
    }
    for (std::size_t d = 0; d < c; ++d) {
      require(cells_[c] != cells_[d], "overlapping_boxes", "partition cell selected twice");
    }
  }
  weighted_ = !gammas_.empty();
  if (!weighted_) gammas_.assign(cells_.size(), 1.0);
  require(gammas_.size() == cells_.size(), "partition_misaligned",
          "partition needs one gamma per selected cell");
  for (double g : gammas_) {
    require(g > 0.0 && std::isfinite(g), "nonpositive_weight", "elementary weights must be > 0");
  }
}

std::vector<Box> PartitionSpec::boxes() const {
  std::vector<Box> out;
  out.reserve(cells_.size());
  for (const auto& k : cells_) {
    Box b;
    for (std::size_t j = 0; j < k.size(); ++j) b.intervals.push_back(axis_intervals_[j][k[j]]);
    out.push_back(std::move(b));
  }
  return out;
}

WeightField PartitionSpec::weight_field(double background) const {
  const std::vector<Box> b = boxes();
  return elementary_weight(grid_, b, gammas_, background);
}

SimpleFunction RankOneFactorPair::u(const TensorGrid& grid) const {
  return SimpleFunction(grid, {box}, {cplx(u_value)});
}

SimpleFunction RankOneFactorPair::v(const TensorGrid& grid) const {
  return SimpleFunction(grid, {box}, {cplx(v_value)});
}

FiniteRankOperator build_factors(const PartitionSpec& partition, const ExponentTuple& exponents) {
  const TensorGrid& grid = partition.grid();
  require(exponents.size() == grid.dimension(), "dimension_mismatch",
          "exponent tuple does not match the partition dimension");
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    require(!exponents.is_infinite(j), "infinite_exponent", "operator exponents must be finite");
  }
  const ExponentTuple conj = exponents.dual();
  FiniteRankOperator op{grid, exponents, {}};
  const std::vector<Box> boxes = partition.boxes();
  for (std::size_t c = 0; c < boxes.size(); ++c) {
    RankOneFactorPair pair;
    pair.index = partition.cells()[c];
    pair.box = boxes[c];
    // 1/p' = 0 contributes the factor mu^0 = 1; no infinity is evaluated.
    double u_norm = 1.0;
    double v_norm = 1.0;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      const double mu = pair.box.axis_measure(grid, j);
      require(mu > 0.0, "degenerate_box", "partition box has zero measure");
      u_norm *= std::pow(mu, conj.reciprocal(j));
      v_norm *= std::pow(mu, exponents.reciprocal(j));
    }
    const double gamma = partition.gammas()[c];
    pair.u_value = gamma / u_norm;
    pair.v_value = 1.0 / (gamma * v_norm);
    pair.cells = box_cells(grid, pair.box);
    op.factors.push_back(std::move(pair));
  }
  return op;
}

namespace {

cplx pair_with_u(const RankOneFactorPair& pair, const GridFunction& f) {
  const auto& m = f.grid.cell_measures();
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i : pair.cells) {
    re += f.values[i].real() * m[i];
    im += f.values[i].imag() * m[i];
  }
  return cplx(re, im) * pair.u_value;
}

cplx pair_with_v(const RankOneFactorPair& pair, const GridFunction& g) {
  return pair_with_u(RankOneFactorPair{{}, {}, pair.v_value, 0.0, pair.cells}, g);
}

double overlap_measure(const TensorGrid& grid, const Box& a, const Box& b) {
  double m = 1.0;
  for (std::size_t j = 0; j < grid.dimension(); ++j) {
    const std::size_t lo = std::max(a.intervals[j].lo, b.intervals[j].lo);
    const std::size_t hi = std::min(a.intervals[j].hi, b.intervals[j].hi);
    if (lo >= hi) return 0.0;
    double axis = 0.0;
    for (std::size_t k = lo; k < hi; ++k) axis += grid.axis(j).measures[k];
    m *= axis;
  }
  return m;
}

double ell_norm(const std::vector<cplx>& a, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& z : a) m = std::max(m, std::abs(z));
    return m;
  }
  std::vector<double> mag(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mag[i] = std::abs(a[i]);
  const std::vector<double> ones(a.size(), 1.0);
  const double s = simd::active_kernels().power_sum(mag.data(), ones.data(), mag.size(), p);
  return std::pow(s, 1.0 / p);
}

} // namespace

GridFunction apply_L(const FiniteRankOperator& op, const GridFunction& f) {
  require(f.grid == op.grid, "dimension_mismatch", "operator and function live on different grids");
  std::vector<cplx> out(f.size());
  for (const RankOneFactorPair& pair : op.factors) {
    const cplx c = pair_with_u(pair, f) * pair.v_value;
    for (std::size_t i : pair.cells) out[i] += c;
  }
  return GridFunction(op.grid, std::move(out));
}

SimpleFunction apply_L(const FiniteRankOperator& op, const SimpleFunction& f) {
  require(f.grid == op.grid, "dimension_mismatch", "operator and function live on different grids");
  std::vector<Box> boxes;
  std::vector<cplx> coeffs;
  for (const RankOneFactorPair& pair : op.factors) {
    cplx integral{};
    for (std::size_t b = 0; b < f.boxes.size(); ++b) {
      integral += f.coeffs[b] * overlap_measure(op.grid, pair.box, f.boxes[b]);
    }
    const cplx c = integral * pair.u_value * pair.v_value;
    if (c != cplx{}) {
      boxes.push_back(pair.box);
      coeffs.push_back(c);
    }
  }
  return SimpleFunction(op.grid, std::move(boxes), std::move(coeffs));
}

std::pair<double, double> ell_pn_row_norms(const FiniteRankOperator& op, const GridFunction& f,
                                           const GridFunction& g) {
  require(f.grid == op.grid && g.grid == op.grid, "dimension_mismatch",
          "operator and functions live on different grids");
  std::vector<cplx> a;
  std::vector<cplx> b;
  for (const RankOneFactorPair& pair : op.factors) {
    a.push_back(pair_with_u(pair, f));
    b.push_back(pair_with_v(pair, g));
  }
  const double pn = op.exponents[op.exponents.size() - 1];
  return {ell_norm(a, pn), ell_norm(b, conjugate_exponent(pn))};
}

std::vector<Interval> random_dyadic_intervals(std::size_t n, SplitMix64& rng) {
  std::vector<Interval> out;
  std::vector<Interval> stack{{0, n}};
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();
    const std::size_t len = iv.hi - iv.lo;
    if (len >= 2 && rng.uniform() < 0.6) {
      const std::size_t mid = iv.lo + len / 2;
      stack.push_back({mid, iv.hi});
      stack.push_back({iv.lo, mid});
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

GridFunction random_grid_function(const TensorGrid& grid, SplitMix64& rng) {
  std::vector<cplx> v(grid.size());
  for (cplx& z : v) z = rng.complex_normal();
  return GridFunction(grid, std::move(v));
}

SimpleFunction random_simple_function(const TensorGrid& grid, SplitMix64& rng) {
  std::vector<std::vector<Interval>> lists;
  for (std::size_t j = 0; j < grid.dimension(); ++j) {
    lists.push_back(random_dyadic_intervals(grid.axis(j).size(), rng));
  }
  std::vector<Box> boxes;
  std::vector<cplx> coeffs;
  std::vector<std::size_t> k(grid.dimension(), 0);
  while (true) {
    if (rng.uniform() < 0.7) {
      Box b;
      for (std::size_t j = 0; j < k.size(); ++j) b.intervals.push_back(lists[j][k[j]]);
      boxes.push_back(std::move(b));
      coeffs.push_back(rng.complex_normal());
    }
    std::size_t j = 0;
    for (; j < k.size(); ++j) {
      if (++k[j] < lists[j].size()) break;
      k[j] = 0;
    }
    if (j == k.size()) break;
  }
  return SimpleFunction(grid, std::move(boxes), std::move(coeffs));
}

SimpleFunction random_subordinate(const PartitionSpec& partition, SplitMix64& rng) {
  std::vector<Box> boxes = partition.boxes();
  std::vector<cplx> coeffs(boxes.size());
  for (cplx& c : coeffs) c = rng.complex_normal();
  return SimpleFunction(partition.grid(), std::move(boxes), std::move(coeffs));
}

std::string fnv1a_digest(std::span<const cplx> values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const cplx& z : values) {
    for (double part : {z.real(), z.imag()}) {
      unsigned char bytes[sizeof(double)];
      std::memcpy(bytes, &part, sizeof(double));
      for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
      }
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ContractionReport contraction_certificate(const FiniteRankOperator& op, const PartitionSpec& partition,
                                          const WeightField& weight, std::size_t trials,
                                          std::uint64_t seed) {
  require(trials >= 1, "trials_range", "at least one trial is required");
  require(partition.grid() == op.grid, "dimension_mismatch", "partition and operator grids differ");
  require(weight.size() == op.grid.size(), "dimension_mismatch", "weight does not match the grid");
  SplitMix64 rng(seed);
  ContractionReport report;
  report.trials = trials;

  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 local = rng.fork();
    GridFunction f;
    switch (t % 3) {
    case 0:
      f = random_grid_function(op.grid, local);
      break;
    case 1:
      f = random_simple_function(op.grid, local).to_grid();
      break;
    default: {
      f = GridFunction::zeros(op.grid);
      const std::size_t spikes = 1 + local.below(4);
      for (std::size_t s = 0; s < spikes; ++s) {
        f.values[local.below(f.size())] = local.complex_normal() * std::exp(3.0 * local.normal());
      }
      break;
    }
    }
    const double denom = mixed_norm(f, op.exponents, weight);
    if (!(denom > 0.0)) {
      ++report.skipped;
      continue;
    }
    const double ratio = mixed_norm(apply_L(op, f), op.exponents, weight) / denom;
    if (ratio > report.max_ratio || report.argmax_digest.empty()) {
      report.max_ratio = ratio;
      report.argmax_trial = t;
      report.argmax_digest = fnv1a_digest(f.values);
    }
  }

  const std::size_t projections = std::min<std::size_t>(trials, 32);
  for (std::size_t t = 0; t < projections && !op.factors.empty(); ++t) {
    SplitMix64 local = rng.fork();
    const GridFunction f0 = random_subordinate(partition, local).to_grid();
    const double norm = mixed_norm(f0, op.exponents, weight);
    if (!(norm > 0.0)) continue;
    GridFunction diff = apply_L(op, f0);
    for (std::size_t i = 0; i < diff.size(); ++i) diff.values[i] -= f0.values[i];
    report.projection_residual =
        std::max(report.projection_residual, mixed_norm(diff, op.exponents, weight) / norm);
  }
  return report;
}

} // namespace nucleon
