#include "commands.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "nucleon/approx.hpp"
#include "nucleon/error.hpp"
#include "nucleon/hermite.hpp"
#include "nucleon/io.hpp"
#include "nucleon/mixed_norm.hpp"
#include "nucleon/nuclear.hpp"
#include "nucleon/stft.hpp"

namespace nucleon::cli {

using io::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json complex_pair(const char* prefix, cplx z) {
  return {{std::string(prefix) + "_re", z.real()}, {std::string(prefix) + "_im", z.imag()}};
}

// Options shared by the time-frequency subcommands.
struct TFOptions {
  std::string input;
  std::string window = "gaussian";
  bool normalize_window = false;
  std::string x_range;
  std::string xi_range = "-8:8:161";
  double s = 0.0;
  std::string weight;

  void add(CLI::App* sub) {
    sub->add_option("--input", input, "1-axis function JSON")->required();
    sub->add_option("--window", window, "'gaussian' or a 1-axis function JSON");
    sub->add_flag("--normalize-window", normalize_window, "Rescale a custom window to unit L2 norm");
    sub->add_option("--x", x_range, "Time axis lo:hi:n (default: the input range, 161 points)");
    sub->add_option("--xi", xi_range, "Frequency axis lo:hi:n");
    sub->add_option("--s", s, "Weight (1+|xi|)^s");
    sub->add_option("--weight", weight, "Explicit (x, xi) weight tags, overrides --s");
  }

  GridFunction function() const {
    GridFunction f = io::grid_function_from_json(io::read_json(input));
    require(f.grid.dimension() == 1, "dimension_mismatch", "time-frequency inputs must be 1-axis functions");
    return f;
  }

  Window make_window(const GridFunction& f) const {
    if (window == "gaussian") return Window::gaussian(f.grid.axis(0));
    return Window::custom(io::grid_function_from_json(io::read_json(window)), normalize_window);
  }

  TensorGrid tf_grid(const GridFunction& f) const {
    Axis x = x_range.empty() ? Axis::uniform(f.grid.axis(0).points.front(), f.grid.axis(0).points.back(), 161)
                             : io::parse_range(x_range);
    return TensorGrid({std::move(x), io::parse_range(xi_range)});
  }

  SeparableWeight tf_weight() const {
    if (!weight.empty()) return io::parse_weight(weight, 2);
    return SeparableWeight::frequency_bracket(1, s);
  }
};

void check_exponent(double p, const char* name) {
  require(p >= 1.0 && std::isfinite(p), "exponent_range", std::string(name) + " must lie in [1, inf)");
}

Command norm_command(CLI::App& app) {
  auto* sub = app.add_subcommand("norm", "Weighted mixed norm of a grid or simple function");
  struct Opts {
    std::string input, exponents, weight, output;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--input", o->input, "Function JSON (grid values or boxes)")->required();
  sub->add_option("--exponents", o->exponents, "Comma-separated p_1,...,p_n (axis 0 innermost)")->required();
  sub->add_option("--weight", o->weight, "Separable weight tags, e.g. poly:1|constant:1");
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            const json j = io::read_json(o->input);
            const ExponentTuple P(io::parse_list(o->exponents));
            json out;
            out["exponents"] = P.values();
            if (j.contains("boxes")) {
              const io::WeightedSimple ws = io::simple_function_from_json(j);
              require(P.size() == ws.f.grid.dimension(), "dimension_mismatch", "exponents do not match the grid");
              WeightField w = WeightField::ones(ws.f.grid.size());
              if (ws.weighted) {
                require(o->weight.empty(), "weight_conflict", "boxes carry gammas; --weight is not allowed");
                w = elementary_weight(ws.f.grid, ws.f.boxes, ws.gammas);
              } else if (!o->weight.empty()) {
                w = io::parse_weight(o->weight, P.size()).on(ws.f.grid);
              }
              out["norm"] = mixed_norm(ws.f, P, w);
              if (o->weight.empty() && closed_form_applicable(ws.f.boxes, P)) {
                out["closed_form"] = simple_norm_closed_form(ws.f, P, ws.gammas);
              }
            } else {
              const GridFunction f = io::grid_function_from_json(j);
              require(P.size() == f.grid.dimension(), "dimension_mismatch", "exponents do not match the grid");
              out["norm"] = o->weight.empty() ? mixed_norm(f, P)
                                              : mixed_norm(f, P, io::parse_weight(o->weight, P.size()));
            }
            return dump(out);
          },
          &o->output};
}

Command seq_norm_command(CLI::App& app) {
  auto* sub = app.add_subcommand("seq-norm", "Weighted l^{p,q} norm of lattice coefficients");
  struct Opts {
    std::string input, output;
    double p = 2, q = 2;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--input", o->input, "Lattice JSON")->required();
  sub->add_option("--p", o->p, "Exponent over k");
  sub->add_option("--q", o->q, "Exponent over l");
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            check_exponent(o->p, "p");
            check_exponent(o->q, "q");
            const LatticeCoefficients a = io::lattice_from_json(io::read_json(o->input));
            return dump({{"norm", seq_mixed_norm(a, o->p, o->q)}, {"p", o->p}, {"q", o->q}});
          },
          &o->output};
}

Command stft_command(CLI::App& app) {
  auto* sub = app.add_subcommand("stft", "Short-time Fourier transform on a (x, xi) grid");
  struct Opts {
    TFOptions tf;
    std::string format = "json", output;
  };
  auto o = std::make_shared<Opts>();
  o->tf.add(sub);
  sub->add_option("--format", o->format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            const GridFunction f = o->tf.function();
            const TFGridFunction v = stft(f, o->tf.make_window(f), o->tf.tf_grid(f));
            if (o->format == "json") return dump(io::to_json(v));
            io::CsvWriter csv({"x", "xi", "re", "im"});
            for (std::size_t ix = 0; ix < v.x_axis().size(); ++ix) {
              for (std::size_t ixi = 0; ixi < v.xi_axis().size(); ++ixi) {
                const cplx z = v.at(ix, ixi);
                csv.row({io::csv_field(v.x_axis().points[ix]), io::csv_field(v.xi_axis().points[ixi]),
                         io::csv_field(z.real()), io::csv_field(z.imag())});
              }
            }
            return csv.str();
          },
          &o->output};
}

Command mod_norm_command(CLI::App& app) {
  auto* sub = app.add_subcommand("mod-norm", "Modulation-space norm ||V_g f * w||_{L^{p,q}}");
  struct Opts {
    TFOptions tf;
    double p = 2, q = 2;
    std::string output;
  };
  auto o = std::make_shared<Opts>();
  o->tf.add(sub);
  sub->add_option("--p", o->p, "Exponent over x");
  sub->add_option("--q", o->q, "Exponent over xi");
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            check_exponent(o->p, "p");
            check_exponent(o->q, "q");
            const GridFunction f = o->tf.function();
            const double n =
                modulation_norm(f, o->tf.make_window(f), o->p, o->q, o->tf.tf_weight(), o->tf.tf_grid(f));
            return dump({{"norm", n}, {"p", o->p}, {"q", o->q}, {"weight", o->tf.tf_weight().tag()}});
          },
          &o->output};
}

Command wiener_norm_command(CLI::App& app) {
  auto* sub = app.add_subcommand("wiener-norm", "Wiener amalgam norm through the Fourier side");
  struct Opts {
    TFOptions tf;
    double p = 2, q = 2;
    std::string freq, output;
  };
  auto o = std::make_shared<Opts>();
  o->tf.add(sub);
  sub->add_option("--p", o->p, "Exponent p");
  sub->add_option("--q", o->q, "Exponent q");
  sub->add_option("--freq", o->freq, "Sampling of the transform lo:hi:n (default: the input axis)");
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            check_exponent(o->p, "p");
            check_exponent(o->q, "q");
            const GridFunction f = o->tf.function();
            const Axis freq = o->freq.empty() ? f.grid.axis(0) : io::parse_range(o->freq);
            const double n = wiener_amalgam_norm(f, o->tf.make_window(f), o->p, o->q, o->tf.tf_weight(), freq,
                                                 o->tf.tf_grid(f));
            return dump({{"norm", n}, {"p", o->p}, {"q", o->q}, {"weight", o->tf.tf_weight().tag()}});
          },
          &o->output};
}

struct LatticeOptions {
  double alpha = 1.0, beta = 1.0;
  int K = 24, L = 24;

  void add(CLI::App* sub) {
    sub->add_option("--alpha", alpha, "Time lattice step");
    sub->add_option("--beta", beta, "Frequency lattice step");
    sub->add_option("--K", K, "Time index bound |k| <= K");
    sub->add_option("--L", L, "Frequency index bound |l| <= L");
  }
};

Command gabor_command(CLI::App& app) {
  auto* sub = app.add_subcommand("gabor", "Gabor coefficients on alpha Z x beta Z");
  struct Opts {
    TFOptions tf;
    LatticeOptions lat;
    std::string format = "json", output;
  };
  auto o = std::make_shared<Opts>();
  o->tf.add(sub);
  o->lat.add(sub);
  sub->add_option("--format", o->format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            const GridFunction f = o->tf.function();
            const LatticeCoefficients a = gabor_coeffs(f, o->tf.make_window(f), o->lat.alpha, o->lat.beta,
                                                       o->lat.K, o->lat.L, o->tf.tf_weight());
            if (o->format == "json") return dump(io::to_json(a));
            io::CsvWriter csv({"k", "l", "x", "xi", "re", "im", "weight"});
            for (int l = -a.l_bound; l <= a.l_bound; ++l) {
              for (int k = -a.k_bound; k <= a.k_bound; ++k) {
                const cplx z = a.at(k, l);
                csv.row({std::to_string(k), std::to_string(l), io::csv_field(a.alpha * k),
                         io::csv_field(a.beta * l), io::csv_field(z.real()), io::csv_field(z.imag()),
                         io::csv_field(a.weights[a.index(k, l)])});
              }
            }
            return csv.str();
          },
          &o->output};
}

Command equivalence_command(CLI::App& app) {
  auto* sub = app.add_subcommand("equivalence", "Lattice-to-continuous norm ratios and their bracket");
  struct Opts {
    TFOptions tf;
    LatticeOptions lat;
    double p = 2, q = 2;
    std::string dilations = "0.5,1,2,4";
    std::string y_range = "-40:40:1601";
    std::string format = "json", output;
  };
  auto o = std::make_shared<Opts>();
  o->tf.x_range = "-30:30:301";
  o->tf.xi_range = "-16:16:161";
  o->lat.K = 30;
  o->lat.L = 16;
  sub->add_option("--input", o->tf.input, "1-axis function JSON; omit to use dilated Gaussians");
  sub->add_option("--dilations", o->dilations, "Dilations t of e^{-t y^2/2} when --input is omitted");
  sub->add_option("--y", o->y_range, "Sampling grid lo:hi:n for the dilated Gaussians");
  sub->add_option("--window", o->tf.window, "'gaussian' or a 1-axis function JSON");
  sub->add_option("--x", o->tf.x_range, "Time axis lo:hi:n");
  sub->add_option("--xi", o->tf.xi_range, "Frequency axis lo:hi:n");
  sub->add_option("--s", o->tf.s, "Weight (1+|xi|)^s");
  sub->add_option("--p", o->p, "Exponent p");
  sub->add_option("--q", o->q, "Exponent q");
  o->lat.add(sub);
  sub->add_option("--format", o->format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            check_exponent(o->p, "p");
            check_exponent(o->q, "q");
            std::vector<std::pair<double, GridFunction>> family;
            if (!o->tf.input.empty()) {
              family.emplace_back(1.0, o->tf.function());
            } else {
              const TensorGrid grid({io::parse_range(o->y_range)});
              for (double t : io::parse_list(o->dilations)) {
                require(t > 0.0 && std::isfinite(t), "dilation_range", "dilations must be > 0");
                std::vector<cplx> v(grid.size());
                for (std::size_t i = 0; i < v.size(); ++i) {
                  const double y = grid.axis(0).points[i];
                  v[i] = std::exp(-t * y * y / 2.0);
                }
                family.emplace_back(t, GridFunction(grid, std::move(v)));
              }
            }
            std::vector<double> ratios;
            for (const auto& [t, f] : family) {
              ratios.push_back(equivalence_ratio(f, o->tf.make_window(f), o->p, o->q, o->tf.tf_weight(),
                                                 o->lat.alpha, o->lat.beta, o->lat.K, o->lat.L,
                                                 o->tf.tf_grid(f)));
            }
            const double lo = *std::min_element(ratios.begin(), ratios.end());
            const double hi = *std::max_element(ratios.begin(), ratios.end());
            if (o->format == "csv") {
              io::CsvWriter csv({"t", "ratio"});
              for (std::size_t i = 0; i < ratios.size(); ++i) {
                csv.row({io::csv_field(family[i].first), io::csv_field(ratios[i])});
              }
              return csv.str();
            }
            json rows = json::array();
            for (std::size_t i = 0; i < ratios.size(); ++i) rows.push_back({{"t", family[i].first}, {"ratio", ratios[i]}});
            return dump({{"rows", rows}, {"lower", lo}, {"upper", hi}, {"spread", hi / lo}});
          },
          &o->output};
}

Command approx_command(CLI::App& app) {
  auto* sub = app.add_subcommand("approx", "Finite-rank operator of a partition and its contraction certificate");
  struct Opts {
    std::string partition, exponents, output;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    double background = 1.0;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--partition", o->partition, "Partition JSON")->required();
  sub->add_option("--exponents", o->exponents, "Comma-separated p_1,...,p_n")->required();
  sub->add_option("--trials", o->trials, "Random trials");
  sub->add_option("--seed", o->seed, "64-bit seed")->required();
  sub->add_option("--background", o->background, "Weight outside the partition boxes");
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            const PartitionSpec part = io::partition_from_json(io::read_json(o->partition));
            const FiniteRankOperator op = build_factors(part, ExponentTuple(io::parse_list(o->exponents)));
            require(o->background > 0.0 && std::isfinite(o->background), "nonpositive_weight",
                    "background weight must be > 0");
            const ContractionReport r =
                contraction_certificate(op, part, part.weight_field(o->background), o->trials, o->seed);
            return dump({{"max_ratio", r.max_ratio},
                         {"argmax_trial", r.argmax_trial},
                         {"argmax_input_digest", r.argmax_digest},
                         {"projection_residual", r.projection_residual},
                         {"trials", r.trials},
                         {"skipped", r.skipped},
                         {"rank", op.factors.size()},
                         {"seed", o->seed}});
          },
          &o->output};
}

struct RepOptions {
  std::string rep, grid;

  void add(CLI::App* sub) {
    sub->add_option("--rep", rep, "Factored representation JSON")->required();
    sub->add_option("--grid", grid, "Grid JSON; must equal the representation grid");
  }

  NuclearRep load() const {
    NuclearRep r = io::rep_from_json(io::read_json(rep));
    if (!grid.empty()) {
      require(io::grid_from_json(io::read_json(grid)) == r.grid, "grid_mismatch",
              "--grid differs from the representation grid");
    }
    return r;
  }
};

Command nuclear_trace_command(CLI::App& app) {
  auto* sub = app.add_subcommand("nuclear-trace", "Trace, eigenvalue sum, nuclear bound and Schatten quasi-norm");
  struct Opts {
    RepOptions rep;
    std::optional<double> r;
    bool symmetric = false;
    std::string output;
  };
  auto o = std::make_shared<Opts>();
  o->rep.add(sub);
  sub->add_option("--r", o->r, "Quasi-norm index in (0, 1] (default: the representation's r)");
  sub->add_flag("--symmetric", o->symmetric, "Symmetric Nystrom matrix sqrt(mu) k sqrt(mu)");
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            const NuclearRep rep = o->rep.load();
            const double r = o->r.value_or(rep.r);
            require(r > 0.0 && r <= 1.0, "r_range", "r must lie in (0, 1]");
            const TraceReport t = trace_from_rep(rep);
            const DiscretizedOperator op = discretize(rep, o->symmetric || rep.self_adjoint);
            const Spectrum s = spectrum(op);
            const double gap = std::abs(t.trace - s.sum);
            json out = {{"rel_error", std::abs(t.trace) > 0 ? gap / std::abs(t.trace) : gap},
                        {"nuclear_bound", nuclear_bound(rep, r)},
                        {"schatten_r", schatten_quasinorm(op, r)},
                        {"r", r}};
            out.update(complex_pair("trace", t.trace));
            out.update(complex_pair("eigensum", s.sum));
            out.update(complex_pair("kernel_diagonal", t.kernel_diagonal));
            return dump(out);
          },
          &o->output};
}

Command lidskii_command(CLI::App& app) {
  auto* sub = app.add_subcommand("lidskii", "Representation trace against the discretized eigenvalue sum");
  struct Opts {
    RepOptions rep;
    std::string method = "auto", output;
  };
  auto o = std::make_shared<Opts>();
  o->rep.add(sub);
  sub->add_option("--method", o->method, "auto, dense or compressed")
      ->check(CLI::IsMember({"auto", "dense", "compressed"}));
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            const SpectrumMethod m = o->method == "dense"        ? SpectrumMethod::dense
                                     : o->method == "compressed" ? SpectrumMethod::compressed
                                                                 : SpectrumMethod::automatic;
            const LidskiiReport r = lidskii_check(o->rep.load(), m);
            json out = {{"rel_error", r.rel_error},
                        {"r", r.r},
                        {"grothendieck_hypothesis", r.grothendieck_hypothesis},
                        {"method", r.method},
                        {"eigenvalue_count", r.eigenvalue_count}};
            out.update(complex_pair("trace", r.trace));
            out.update(complex_pair("eigensum", r.eigensum));
            return dump(out);
          },
          &o->output};
}

Command schatten_command(CLI::App& app) {
  auto* sub = app.add_subcommand("schatten", "Schatten quasi-norms of the discretized operator");
  struct Opts {
    RepOptions rep;
    std::string r = "1";
    std::string output;
  };
  auto o = std::make_shared<Opts>();
  o->rep.add(sub);
  sub->add_option("--r", o->r, "Comma-separated r values in (0, 1]");
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            const NuclearRep rep = o->rep.load();
            const DiscretizedOperator op = discretize(rep, true);
            json rows = json::array();
            for (double r : io::parse_list(o->r)) {
              rows.push_back({{"r", r}, {"schatten_r", schatten_quasinorm(op, r)}, {"nuclear_bound", nuclear_bound(rep, r)}});
            }
            return dump({{"rows", rows}});
          },
          &o->output};
}

Command hosc_trace_command(CLI::App& app) {
  auto* sub = app.add_subcommand("hosc-trace", "Trace of F(-Laplace + |x|^2) with a tail bound");
  struct Opts {
    std::string F, rep_out, output;
    std::size_t d = 1;
    int K = 40;
    double step = 0.02;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--F", o->F, "exp:t | power:-N | table:path.csv")->required();
  sub->add_option("--d", o->d, "Dimension");
  sub->add_option("--K", o->K, "Indices k_i < K on every axis");
  sub->add_option("--rep-out", o->rep_out, "Also write the sampled representation JSON here");
  sub->add_option("--step", o->step, "Sampling step for --rep-out");
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            const SpectralFunction F = io::parse_spectral(o->F);
            const TraceEstimate t = trace_F(F, o->d, o->K);
            json out = {{"value", t.value}, {"tail_bound", t.tail_bound}, {"terms", t.terms},
                        {"F", F.tag()},     {"d", o->d},                  {"K", o->K}};
            if (!o->rep_out.empty()) {
              const HermiteSystem sys(o->d, o->K, o->step);
              const NuclearRep rep = spectral_rep(F, sys, sys.size());
              out["rep_trace"] = trace_from_rep(rep).trace.real();
              io::write_atomic(o->rep_out, io::to_json(rep).dump() + "\n");
            }
            return dump(out);
          },
          &o->output};
}

Command hosc_nuclearity_command(CLI::App& app) {
  auto* sub = app.add_subcommand("hosc-nuclearity", "Partial sums of the nuclearity series on modulation spaces");
  struct Opts {
    std::string F, format = "csv", output;
    double r = 1, s = 0, p = 2, q = 2, step = 0.02, tf_step = 0.125;
    int K = 30;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--F", o->F, "exp:t | power:-N | table:path.csv")->required();
  sub->add_option("--r", o->r, "r in (0, 1]");
  sub->add_option("--s", o->s, "Weight (1+|xi|)^s");
  sub->add_option("--p", o->p, "Exponent over x");
  sub->add_option("--q", o->q, "Exponent over xi");
  sub->add_option("--K", o->K, "Number of eigenfunctions");
  sub->add_option("--step", o->step, "Sampling step of the eigenfunctions");
  sub->add_option("--tf-step", o->tf_step, "Step of the (x, xi) grid");
  sub->add_option("--format", o->format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("-o,--output", o->output, "Output path");
  return {sub, [o] {
            const SpectralFunction F = io::parse_spectral(o->F);
            require(o->tf_step > 0.0, "step_range", "--tf-step must be > 0");
            const HermiteSystem sys(1, o->K, o->step);
            const double L = sys.grid().axis(0).points.back();
            const auto n = static_cast<std::size_t>(std::llround(2.0 * L / o->tf_step)) + 1;
            const TensorGrid tf({Axis::uniform(-L, L, n), Axis::uniform(-L, L, n)});
            const NuclearityReport rep = nuclearity_criterion(F, o->r, o->s, o->p, o->q, sys,
                                                              Window::gaussian(sys.grid().axis(0)), sys.size(), tf);
            if (o->format == "json") {
              json rows = json::array();
              for (const NuclearityRow& row : rep.rows) {
                rows.push_back({{"j", row.j}, {"lambda", row.lambda}, {"norm", row.norm},
                                {"dual_norm", row.dual_norm}, {"term", row.term}, {"partial_sum", row.partial_sum}});
              }
              return dump({{"rows", rows},
                           {"monotone", rep.monotone},
                           {"flatness", std::isnan(rep.flatness) ? json() : json(rep.flatness)}});
            }
            io::CsvWriter csv({"j", "lambda", "norm", "dual_norm", "term", "partial_sum"});
            for (const NuclearityRow& row : rep.rows) {
              csv.row({std::to_string(row.j), io::csv_field(row.lambda), io::csv_field(row.norm),
                       io::csv_field(row.dual_norm), io::csv_field(row.term), io::csv_field(row.partial_sum)});
            }
            return csv.str();
          },
          &o->output};
}

} // namespace

void register_commands(CLI::App& app, std::vector<Command>& commands) {
  commands.push_back(norm_command(app));
  commands.push_back(seq_norm_command(app));
  commands.push_back(stft_command(app));
  commands.push_back(mod_norm_command(app));
  commands.push_back(wiener_norm_command(app));
  commands.push_back(gabor_command(app));
  commands.push_back(equivalence_command(app));
  commands.push_back(approx_command(app));
  commands.push_back(nuclear_trace_command(app));
  commands.push_back(lidskii_command(app));
  commands.push_back(schatten_command(app));
  commands.push_back(hosc_trace_command(app));
  commands.push_back(hosc_nuclearity_command(app));
}

} // namespace nucleon::cli
