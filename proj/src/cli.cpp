#include "choquet/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "choquet/asymptotic.hpp"
#include "choquet/capacity.hpp"
#include "choquet/capacity_json.hpp"
#include "choquet/errors.hpp"
#include "choquet/exponential_distribution.hpp"
#include "choquet/law.hpp"
#include "choquet/moments.hpp"
#include "choquet/monte_carlo.hpp"
#include "choquet/order_statistics.hpp"
#include "choquet/uniform_distribution.hpp"
#include "json.hpp"

namespace choquet {

namespace {

using nlohmann::json;

std::string fmt12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Rounds to 12 significant digits so that JSON output carries no more.
double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(fmt12(x).c_str(), nullptr);
}

double parse_number(std::string_view text, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ValidationError(std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

struct Options {
  std::string law = "uniform";
  std::string capacity;
  std::string grid;
  std::string out;
  int dj_order = 2;
  double a = 2.0;
  std::size_t n = 0;
  std::uint64_t seed = 42;
  unsigned threads = 0;
};

// Writes to --out when given, else to stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct Context {
  Options opt;
  std::size_t n_max = kDefaultMaxAttributes;
  std::ostream& out;
  std::ostream& err;

  SetFunction game() const { return read_game_file(opt.capacity, n_max); }
  Law law() const { return parse_law(opt.law); }
  DjOrder dj() const { return parse_dj_order(opt.dj_order); }
};

void print_json(std::ostream& os, const json& doc) { os << doc.dump(2) << '\n'; }

json pair_json(const std::pair<Mask, Mask>& pair) {
  return json::array({subset_key(pair.first), subset_key(pair.second)});
}

int cmd_validate(Context& ctx) {
  const SetFunction g = ctx.game();
  const CapacityCheck check = check_capacity(g);
  json doc{{"n", g.size()},
           {"is_monotone", check.is_monotone},
           {"is_normalized", check.is_normalized},
           {"is_capacity", check.is_capacity()},
           {"is_symmetric", is_symmetric(g, 1e-12)}};
  doc["violating_pair"] = check.violating_pair ? pair_json(*check.violating_pair) : json(nullptr);
  if (check.is_capacity() && g.size() >= 2) doc["orness"] = round12(orness(g));
  print_json(*Sink(ctx.opt.out, ctx.out), doc);
  if (check.violating_pair) {
    const auto [s, t] = *check.violating_pair;
    ctx.err << "not monotone: nu({" << subset_key(s) << "}) = " << fmt12(g[s]) << " > nu({"
            << subset_key(t) << "}) = " << fmt12(g[t]) << '\n';
  }
  if (!check.is_normalized) ctx.err << "not normalized: nu(N) = " << fmt12(g.total()) << '\n';
  return check.is_capacity() ? kExitOk : kExitInvalid;
}

int cmd_moments(Context& ctx) {
  const SetFunction g = ctx.game();
  const Law law = ctx.law();
  const auto stats = make_order_statistics(law, g.size(), ctx.dj());
  const MomentReport r = moments_report(g, *stats);
  json doc{{"law", law_name(law)},
           {"n", g.size()},
           {"mean", round12(r.mean)},
           {"sd", round12(r.sd)},
           {"variance", round12(r.variance)},
           {"second_moment", round12(r.second_moment)},
           {"exact", stats->is_exact()}};
  if (!stats->is_exact()) doc["dj_order"] = ctx.opt.dj_order;
  print_json(*Sink(ctx.opt.out, ctx.out), doc);
  return kExitOk;
}

struct Curves {
  std::function<double(double)> pdf;
  std::function<double(double)> cdf;
};

Curves exact_curves(const Context& ctx, const SetFunction& g) {
  switch (ctx.law()) {
    case Law::uniform: {
      auto d = std::make_shared<UniformChoquetDist>(g, ctx.n_max);
      return {[d](double y) { return d->pdf(y); }, [d](double y) { return d->cdf(y); }};
    }
    case Law::exponential: {
      auto d = std::make_shared<ExponentialChoquetDist>(g, ctx.n_max);
      return {[d](double y) { return d->pdf(y); }, [d](double y) { return d->cdf(y); }};
    }
    case Law::normal:
      break;
  }
  throw ValidationError(
      "no exact density for the normal law; use 'mixture' or 'sample' instead");
}

int cmd_grid(Context& ctx, bool with_pdf) {
  const auto grid = parse_grid(ctx.opt.grid);
  const SetFunction g = ctx.game();
  const Curves curves = exact_curves(ctx, g);
  Sink sink(ctx.opt.out, ctx.out);
  std::ostream& os = *sink;
  os << (with_pdf ? "y,pdf,cdf\n" : "y,cdf\n");
  for (double y : grid) {
    os << fmt12(y);
    if (with_pdf) os << ',' << fmt12(curves.pdf(y));
    os << ',' << fmt12(curves.cdf(y)) << '\n';
  }
  return kExitOk;
}

int cmd_mixture(Context& ctx) {
  const auto grid = parse_grid(ctx.opt.grid);
  const SetFunction g = ctx.game();
  const auto stats = make_order_statistics(ctx.law(), g.size(), ctx.dj());
  const MixtureApprox mix = mixture_approx(g, *stats, ctx.n_max);
  Sink sink(ctx.opt.out, ctx.out);
  std::ostream& os = *sink;
  os << "y,mixture_pdf\n";
  for (double y : grid) os << fmt12(y) << ',' << fmt12(mixture_pdf(mix, y)) << '\n';
  return kExitOk;
}

int cmd_stigler(Context& ctx) {
  if (ctx.opt.n < 1) throw ValidationError("--n must be at least 1");
  const Law law = ctx.law();
  const StiglerSummary s = stigler_summary(ctx.opt.a, ctx.opt.n, law, ctx.dj());
  json doc{{"law", law_name(law)},
           {"a", ctx.opt.a},
           {"n", ctx.opt.n},
           {"alpha", round12(s.alpha)},
           {"beta2", round12(s.beta2)},
           {"component_mean", round12(s.component_mean)},
           {"n_times_variance", round12(s.n_times_variance)}};
  print_json(*Sink(ctx.opt.out, ctx.out), doc);
  return kExitOk;
}

int cmd_sample(Context& ctx) {
  if (ctx.opt.n < 2) throw ValidationError("--n must be at least 2");
  const SetFunction g = ctx.game();
  const Law law = ctx.law();
  const auto qm = make_quantile_model(law);
  std::vector<double> raw = draw(g, *qm, ctx.opt.n, {ctx.opt.seed, ctx.opt.threads});

  {
    // Samples go to --out, or to stdout with the summary on stderr.
    Sink sink(ctx.opt.out, ctx.out);
    std::ostream& os = *sink;
    os << "y\n";
    for (double y : raw) os << fmt12(y) << '\n';
  }

  MCReport report = summarize(std::move(raw));
  json doc{{"law", law_name(law)},
           {"seed", ctx.opt.seed},
           {"n_samples", report.n_samples},
           {"mean", round12(report.mean)},
           {"sd", round12(report.sd)},
           {"standard_error", round12(report.standard_error)}};
  if (law != Law::normal) {
    try {
      const Curves curves = exact_curves(ctx, g);
      const double ks = ks_statistic(report.ecdf, curves.cdf);
      doc["ks_vs_reference"] = round12(ks);
      doc["ks_band_01"] = round12(ks_band(report.n_samples, kKsCritical01));
    } catch (const RegularityError&) {
      doc["ks_vs_reference"] = nullptr;
    }
  }
  print_json(ctx.opt.out.empty() ? ctx.err : ctx.out, doc);
  return kExitOk;
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string_view::npos ? first : spec.find(':', first + 1);
  if (second == std::string_view::npos || spec.find(':', second + 1) != std::string_view::npos) {
    throw ValidationError("grid must look like a:b:steps, got '" + std::string(spec) + "'");
  }
  const double a = parse_number(spec.substr(0, first), "grid start");
  const double b = parse_number(spec.substr(first + 1, second - first - 1), "grid end");
  const std::string_view steps_text = spec.substr(second + 1);
  std::size_t steps = 0;
  const auto [ptr, ec] =
      std::from_chars(steps_text.data(), steps_text.data() + steps_text.size(), steps);
  if (ec != std::errc{} || ptr != steps_text.data() + steps_text.size()) {
    throw ValidationError("bad grid step count '" + std::string(steps_text) + "'");
  }
  if (steps < 2) throw ValidationError("grid needs at least 2 steps");
  if (!(b > a)) throw ValidationError("grid end must exceed grid start");
  std::vector<double> grid(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    grid[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  grid.back() = b;
  return grid;
}

std::size_t attribute_limit_from_env() {
  const char* raw = std::getenv("CHOQUET_NMAX");
  if (!raw || !*raw) return kDefaultMaxAttributes;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1 ||
      value > kMaxStoredAttributes) {
    throw ValidationError("CHOQUET_NMAX must be an integer in [1, " +
                          std::to_string(kMaxStoredAttributes) + "], got '" + raw + "'");
  }
  return value;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distribution and moments of the discrete Choquet integral of i.i.d. inputs",
               "choquet-dist"};
  app.require_subcommand(1);
  Options opt;

  auto add_capacity = [&](CLI::App* sub) {
    sub->add_option("--capacity", opt.capacity, "capacity JSON file")->required();
  };
  auto add_law = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--law", opt.law, "uniform, exponential or normal");
    if (required) o->required();
  };
  auto add_dj = [&](CLI::App* sub) {
    sub->add_option("--dj-order", opt.dj_order, "David-Johnson truncation order (2 or 3)")
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "output file"); };

  auto* validate = app.add_subcommand("validate", "check monotonicity and normalization");
  add_capacity(validate);
  add_out(validate);

  auto* moments = app.add_subcommand("moments", "mean and sd as JSON");
  add_law(moments, true);
  add_capacity(moments);
  add_dj(moments);
  add_out(moments);

  auto* pdf = app.add_subcommand("pdf", "exact density and cdf on a grid (CSV y,pdf,cdf)");
  auto* cdf = app.add_subcommand("cdf", "exact cdf on a grid (CSV y,cdf)");
  for (auto* sub : {pdf, cdf}) {
    add_law(sub, true);
    add_capacity(sub);
    sub->add_option("--grid", opt.grid, "a:b:steps")->required();
    add_out(sub);
  }

  auto* mixture = app.add_subcommand("mixture", "normal-mixture density on a grid");
  add_law(mixture, true);
  add_capacity(mixture);
  mixture->add_option("--grid", opt.grid, "a:b:steps")->required();
  add_dj(mixture);
  add_out(mixture);

  auto* stigler = app.add_subcommand("stigler", "limits for the power-weight OWA J(u) = u^a");
  stigler->add_option("--a", opt.a, "exponent a > 0")->capture_default_str();
  stigler->add_option("--n", opt.n, "number of inputs")->required();
  add_law(stigler, false);
  add_dj(stigler);
  add_out(stigler);

  auto* sample = app.add_subcommand("sample", "Monte Carlo draws of the integral");
  add_law(sample, true);
  add_capacity(sample);
  sample->add_option("--n", opt.n, "number of draws")->required();
  sample->add_option("--seed", opt.seed, "seed")->capture_default_str();
  sample->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
  add_out(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    Context ctx{opt, attribute_limit_from_env(), out, err};
    if (*validate) return cmd_validate(ctx);
    if (*moments) return cmd_moments(ctx);
    if (*pdf) return cmd_grid(ctx, true);
    if (*cdf) return cmd_grid(ctx, false);
    if (*mixture) return cmd_mixture(ctx);
    if (*stigler) return cmd_stigler(ctx);
    if (*sample) return cmd_sample(ctx);
  } catch (const RegularityError& e) {
    err << "regularity violation: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << " (raise CHOQUET_NMAX to allow more)\n";
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace choquet
