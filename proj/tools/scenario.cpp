#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "tmsv/format.hpp"
#include "tmsv/measures.hpp"
#include "tmsv/spectral.hpp"
#include "tmsv/witness.hpp"

namespace tmsv::cli {

namespace {

// Values gathered from one source (flags or file) before merging.
struct RawConfig {
  std::optional<double> gain;
  std::optional<double> loss;
  std::optional<double> r;
  std::optional<double> lambda;
  std::optional<double> tmax;
  std::optional<int> steps;
  std::optional<int> nmax;
  std::optional<int> smax;
  std::optional<std::string> out;
  std::optional<bool> oracle;
};

double to_real(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !std::isfinite(v)) {
    throw UsageError("invalid number for '" + key + "': '" + text + "'");
  }
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw UsageError("invalid integer for '" + key + "': '" + text + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw UsageError("invalid boolean for '" + key + "': '" + text + "'");
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

RawConfig from_file(const std::filesystem::path& file) {
  RawConfig raw;
  for (const auto& [key, value] : read_key_values(file)) {
    if (key == "gain") raw.gain = to_real(key, value);
    else if (key == "loss") raw.loss = to_real(key, value);
    else if (key == "r") raw.r = to_real(key, value);
    else if (key == "lambda") raw.lambda = to_real(key, value);
    else if (key == "tmax") raw.tmax = to_real(key, value);
    else if (key == "steps") raw.steps = to_int(key, value);
    else if (key == "nmax") raw.nmax = to_int(key, value);
    else if (key == "smax") raw.smax = to_int(key, value);
    else if (key == "out") raw.out = value;
    else if (key == "oracle") raw.oracle = to_bool(key, value);
    else throw UsageError("unknown key '" + key + "' in " + file.string());
  }
  return raw;
}

template <typename T>
std::optional<T> pick(const std::optional<T>& flag, const std::optional<T>& file) {
  return flag ? flag : file;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_key_values(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw UsageError("cannot open config file " + file.string());
  }
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(file.string() + ":" + std::to_string(lineno) + ": expected key=value");
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

ScenarioConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Closed-form and brute-force PPT dynamics of a decohering two-mode squeezed vacuum",
               "tmsv_cli"};
  double gain = 0.0, loss = 0.0, r = 0.0, lambda = 0.0, tmax = 0.0;
  int steps = 0, nmax = 0, smax = 0;
  std::string out, config;
  bool oracle = false;
  app.add_option("--gain", gain, "gain rate G (1/time)");
  app.add_option("--loss", loss, "loss rate L (1/time)");
  app.add_option("--r", r, "squeezing parameter r (exclusive with --lambda)");
  app.add_option("--lambda", lambda, "tanh(r) (exclusive with --r)");
  app.add_option("--tmax", tmax, "end of the time grid (default 2 t_c, or 3/L when t_c is infinite)");
  app.add_option("--steps", steps, "number of grid points (default 200)");
  app.add_option("--nmax", nmax, "Fock truncation per mode for the oracle (default 30)");
  app.add_option("--smax", smax, "largest block index written (default 10)");
  app.add_option("--out", out, "output directory (default tmsv_out)");
  app.add_flag("--oracle", oracle, "also integrate the Fock master equation and compare");
  app.add_option("--config", config, "flat key=value file; flags override its values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RawConfig flags;
  if (app.count("--gain")) flags.gain = gain;
  if (app.count("--loss")) flags.loss = loss;
  if (app.count("--r")) flags.r = r;
  if (app.count("--lambda")) flags.lambda = lambda;
  if (app.count("--tmax")) flags.tmax = tmax;
  if (app.count("--steps")) flags.steps = steps;
  if (app.count("--nmax")) flags.nmax = nmax;
  if (app.count("--smax")) flags.smax = smax;
  if (app.count("--out")) flags.out = out;
  if (app.count("--oracle")) flags.oracle = oracle;

  if (flags.r && flags.lambda) {
    throw UsageError("give either --r or --lambda, not both");
  }
  RawConfig file;
  if (app.count("--config")) {
    file = from_file(config);
    if (file.r && file.lambda) {
      throw UsageError("config file sets both r and lambda");
    }
  }

  const auto g = pick(flags.gain, file.gain);
  const auto l = pick(flags.loss, file.loss);
  if (!g || !l) {
    throw UsageError("both gain and loss are required");
  }

  ScenarioConfig cfg;
  try {
    cfg.bath = BathParams(*g, *l);
    if (flags.r || flags.lambda) {
      cfg.squeeze = flags.r ? SqueezeInit::from_r(*flags.r) : SqueezeInit::from_lambda(*flags.lambda);
    } else if (file.r || file.lambda) {
      cfg.squeeze = file.r ? SqueezeInit::from_r(*file.r) : SqueezeInit::from_lambda(*file.lambda);
    } else {
      throw UsageError("one of r or lambda is required");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  cfg.steps = pick(flags.steps, file.steps).value_or(200);
  cfg.nmax = pick(flags.nmax, file.nmax).value_or(30);
  cfg.smax = pick(flags.smax, file.smax).value_or(10);
  cfg.out = pick(flags.out, file.out).value_or("tmsv_out");
  cfg.oracle = pick(flags.oracle, file.oracle).value_or(false);

  if (cfg.steps < 2) throw UsageError("steps must be >= 2");
  if (cfg.nmax < 1) throw UsageError("nmax must be >= 1");
  if (cfg.smax < 0 || cfg.smax > cfg.nmax) throw UsageError("smax must satisfy 0 <= smax <= nmax");
  if (cfg.smax > kMaxBlockIndex) throw UsageError("smax exceeds the supported block range");

  if (const auto t = pick(flags.tmax, file.tmax)) {
    if (!(*t > 0.0)) throw UsageError("tmax must be positive");
    cfg.tmax = *t;
  } else {
    const auto tc = critical_time(cfg.bath, cfg.squeeze);
    if (tc && *tc > 0.0) {
      cfg.tmax = 2.0 * *tc;
    } else if (cfg.bath.loss() > 0.0) {
      cfg.tmax = 3.0 / cfg.bath.loss();
    } else {
      throw UsageError("no default tmax for this bath (t_c infinite and loss = 0); pass --tmax");
    }
  }
  return cfg;
}

std::vector<double> time_grid(double tmax, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] = tmax * i / (steps - 1);
  }
  return grid;
}

namespace {

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, std::vector<std::filesystem::path>& registry)
      : out_(path) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    registry.push_back(path);
  }
  std::ofstream& stream() { return out_; }
  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i != 0) out_ << ',';
      out_ << format_real(values[i]);
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

}  // namespace

ScenarioOutputs run_scenario(const ScenarioConfig& cfg) {
  std::filesystem::create_directories(cfg.out);
  ScenarioOutputs result;
  const int smax = cfg.smax;

  const auto tc = critical_time(cfg.bath, cfg.squeeze);
  {
    std::ofstream tc_file(cfg.out / "tc.txt");
    tc_file << (tc ? format_real(*tc) : std::string("infinite")) << '\n';
    result.files.push_back(cfg.out / "tc.txt");
  }

  CsvFile coeff_csv(cfg.out / "coefficients.csv", result.files);
  coeff_csv.stream() << "t,A,B,C,D,Xi,alpha1,beta1,alpha2,beta2\n";

  std::vector<CsvFile> spectrum_csv;
  spectrum_csv.reserve(static_cast<std::size_t>(smax) + 1);
  for (int s = 0; s <= smax; ++s) {
    spectrum_csv.emplace_back(cfg.out / ("spectrum_S" + std::to_string(s) + ".csv"), result.files);
    auto& os = spectrum_csv.back().stream();
    os << 't';
    for (int n = 0; n <= s; ++n) os << ",xi_" << n << '_' << s - n;
    if (cfg.oracle) {
      for (int n = 0; n <= s; ++n) os << ",numeric_xi_" << n << '_' << s - n;
    }
    os << '\n';
  }

  CsvFile neg_csv(cfg.out / "negativity.csv", result.files);
  neg_csv.stream() << "t,N";
  for (int s = 0; s <= smax; ++s) neg_csv.stream() << ",N_" << s;
  if (cfg.oracle) neg_csv.stream() << ",N_partial,N_numeric,max_block_deviation";
  neg_csv.stream() << '\n';

  const GaussianCoeffs init = tmsv_coeffs(cfg.squeeze);
  const auto grid = time_grid(cfg.tmax, cfg.steps);

  std::optional<FockDensityMatrix> numeric;
  OracleSummary summary;
  double dt = 0.0;
  if (cfg.oracle) {
    numeric = partial_transpose(tmsv_fock_state(cfg.squeeze, cfg.nmax, cfg.tail_tol));
    dt = std::min(max_stable_step(cfg.bath, cfg.nmax), cfg.tmax);
  }

  double t_prev = 0.0;
  for (double t : grid) {
    const GaussianCoeffs k = evolve_coefficients(init, cfg.bath, t);
    const AlphaBeta ab = alpha_beta(k);
    coeff_csv.row({t, k.a, k.b, k.c, k.d, k.xi, ab.alpha1, ab.beta1, ab.alpha2, ab.beta2});

    if (numeric) {
      *numeric = integrate(std::move(*numeric), cfg.bath, t - t_prev, dt, cfg.tail_tol);
      t_prev = t;
    }

    for (int s = 0; s <= smax; ++s) {
      std::vector<double> row{t};
      for (int n = 0; n <= s; ++n) row.push_back(eigenvalue(ab, k.xi, n, s - n));
      if (numeric) {
        const Eigensystem eig = pair_with_fock_eigenvectors(diagonalize_block(extract_block(*numeric, s)), s);
        for (int n = 0; n <= s; ++n) {
          const double v = eig.values[static_cast<std::size_t>(n)];
          summary.max_eigenvalue_deviation =
              std::max(summary.max_eigenvalue_deviation, std::abs(v - row[static_cast<std::size_t>(n) + 1]));
          row.push_back(v);
        }
      }
      spectrum_csv[static_cast<std::size_t>(s)].row(row);
    }

    const NegativityReport report = negativity_report(k, t, smax);
    std::vector<double> row{t, report.total};
    double partial = 0.0;
    for (const auto& b : report.per_block) {
      row.push_back(b.value);
      partial += b.value;
    }
    if (numeric) {
      const double n_numeric = numerical_negativity(*numeric, smax);
      const FockDensityMatrix analytic = reconstruct_analytic_fock(k, cfg.nmax, smax);
      double block_dev = 0.0;
      for (int s = 0; s <= smax; ++s) {
        block_dev = std::max(block_dev, max_abs_difference(extract_block(analytic, s), extract_block(*numeric, s)));
      }
      summary.max_negativity_deviation = std::max(summary.max_negativity_deviation, std::abs(n_numeric - partial));
      summary.max_block_deviation = std::max(summary.max_block_deviation, block_dev);
      row.push_back(partial);
      row.push_back(n_numeric);
      row.push_back(block_dev);
    }
    neg_csv.row(row);
  }

  for (int s = 1; s <= smax; ++s) {
    const auto path = cfg.out / ("witness_S" + std::to_string(s) + "_n1.csv");
    std::ofstream w(path);
    write_witness_csv(w, build_witness(s, 1));
    result.files.push_back(path);
  }

  if (cfg.oracle) {
    const auto path = cfg.out / "oracle_summary.txt";
    std::ofstream os(path);
    os << "max_negativity_deviation=" << format_real(summary.max_negativity_deviation) << '\n'
       << "max_eigenvalue_deviation=" << format_real(summary.max_eigenvalue_deviation) << '\n'
       << "max_block_deviation=" << format_real(summary.max_block_deviation) << '\n';
    result.files.push_back(path);
    result.oracle = summary;
  }
  return result;
}

}  // namespace tmsv::cli
