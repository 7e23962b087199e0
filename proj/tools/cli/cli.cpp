#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "output.hpp"
#include "safefollow/errors.hpp"
#include "safefollow/sweep.hpp"

namespace safefollow::cli {
namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ValidationError(std::string(flag) + ": bad value '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw ValidationError(std::string(flag) + " is empty");
  return values;
}

fs::path prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir + "'");
  }
  return fs::path(dir);
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& write) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  write(os);
  os.flush();
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

void print_sweep(std::ostream& out, std::string_view column,
                 const std::vector<SweepRow>& rows) {
  out << std::left << std::setw(12) << column << std::setw(14) << "lambda_mean"
      << std::setw(14) << "lambda_min" << std::setw(16) << "steady_lambda"
      << std::setw(14) << "response_s" << "collision\n";
  out << std::fixed << std::setprecision(4);
  for (const SweepRow& r : rows) {
    const Metrics& m = r.metrics;
    out << std::setw(12) << r.value << std::setw(14) << m.lambda_mean
        << std::setw(14) << m.lambda_min << std::setw(16)
        << m.steady_state_lambda << std::setw(14)
        << (m.response_time ? std::to_string(*m.response_time) : "-")
        << (m.collision ? "yes" : "no") << '\n';
  }
  out.unsetf(std::ios::floatfield);
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            std::ostream& out) {
  const ScenarioConfig cfg = load_config(config_path);
  const SimLog log = run_scenario(cfg);
  const Metrics m = summarize(log);

  const fs::path dir = prepare_out_dir(out_dir);
  write_file(dir / "log.csv", [&](std::ostream& os) { write_log_csv(os, log); });
  write_file(dir / "metrics.json", [&](std::ostream& os) {
    os << metrics_to_json(m, cfg).dump(2) << '\n';
  });

  out << "steps " << log.records.size() << ", lambda_mean "
      << m.lambda_mean << " m, lambda_min " << m.lambda_min
      << " m, collision " << (m.collision ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              const std::vector<double>& values, bool alpha,
              std::ostream& out) {
  const ScenarioConfig cfg = load_config(config_path);
  const auto rows =
      alpha ? alpha_sweep(cfg, values) : latency_sweep(cfg, values);

  const std::string_view column = alpha ? "alpha" : "latency_s";
  const fs::path dir = prepare_out_dir(out_dir);
  write_file(dir / (alpha ? "sweep_alpha.csv" : "sweep_latency.csv"),
             [&](std::ostream& os) { write_sweep_csv(os, column, rows); });
  print_sweep(out, column, rows);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Safe target-following simulator with a CBF-QP safety filter",
               "safefollow"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string alphas;
  std::string latencies;

  auto* run = app.add_subcommand("run", "Simulate one scenario");
  run->add_option("--config", config_path, "Scenario config file")->required();
  run->add_option("--out", out_dir, "Output directory")->required();

  auto* sweep_alpha =
      app.add_subcommand("sweep-alpha", "Repeat a scenario over alpha values");
  sweep_alpha->add_option("--config", config_path, "Scenario config file")->required();
  sweep_alpha->add_option("--alphas", alphas, "Comma-separated alphas")->required();
  sweep_alpha->add_option("--out", out_dir, "Output directory")->required();

  auto* sweep_latency = app.add_subcommand(
      "sweep-latency", "Repeat a scenario over sensing latencies");
  sweep_latency->add_option("--config", config_path, "Scenario config file")->required();
  sweep_latency
      ->add_option("--latencies", latencies, "Comma-separated latencies (s)")
      ->required();
  sweep_latency->add_option("--out", out_dir, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    if (run->parsed()) return cmd_run(config_path, out_dir, out);
    if (sweep_alpha->parsed()) {
      return cmd_sweep(config_path, out_dir, parse_list(alphas, "--alphas"),
                       true, out);
    }
    return cmd_sweep(config_path, out_dir,
                     parse_list(latencies, "--latencies"), false, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const ParseError& e) {
    err << "error: " << config_path << ": " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ValidationError& e) {
    err << "error: " << config_path << ": invalid config: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace safefollow::cli
