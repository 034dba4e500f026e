#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rfso/analytics/link_budget.hpp"
#include "rfso/analytics/modulation.hpp"
#include "rfso/simulate/monte_carlo.hpp"

namespace rfso::cli {

enum class Method { exact, approx, asymptotic, mc };
enum class OutputFormat { csv, json };
enum class LinkMode { equal, fixed_rf, offset };

const char* method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct GridSpec {
  double start_db = 0.0;
  double stop_db = 40.0;
  double step_db = 1.0;
  std::vector<double> points() const;
};

struct LinkSpec {
  LinkMode mode = LinkMode::equal;
  double value_db = 0.0;  // fixed_rf: Gamma1 in dB; offset: Gamma1 = grid + value
};

/// Parsed and validated run configuration. `echo_json` holds the canonical
/// single-line JSON the config re-serializes to; it is embedded in outputs so
/// they round-trip.
struct RunConfig {
  std::string channel_model;  // "malaga" | "k" | "gamma_gamma"
  channel::MalagaParams malaga = channel::make_k_distribution(4.0, 0.5);
  relay::RelayStrategy strategy = relay::RelayStrategy::fixed_gain(0.5);
  std::vector<analytics::Modulation> modulations;
  GridSpec grid;
  LinkSpec link;
  std::vector<Method> methods;
  simulate::McConfig mc;
  std::string out_path;
  OutputFormat format = OutputFormat::csv;
  bool timestamp = true;
  bool phase_defaulted = true;  // phase_diff omitted in the config

  std::string echo_json;

  /// Throws ConfigError with a usage-grade message on invalid content.
  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_file(const std::string& path);
  /// Built-in defaults (fixed-gain, alpha=10 beta=5 rho=0.5 b0=0.25 grid
  /// 0..40 dB); base for flag-only invocations.
  static RunConfig defaults();

  /// Re-serialize (canonical key order, one line).
  std::string to_json_text() const;

  analytics::LinkBudget link_budget(double grid_snr_db) const;
  double gamma1_at(double grid_snr_db) const;
  double gamma2_at(double grid_snr_db) const;
};

double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace rfso::cli
