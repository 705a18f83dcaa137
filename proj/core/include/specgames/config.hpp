#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "specgames/geometry.hpp"

namespace specgames {

enum class Scheme {
  orthogonal,
  fullspread,
  cooperative,
  game_price,
  game_history,
};

const char* scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);  // throws on unknown name
constexpr int kNumSchemes = 5;

/// Full scenario description: geometry, radio parameters, scheme selection
/// and game parameters. Defaults are the reference indoor scenario: two
/// operators, 8 carriers at 12.5 MHz, 30 dBm per BS, power-law path loss
/// with A=3.6 and C=1e-4, Poisson mean loads 25/5.
struct ScenarioConfig {
  double carrier_freq_hz = 2.6e9;  // informational only
  double carrier_bandwidth_hz = 12.5e6;
  int num_carriers = 8;  // K
  int num_pcc = 1;       // PCCs per operator
  double bs_tx_power_dbm = 30.0;
  double noise_figure_db = 15.0;
  double thermal_noise_dbm_per_hz = -174.0;
  double pathloss_exponent = 3.6;      // A
  double attenuation_constant = 1e-4;  // C
  double wall_loss_db = 0.0;           // W; 0 = high interference, 10 = low
  double bw_efficiency = 0.56;
  double min_distance_m = 1.0;

  FloorLayout floor = FloorLayout::default_layout();
  std::array<double, 2> mean_load = {25.0, 5.0};

  Scheme scheme = Scheme::game_price;
  double p1 = 7.0;  // pricing constants (game_price)
  double p2 = 0.8;
  int surplus = 2;  // S, max outstanding favors

  double delta_init = 0.5;   // gain/loss seed (game_history)
  int ledger_seed_count = 1;
  int warmup_slots = 0;      // load-1 warm-up slots (game_history)

  int rounds_per_deployment = 30;
  int num_deployments = 1000;
  std::uint64_t rng_seed = 1;
  bool truncate_zero_loads = true;

  /// Throws std::invalid_argument naming the offending key.
  void validate() const;
};

}  // namespace specgames
