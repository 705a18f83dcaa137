#pragma once

#include <array>
#include <vector>

#include "specgames/config.hpp"
#include "specgames/deployment.hpp"

namespace specgames {

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// Power-law path loss PL[dB] = A*10*log10(d) + 10*log10(1/C) + walls*W.
/// Distances below the configured minimum are clamped. Throws
/// std::invalid_argument on non-finite or negative inputs.
double path_loss_db(double distance_m, int walls_crossed, const ScenarioConfig& cfg);

/// Per-carrier noise power: thermal density + noise figure + 10*log10(BW).
double noise_per_carrier_dbm(const ScenarioConfig& cfg);

/// Frequency-flat linear power gains from every BS to every user, plus the
/// serving-BS attachment (strongest own-operator BS) and the aggregate gain
/// from the opponent's stations.
struct ChannelGainTable {
  // [op][user][bs index into cfg.floor.stations()]
  std::array<std::vector<std::vector<double>>, 2> gain;
  std::array<std::vector<int>, 2> serving_bs;
  std::array<std::vector<double>, 2> serving_gain;
  std::array<std::vector<double>, 2> opponent_gain_sum;

  static ChannelGainTable build(const Deployment& dep, const ScenarioConfig& cfg);
};

}  // namespace specgames
