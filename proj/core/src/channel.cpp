#include "specgames/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace specgames {

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double path_loss_db(double distance_m, int walls_crossed, const ScenarioConfig& cfg) {
  if (!std::isfinite(distance_m) || distance_m < 0.0)
    throw std::invalid_argument("path_loss_db: distance must be finite and >= 0");
  if (walls_crossed < 0)
    throw std::invalid_argument("path_loss_db: walls_crossed must be >= 0");
  const double d = std::max(distance_m, cfg.min_distance_m);
  return cfg.pathloss_exponent * 10.0 * std::log10(d) +
         10.0 * std::log10(1.0 / cfg.attenuation_constant) +
         walls_crossed * cfg.wall_loss_db;
}

double noise_per_carrier_dbm(const ScenarioConfig& cfg) {
  return cfg.thermal_noise_dbm_per_hz + cfg.noise_figure_db +
         10.0 * std::log10(cfg.carrier_bandwidth_hz);
}

ChannelGainTable ChannelGainTable::build(const Deployment& dep, const ScenarioConfig& cfg) {
  ChannelGainTable t;
  const auto& stations = cfg.floor.stations();
  for (int op = 0; op < 2; ++op) {
    const auto& users = dep.users[op];
    t.gain[op].resize(users.size());
    t.serving_bs[op].resize(users.size());
    t.serving_gain[op].resize(users.size());
    t.opponent_gain_sum[op].resize(users.size());
    for (std::size_t u = 0; u < users.size(); ++u) {
      auto& row = t.gain[op][u];
      row.resize(stations.size());
      int best_bs = -1;
      double best_gain = 0.0;
      double opp_sum = 0.0;
      for (std::size_t b = 0; b < stations.size(); ++b) {
        const double d = distance(stations[b].pos, users[u]);
        const int walls = cfg.floor.wall_count(stations[b].pos, users[u]);
        row[b] = dbm_to_mw(-path_loss_db(d, walls, cfg));
        if (stations[b].owner == op) {
          if (row[b] > best_gain) {
            best_gain = row[b];
            best_bs = static_cast<int>(b);
          }
        } else {
          opp_sum += row[b];
        }
      }
      t.serving_bs[op][u] = best_bs;
      t.serving_gain[op][u] = best_gain;
      t.opponent_gain_sum[op][u] = opp_sum;
    }
  }
  return t;
}

}  // namespace specgames
