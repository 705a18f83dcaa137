#include "specgames/config.hpp"

#include <stdexcept>

namespace specgames {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::orthogonal: return "orthogonal";
    case Scheme::fullspread: return "fullspread";
    case Scheme::cooperative: return "cooperative";
    case Scheme::game_price: return "game_price";
    case Scheme::game_history: return "game_history";
  }
  return "unknown";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "orthogonal") return Scheme::orthogonal;
  if (name == "fullspread") return Scheme::fullspread;
  if (name == "cooperative") return Scheme::cooperative;
  if (name == "game_price") return Scheme::game_price;
  if (name == "game_history") return Scheme::game_history;
  throw std::invalid_argument("scheme: unknown value '" + name + "'");
}

void ScenarioConfig::validate() const {
  if (num_carriers < 2) throw std::invalid_argument("num_carriers: must be >= 2");
  if (num_carriers > 63) throw std::invalid_argument("num_carriers: must be <= 63");
  if (num_pcc < 1) throw std::invalid_argument("num_pcc: must be >= 1");
  if (2 * num_pcc > num_carriers)
    throw std::invalid_argument("num_pcc: 2*num_pcc must be <= num_carriers");
  if (!(carrier_bandwidth_hz > 0))
    throw std::invalid_argument("carrier_bandwidth_hz: must be > 0");
  if (!(bw_efficiency > 0.0) || bw_efficiency > 1.0)
    throw std::invalid_argument("bw_efficiency: must be in (0, 1]");
  if (!(pathloss_exponent > 0)) throw std::invalid_argument("pathloss_exponent: must be > 0");
  if (!(attenuation_constant > 0))
    throw std::invalid_argument("attenuation_constant: must be > 0");
  if (wall_loss_db < 0) throw std::invalid_argument("wall_loss_db: must be >= 0");
  if (!(min_distance_m > 0)) throw std::invalid_argument("min_distance_m: must be > 0");
  if (mean_load[0] < 0 || mean_load[1] < 0)
    throw std::invalid_argument("mean_load: must be >= 0");
  if (!(p1 > 0)) throw std::invalid_argument("p1: must be > 0");
  if (p2 == 0.0) throw std::invalid_argument("p2: must be nonzero");
  if (surplus < 0) throw std::invalid_argument("surplus: must be >= 0");
  if (!(delta_init > 0)) throw std::invalid_argument("delta_init: must be > 0");
  if (ledger_seed_count < 0) throw std::invalid_argument("ledger_seed_count: must be >= 0");
  if (warmup_slots < 0) throw std::invalid_argument("warmup_slots: must be >= 0");
  if (rounds_per_deployment < 0)
    throw std::invalid_argument("rounds_per_deployment: must be >= 0");
  if (num_deployments < 1) throw std::invalid_argument("num_deployments: must be >= 1");
  floor.validate();
}

}  // namespace specgames
