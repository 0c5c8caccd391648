#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mexplore/grid.hpp"
#include "mexplore/rng.hpp"

namespace mexplore {

enum class Task : int { Task1 = 1, Task2 = 2, Task3 = 3 };

// Action ids are fixed: moves in grid coordinates with y growing downward,
// so North decreases y.
enum Action : int { North = 0, East = 1, South = 2, West = 3, Stay = 4 };
inline constexpr int kNumActions = 5;

struct EnvConfig {
  Task task = Task::Task1;
  int n_agents = 2;
  double slip_prob = 0.1;
  int max_ep_length = 500;
  // Per-step drift of the wormhole opening probability rho. Negative means
  // "pick the task default": 0.05 for Task1, 0.005 for Tasks 2 and 3.
  double wormhole_mu = -1.0;
  double wormhole_sigma = -1.0;
  double step_penalty = 0.01;
  double treasure_reward = 1.0;
  int proximity_radius = 3;
  int designated_treasure = 0;

  double resolved_mu() const {
    if (wormhole_mu >= 0.0) return wormhole_mu;
    return task == Task::Task1 ? 0.05 : 0.005;
  }
  double resolved_sigma() const {
    if (wormhole_sigma >= 0.0) return wormhole_sigma;
    return task == Task::Task1 ? 0.05 : 0.005;
  }
};

// Full environment snapshot. Tasks use the first n_agents treasure ids, so
// `collected` is an n_agents x n_agents matrix (row-major by agent).
struct EnvState {
  std::vector<Cell> positions;
  std::vector<double> rho;
  std::vector<uint8_t> open;
  std::vector<uint8_t> collected;
  int t = 0;
  bool done = false;

  bool operator==(const EnvState&) const = default;
  std::vector<uint8_t> to_bytes() const;
};

struct CollectEvent {
  int agent = 0;
  int treasure = 0;
  bool operator==(const CollectEvent&) const = default;
};

struct StepResult {
  std::vector<std::vector<double>> obs;  // per agent
  std::vector<double> state;
  double reward = 0.0;
  bool done = false;
  std::vector<CollectEvent> events;
};

// Validates a (map, config) pairing. Throws std::invalid_argument when the
// config cannot run on the map (agent count vs spawns/treasures, bad
// probabilities, designated treasure out of range).
void validate_env(const MapSpec& map, const EnvConfig& cfg);

// Reward and termination for one step's collection events.
// Returns (treasure reward total, task complete). The step penalty is
// applied by step(), not here.
std::pair<double, bool> task_reward(const EnvConfig& cfg, const std::vector<CollectEvent>& events,
                                    const std::vector<uint8_t>& collected);

// One tick of the wormhole random walk: closed holes open with probability
// rho (resetting rho to zero) or drift rho by N(mu, sigma) clipped to [0,1];
// a hole that was open closes and skips its draw for that tick.
void advance_wormholes(EnvState& state, const EnvConfig& cfg, Rng& rng);

class GridworldEnv {
 public:
  GridworldEnv(MapSpec map, EnvConfig cfg, uint64_t seed);

  // Reseeds the internal stream and resets the episode.
  StepResult reset(uint64_t seed);
  // Resets the episode, continuing the current stream.
  StepResult reset();

  // Applies one joint action. Effect order: slip, move, wormhole teleport,
  // collection, wormhole advance, reward/termination.
  // Throws std::logic_error when the episode is already done.
  StepResult step(const std::vector<int>& actions);

  const EnvState& state() const { return state_; }
  const MapSpec& map() const { return map_; }
  const EnvConfig& config() const { return cfg_; }

  std::vector<double> observation(int agent) const;
  std::vector<double> state_vector() const;

  int n_agents() const { return cfg_.n_agents; }
  int n_actions() const { return kNumActions; }
  // Active treasures: ids 0 .. n_agents-1.
  int n_active_treasures() const { return cfg_.n_agents; }
  int obs_size() const;
  int state_size() const;

  Rng& rng() { return rng_; }

 private:
  StepResult make_result(double reward, std::vector<CollectEvent> events) const;
  std::vector<CollectEvent> collect(const std::vector<Cell>& positions);

  MapSpec map_;
  EnvConfig cfg_;
  EnvState state_;
  Rng rng_;
};

}  // namespace mexplore
