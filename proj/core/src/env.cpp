#include "mexplore/env.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace mexplore {

namespace {
constexpr int kDx[kNumActions] = {0, 1, 0, -1, 0};
constexpr int kDy[kNumActions] = {-1, 0, 1, 0, 0};
}  // namespace

std::vector<uint8_t> EnvState::to_bytes() const {
  std::vector<uint8_t> out;
  auto put = [&out](const void* p, size_t n) {
    const auto* b = static_cast<const uint8_t*>(p);
    out.insert(out.end(), b, b + n);
  };
  for (const Cell& c : positions) {
    put(&c.x, sizeof(c.x));
    put(&c.y, sizeof(c.y));
  }
  for (double r : rho) put(&r, sizeof(r));
  out.insert(out.end(), open.begin(), open.end());
  out.insert(out.end(), collected.begin(), collected.end());
  put(&t, sizeof(t));
  uint8_t d = done ? 1 : 0;
  put(&d, 1);
  return out;
}

void validate_env(const MapSpec& map, const EnvConfig& cfg) {
  if (cfg.n_agents < 1)
    throw std::invalid_argument("env: n_agents must be at least 1");
  if (cfg.n_agents > map.n_treasures())
    throw std::invalid_argument("env: n_agents exceeds number of treasures on the map");
  if (cfg.n_agents > static_cast<int>(map.spawn_cells.size()))
    throw std::invalid_argument("env: n_agents exceeds spawn capacity of the map");
  if (cfg.slip_prob < 0.0 || cfg.slip_prob > 1.0)
    throw std::invalid_argument("env: slip_prob must lie in [0,1]");
  if (cfg.max_ep_length < 1)
    throw std::invalid_argument("env: max_ep_length must be at least 1");
  if (cfg.designated_treasure < 0 || cfg.designated_treasure >= cfg.n_agents)
    throw std::invalid_argument("env: designated_treasure must be an active treasure id");
  if (cfg.proximity_radius < 1)
    throw std::invalid_argument("env: proximity_radius must be at least 1");
}

std::pair<double, bool> task_reward(const EnvConfig& cfg, const std::vector<CollectEvent>& events,
                                    const std::vector<uint8_t>& collected) {
  const int n = cfg.n_agents;
  const double reward = cfg.treasure_reward * static_cast<double>(events.size());
  auto got = [&](int agent, int treasure) {
    return collected[static_cast<size_t>(agent) * n + treasure] != 0;
  };
  bool complete = true;
  switch (cfg.task) {
    case Task::Task1:
      // every active treasure collected by someone
      for (int k = 0; k < n && complete; ++k) {
        bool any = false;
        for (int i = 0; i < n; ++i) any = any || got(i, k);
        complete = any;
      }
      break;
    case Task::Task2:
      for (int i = 0; i < n; ++i) complete = complete && got(i, cfg.designated_treasure);
      break;
    case Task::Task3:
      for (int i = 0; i < n; ++i) complete = complete && got(i, i);
      break;
  }
  return {reward, complete};
}

void advance_wormholes(EnvState& state, const EnvConfig& cfg, Rng& rng) {
  const double mu = cfg.resolved_mu();
  const double sigma = cfg.resolved_sigma();
  for (size_t w = 0; w < state.rho.size(); ++w) {
    if (state.open[w]) {
      // open for exactly one step; no draw on the closing tick
      state.open[w] = 0;
      continue;
    }
    if (rng.bernoulli(state.rho[w])) {
      state.open[w] = 1;
      state.rho[w] = 0.0;
    } else {
      state.rho[w] = std::clamp(state.rho[w] + rng.normal(mu, sigma), 0.0, 1.0);
    }
  }
}

GridworldEnv::GridworldEnv(MapSpec map, EnvConfig cfg, uint64_t seed)
    : map_(std::move(map)), cfg_(cfg), rng_(seed) {
  validate_env(map_, cfg_);
  reset();
}

StepResult GridworldEnv::reset(uint64_t seed) {
  rng_.seed(seed);
  return reset();
}

StepResult GridworldEnv::reset() {
  const int n = cfg_.n_agents;
  state_.positions.resize(n);
  for (int i = 0; i < n; ++i) state_.positions[i] = map_.spawn_cells[i];
  state_.rho.assign(map_.n_wormholes(), 0.0);
  state_.open.assign(map_.n_wormholes(), 0);
  state_.collected.assign(static_cast<size_t>(n) * n, 0);
  state_.t = 0;
  state_.done = false;
  return make_result(0.0, {});
}

std::vector<CollectEvent> GridworldEnv::collect(const std::vector<Cell>& positions) {
  const int n = cfg_.n_agents;
  std::vector<CollectEvent> events;
  auto flag = [&](int agent, int treasure) -> uint8_t& {
    return state_.collected[static_cast<size_t>(agent) * n + treasure];
  };
  for (int i = 0; i < n; ++i) {
    const size_t idx = static_cast<size_t>(positions[i].y) * map_.width + positions[i].x;
    const int k = map_.treasure_id[idx];
    if (k < 0 || k >= n) continue;  // not a treasure, or inactive id
    bool permitted = false;
    switch (cfg_.task) {
      case Task::Task1: {
        bool anyone = false;
        for (int a = 0; a < n; ++a) anyone = anyone || flag(a, k);
        permitted = !anyone;
        break;
      }
      case Task::Task2:
        permitted = k == cfg_.designated_treasure && !flag(i, k);
        break;
      case Task::Task3:
        permitted = k == i && !flag(i, k);
        break;
    }
    if (permitted) {
      flag(i, k) = 1;
      events.push_back({i, k});
    }
  }
  return events;
}

StepResult GridworldEnv::step(const std::vector<int>& actions) {
  if (state_.done) throw std::logic_error("env: step() called on a finished episode");
  if (static_cast<int>(actions.size()) != cfg_.n_agents)
    throw std::invalid_argument("env: wrong number of actions");

  const int n = cfg_.n_agents;

  // (1) slip noise
  std::vector<int> effective(actions);
  for (int i = 0; i < n; ++i) {
    if (actions[i] < 0 || actions[i] >= kNumActions)
      throw std::invalid_argument("env: action id out of range");
    if (cfg_.slip_prob > 0.0 && rng_.bernoulli(cfg_.slip_prob))
      effective[i] = rng_.uniform_int(kNumActions);
  }

  // (2) moves, walls block
  for (int i = 0; i < n; ++i) {
    const int nx = state_.positions[i].x + kDx[effective[i]];
    const int ny = state_.positions[i].y + kDy[effective[i]];
    if (map_.in_bounds(nx, ny) && !map_.is_wall(nx, ny)) state_.positions[i] = {nx, ny};
  }

  // (3) open wormholes send agents back to their spawn cell
  for (int i = 0; i < n; ++i) {
    const size_t idx =
        static_cast<size_t>(state_.positions[i].y) * map_.width + state_.positions[i].x;
    const int w = map_.wormhole_id[idx];
    if (w >= 0 && state_.open[w]) state_.positions[i] = map_.spawn_cells[i];
  }

  // (4) collections permitted by the task
  std::vector<CollectEvent> events = collect(state_.positions);

  // (5) wormhole dynamics
  advance_wormholes(state_, cfg_, rng_);

  // (6)-(7) reward and termination
  auto [treasure_r, complete] = task_reward(cfg_, events, state_.collected);
  const double reward = treasure_r - cfg_.step_penalty;
  state_.t += 1;
  state_.done = complete || state_.t >= cfg_.max_ep_length;
  return make_result(reward, std::move(events));
}

StepResult GridworldEnv::make_result(double reward, std::vector<CollectEvent> events) const {
  StepResult r;
  r.obs.reserve(cfg_.n_agents);
  for (int i = 0; i < cfg_.n_agents; ++i) r.obs.push_back(observation(i));
  r.state = state_vector();
  r.reward = reward;
  r.done = state_.done;
  r.events = std::move(events);
  return r;
}

int GridworldEnv::obs_size() const {
  return 2 + 4 + 5 + 3 * (cfg_.n_agents - 1) + n_active_treasures();
}

int GridworldEnv::state_size() const {
  return cfg_.n_agents * (map_.width + map_.height + 4 + 5 + n_active_treasures());
}

std::vector<double> GridworldEnv::observation(int agent) const {
  const int n = cfg_.n_agents;
  const Cell pos = state_.positions[agent];
  std::vector<double> obs;
  obs.reserve(obs_size());

  obs.push_back(static_cast<double>(pos.x) / map_.width);
  obs.push_back(static_cast<double>(pos.y) / map_.height);

  // wall flags N,E,S,W
  for (int a = 0; a < 4; ++a) {
    const int nx = pos.x + kDx[a];
    const int ny = pos.y + kDy[a];
    obs.push_back(!map_.in_bounds(nx, ny) || map_.is_wall(nx, ny) ? 1.0 : 0.0);
  }

  // rho of current cell then N,E,S,W neighbors; zero where no wormhole
  auto rho_at = [&](int x, int y) {
    if (!map_.in_bounds(x, y)) return 0.0;
    const int w = map_.wormhole_id[static_cast<size_t>(y) * map_.width + x];
    return w >= 0 ? state_.rho[w] : 0.0;
  };
  obs.push_back(rho_at(pos.x, pos.y));
  for (int a = 0; a < 4; ++a) obs.push_back(rho_at(pos.x + kDx[a], pos.y + kDy[a]));

  // relative positions of other agents within proximity_radius (Manhattan)
  const double radius = cfg_.proximity_radius;
  for (int j = 0; j < n; ++j) {
    if (j == agent) continue;
    const Cell other = state_.positions[j];
    const int dist = std::abs(other.x - pos.x) + std::abs(other.y - pos.y);
    if (dist <= cfg_.proximity_radius) {
      obs.push_back((other.x - pos.x) / radius);
      obs.push_back((other.y - pos.y) / radius);
      obs.push_back(1.0);
    } else {
      obs.push_back(0.0);
      obs.push_back(0.0);
      obs.push_back(0.0);
    }
  }

  // own collected flags
  for (int k = 0; k < n_active_treasures(); ++k)
    obs.push_back(state_.collected[static_cast<size_t>(agent) * n + k]);
  return obs;
}

std::vector<double> GridworldEnv::state_vector() const {
  const int n = cfg_.n_agents;
  std::vector<double> s;
  s.reserve(state_size());
  for (int i = 0; i < n; ++i) {
    const Cell pos = state_.positions[i];
    for (int x = 0; x < map_.width; ++x) s.push_back(x == pos.x ? 1.0 : 0.0);
    for (int y = 0; y < map_.height; ++y) s.push_back(y == pos.y ? 1.0 : 0.0);
    for (int a = 0; a < 4; ++a) {
      const int nx = pos.x + kDx[a];
      const int ny = pos.y + kDy[a];
      s.push_back(!map_.in_bounds(nx, ny) || map_.is_wall(nx, ny) ? 1.0 : 0.0);
    }
    auto rho_at = [&](int x, int y) {
      if (!map_.in_bounds(x, y)) return 0.0;
      const int w = map_.wormhole_id[static_cast<size_t>(y) * map_.width + x];
      return w >= 0 ? state_.rho[w] : 0.0;
    };
    s.push_back(rho_at(pos.x, pos.y));
    for (int a = 0; a < 4; ++a) s.push_back(rho_at(pos.x + kDx[a], pos.y + kDy[a]));
    for (int k = 0; k < n_active_treasures(); ++k)
      s.push_back(state_.collected[static_cast<size_t>(i) * n + k]);
  }
  return s;
}

}  // namespace mexplore
