// Copyright 2026 The alphagrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alphagrad/envs/registry.h"

#include <functional>
#include <map>

#include "alphagrad/envs/ball_wall.h"
#include "alphagrad/envs/coulomb.h"
#include "alphagrad/envs/double_pendulum.h"
#include "alphagrad/envs/friction.h"
#include "alphagrad/envs/heaviside.h"
#include "alphagrad/envs/momentum_transfer.h"
#include "alphagrad/envs/pushing.h"
#include "alphagrad/envs/quadratic.h"
#include "alphagrad/envs/tennis.h"
#include "alphagrad/json_params.h"

namespace alphagrad {
namespace {

template <std::size_t K>
std::array<double, K> ReadArray(ParamReader& r, const std::string& key,
                                const std::array<double, K>& fallback) {
  const auto v = r.Numbers(key, {fallback.begin(), fallback.end()});
  if (v.size() != K) {
    throw ConfigError("env.params." + key + ": expected " + std::to_string(K) +
                          " numbers",
                      key);
  }
  std::array<double, K> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

EnvEntry Heaviside(ParamReader& r) {
  r.Finish();
  return {std::make_shared<HeavisideEnv>(), {1.0, 0.1, 0.5, 1000}};
}

EnvEntry Coulomb(ParamReader& r) {
  const double nu = r.Number("nu", 0.1);
  r.Finish();
  return {std::make_shared<CoulombEnv>(nu), {1.0, 0.1, 0.5, 1000}};
}

EnvEntry BallWall(ParamReader& r) {
  BallWallParams p;
  p.speed = r.Number("speed", p.speed);
  p.gravity = r.Number("gravity", p.gravity);
  p.wall_distance = r.Number("wall_distance", p.wall_distance);
  p.wall_height = r.Number("wall_height", p.wall_height);
  p.initial_angle = r.Number("initial_angle", p.initial_angle);
  r.Finish();
  return {std::make_shared<BallWallEnv>(p), {0.03, 0.002, 1.0, 10000}};
}

EnvEntry Momentum(ParamReader& r) {
  MomentumTransferParams p;
  p.half_length = r.Number("half_length", p.half_length);
  p.mass = r.Number("mass", p.mass);
  p.speed = r.Number("speed", p.speed);
  p.miss_penalty = r.Number("miss_penalty", p.miss_penalty);
  p.initial_offset = r.Number("initial_offset", p.initial_offset);
  r.Finish();
  return {std::make_shared<MomentumTransferEnv>(p), {0.2, 0.02, 2.0, 10000}};
}

EnvEntry Pushing(ParamReader& r) {
  PushingParams p;
  p.mass1 = r.Number("mass1", p.mass1);
  p.mass2 = r.Number("mass2", p.mass2);
  p.half_width1 = r.Number("half_width1", p.half_width1);
  p.half_width2 = r.Number("half_width2", p.half_width2);
  p.stiffness = r.Number("k", p.stiffness);
  p.damping = r.Number("damping", p.damping);
  p.timestep = r.Number("dt", p.timestep);
  p.horizon = r.Integer("horizon", p.horizon);
  p.goal = r.Number("goal", p.goal);
  p.initial_position1 = r.Number("initial_position1", p.initial_position1);
  p.initial_position2 = r.Number("initial_position2", p.initial_position2);
  p.initial_force = r.Number("initial_force", p.initial_force);
  r.Finish();
  return {std::make_shared<PushingEnv>(p), {0.1, 1e-3, 50.0, 1000}};
}

EnvEntry Friction(ParamReader& r) {
  FrictionParams p;
  p.friction_coefficient = r.Number("mu", p.friction_coefficient);
  p.normal_force = r.Number("normal_force", p.normal_force);
  p.slip_tolerance = r.Number("nu", p.slip_tolerance);
  p.half_length = r.Number("half_length", p.half_length);
  p.carrier_mass = r.Number("carrier_mass", p.carrier_mass);
  p.box_mass = r.Number("box_mass", p.box_mass);
  p.timestep = r.Number("dt", p.timestep);
  p.horizon = r.Integer("horizon", p.horizon);
  p.goal = r.Number("goal", p.goal);
  p.input_weight = r.Number("input_weight", p.input_weight);
  p.initial_force = r.Number("initial_force", p.initial_force);
  r.Finish();
  return {std::make_shared<FrictionEnv>(p), {0.5, 1e-3, 50.0, 1000}};
}

EnvEntry Pendulum(ParamReader& r) {
  DoublePendulumParams p;
  p.mass1 = r.Number("mass1", p.mass1);
  p.mass2 = r.Number("mass2", p.mass2);
  p.length1 = r.Number("length1", p.length1);
  p.length2 = r.Number("length2", p.length2);
  p.gravity = r.Number("gravity", p.gravity);
  p.timestep = r.Number("dt", p.timestep);
  p.horizon = r.Integer("horizon", p.horizon);
  p.goal = ReadArray(r, "goal", p.goal);
  p.initial_angles = ReadArray(r, "initial_angles", p.initial_angles);
  p.initial_velocities =
      ReadArray(r, "initial_velocities", p.initial_velocities);
  r.Finish();
  return {std::make_shared<DoublePendulumEnv>(p), {0.05, 1e-3, 50.0, 1000}};
}

EnvEntry Tennis(ParamReader& r) {
  TennisParams p;
  p.gravity = r.Number("gravity", p.gravity);
  p.restitution = r.Number("restitution", p.restitution);
  p.timestep = r.Number("dt", p.timestep);
  p.horizon = r.Integer("horizon", p.horizon);
  p.target_x = r.Number("target_x", p.target_x);
  p.target_y = r.Number("target_y", p.target_y);
  p.paddle_half_length = r.Number("paddle_half_length", p.paddle_half_length);
  p.input_weight = r.Number("input_weight", p.input_weight);
  p.max_impacts = r.Integer("max_impacts", p.max_impacts);
  p.ball_x = r.Number("ball_x", p.ball_x);
  p.ball_y = r.Number("ball_y", p.ball_y);
  p.ball_vx = r.Number("ball_vx", p.ball_vx);
  p.ball_vy = r.Number("ball_vy", p.ball_vy);
  p.paddle_x = r.Number("paddle_x", p.paddle_x);
  p.paddle_y = r.Number("paddle_y", p.paddle_y);
  r.Finish();
  return {std::make_shared<TennisEnv>(p), {0.1, 1e-3, 50.0, 1000}};
}

EnvEntry Quadratic(ParamReader& r) {
  QuadraticParams p;
  p.horizon = r.Integer("horizon", p.horizon);
  p.gain = r.Number("gain", p.gain);
  p.state_weight = r.Number("state_weight", p.state_weight);
  p.input_weight = r.Number("input_weight", p.input_weight);
  p.linear_weight = r.Number("linear_weight", p.linear_weight);
  p.constant = r.Number("constant", p.constant);
  p.initial_state = r.Number("initial_state", p.initial_state);
  p.initial_input = r.Number("initial_input", p.initial_input);
  r.Finish();
  return {std::make_shared<QuadraticEnv>(p), {0.1, 0.25, 1.0, 1000}};
}

const std::map<std::string, std::function<EnvEntry(ParamReader&)>>&
Factories() {
  static const auto* factories =
      new std::map<std::string, std::function<EnvEntry(ParamReader&)>>{
          {"ball_wall", BallWall}, {"coulomb", Coulomb},
          {"friction", Friction},  {"heaviside", Heaviside},
          {"momentum", Momentum},  {"pendulum", Pendulum},
          {"pushing", Pushing},    {"quadratic", Quadratic},
          {"tennis", Tennis},
      };
  return *factories;
}

}  // namespace

EnvEntry MakeEnv(const std::string& name, const nlohmann::json& params) {
  const auto it = Factories().find(name);
  if (it == Factories().end()) {
    throw ConfigError("unknown environment '" + name + "'", "name");
  }
  ParamReader reader(params, "env.params");
  return it->second(reader);
}

std::vector<std::string> EnvNames() {
  std::vector<std::string> names;
  for (const auto& [name, factory] : Factories()) names.push_back(name);
  return names;
}

}  // namespace alphagrad
