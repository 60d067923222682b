#include "uavfog/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "uavfog/rng.hpp"

namespace uavfog {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorKind::Config, what);
}

// Reads keys from one JSON object and rejects anything left unread.
class Section {
 public:
  Section(const ordered_json& root, std::string name) : name_(std::move(name)) {
    if (root.contains(name_)) {
      obj_ = &root.at(name_);
      if (!obj_->is_object()) fail("section '" + name_ + "' must be an object");
    }
  }
  Section(const ordered_json& obj, std::string name, bool)
      : name_(std::move(name)), obj_(&obj) {
    if (!obj_->is_object()) fail("'" + name_ + "' must be an object");
  }

  void number(const char* key, double& out) {
    if (const auto* v = find(key)) {
      if (!v->is_number()) fail(path(key) + " must be a number");
      out = v->get<double>();
    }
  }
  void count(const char* key, std::size_t& out) {
    if (const auto* v = find(key)) {
      if (!v->is_number_unsigned()) fail(path(key) + " must be a non-negative integer");
      out = v->get<std::size_t>();
    }
  }
  void seed(const char* key, std::uint64_t& out) {
    if (const auto* v = find(key)) {
      if (!v->is_number_unsigned()) fail(path(key) + " must be a non-negative integer");
      out = v->get<std::uint64_t>();
    }
  }
  void boolean(const char* key, bool& out) {
    if (const auto* v = find(key)) {
      if (!v->is_boolean()) fail(path(key) + " must be a boolean");
      out = v->get<bool>();
    }
  }
  // null means unbounded
  void bound(const char* key, double& out) {
    if (const auto* v = find(key)) {
      if (v->is_null()) {
        out = std::numeric_limits<double>::infinity();
      } else if (v->is_number()) {
        out = v->get<double>();
      } else {
        fail(path(key) + " must be a number or null");
      }
    }
  }
  const ordered_json* find(const char* key) {
    seen_.insert(key);
    if (obj_ == nullptr || !obj_->contains(key)) return nullptr;
    return &obj_->at(key);
  }
  void finish() const {
    if (obj_ == nullptr) return;
    for (const auto& [k, v] : obj_->items()) {
      if (!seen_.count(k)) fail("unknown key '" + path(k.c_str()) + "'");
    }
  }
  std::string path(const char* key) const { return name_ + "." + key; }

 private:
  std::string name_;
  const ordered_json* obj_ = nullptr;
  std::set<std::string> seen_;
};

ordered_json bound_json(double v) {
  return std::isinf(v) && v > 0 ? ordered_json(nullptr) : ordered_json(v);
}

}  // namespace

void Config::validate() const {
  Scenario probe;
  probe.area_width = scenario.area_width;
  probe.area_height = scenario.area_height;
  probe.altitude = scenario.altitude_h;
  probe.n_uavs = scenario.n_uavs;
  probe.comm_radius = scenario.comm_radius_gamma;
  probe.initial_energy = scenario.initial_energy;
  probe.energy = energy;
  if (scenario.users) probe.users = *scenario.users;
  probe.validate();
  woa.validate();
  pso.validate();
  sim.validate();
  if (sim.frame_duration != energy.frame_duration) {
    fail("sim.frame_duration and energy.frame_duration disagree");
  }
}

Config parse_config(std::string_view json_text) {
  ordered_json root;
  try {
    root = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("config document must be a JSON object");

  static const std::set<std::string> kSections = {"scenario", "energy", "woa",
                                                  "pso", "sim", "ecnsa"};
  for (const auto& [k, v] : root.items()) {
    if (!kSections.count(k)) fail("unknown section '" + k + "'");
  }

  Config c;
  {
    Section s(root, "scenario");
    auto& sc = c.scenario;
    s.number("area_width", sc.area_width);
    s.number("area_height", sc.area_height);
    s.number("altitude_h", sc.altitude_h);
    s.count("n_uavs", sc.n_uavs);
    const bool has_n_users = s.find("n_users") != nullptr;
    s.count("n_users", sc.n_users);
    s.number("comm_radius_gamma", sc.comm_radius_gamma);
    s.number("initial_energy", sc.initial_energy);
    s.seed("seed", sc.seed);
    if (const auto* v = s.find("coverage_mode")) {
      if (!v->is_string()) fail("scenario.coverage_mode must be a string");
      sc.coverage_mode = coverage_mode_from_string(v->get<std::string>());
    }
    if (const auto* v = s.find("users")) {
      if (!v->is_array()) fail("scenario.users must be an array");
      std::vector<UserNode> users;
      for (const auto& item : *v) {
        Section u(item, "scenario.users[]", true);
        UserNode node;
        u.count("id", node.id);
        u.number("x", node.pos.x);
        u.number("y", node.pos.y);
        u.boolean("active", node.active);
        if (!item.contains("x") || !item.contains("y") || !item.contains("id")) {
          fail("scenario.users[] entries need id, x and y");
        }
        u.finish();
        users.push_back(node);
      }
      if (has_n_users && sc.n_users != users.size()) {
        fail("scenario.n_users does not match the number of users listed");
      }
      sc.n_users = users.size();
      sc.users = std::move(users);
    }
    s.finish();
  }
  {
    Section s(root, "energy");
    auto& e = c.energy;
    s.number("p_hover", e.p_hover);
    s.number("p_travel", e.p_travel);
    s.number("cruise_speed", e.cruise_speed);
    s.number("p_transmit_uav", e.p_transmit_uav);
    s.number("p_receive_uav", e.p_receive_uav);
    s.number("p_transmit_user", e.p_transmit_user);
    s.number("p_transmit_uav_dl", e.p_transmit_uav_dl);
    s.number("bandwidth", e.bandwidth);
    s.number("beta0", e.beta0);
    s.number("noise_sigma2", e.noise_sigma2);
    s.number("input_data_bits", e.input_data_bits);
    s.number("output_data_bits", e.output_data_bits);
    s.number("frame_duration", e.frame_duration);
    s.finish();
  }
  {
    Section s(root, "woa");
    auto& w = c.woa;
    s.count("pop_size", w.pop_size);
    s.count("max_iters", w.max_iters);
    s.number("spiral_b", w.spiral_b);
    s.seed("seed", w.seed);
    s.boolean("adaptive", w.adaptive);
    s.count("stagnation_window", w.stagnation_window);
    s.number("a_boost", w.a_boost);
    s.count("focus_uavs", w.focus_uavs);
    s.count("threads", w.threads);
    s.finish();
  }
  {
    Section s(root, "pso");
    auto& p = c.pso;
    s.count("pop_size", p.pop_size);
    s.count("max_iters", p.max_iters);
    s.number("inertia", p.inertia);
    s.number("cognitive", p.cognitive);
    s.number("social", p.social);
    s.number("velocity_clamp", p.velocity_clamp);
    s.seed("seed", p.seed);
    s.count("threads", p.threads);
    s.finish();
  }
  {
    Section s(root, "sim");
    auto& m = c.sim;
    s.count("n_frames", m.n_frames);
    const bool has_frame = s.find("frame_duration") != nullptr;
    s.number("frame_duration", m.frame_duration);
    s.number("user_toggle_prob", m.user_toggle_prob);
    s.number("user_jitter_sigma", m.user_jitter_sigma);
    s.boolean("ecnsa_enabled", m.ecnsa_enabled);
    s.number("reopt_trigger", m.reopt_trigger);
    s.number("coverage_floor", m.coverage_floor);
    s.finish();

    // One frame length feeds both the energy model and the simulator; either
    // section may set it, and setting both to different values is an error.
    const bool energy_has_frame =
        root.contains("energy") && root["energy"].contains("frame_duration");
    if (has_frame && !energy_has_frame) c.energy.frame_duration = m.frame_duration;
    if (!has_frame && energy_has_frame) m.frame_duration = c.energy.frame_duration;
  }
  {
    Section s(root, "ecnsa");
    s.boolean("neighbors_only", c.sim.swap.neighbors_only);
    s.bound("benefit_margin_j", c.sim.swap.benefit_margin_j);
    s.finish();
  }
  c.validate();
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_json(const Config& c) {
  ordered_json root;
  const auto& sc = c.scenario;
  ordered_json scen;
  scen["area_width"] = sc.area_width;
  scen["area_height"] = sc.area_height;
  scen["altitude_h"] = sc.altitude_h;
  scen["n_uavs"] = sc.n_uavs;
  scen["n_users"] = sc.users ? sc.users->size() : sc.n_users;
  scen["comm_radius_gamma"] = sc.comm_radius_gamma;
  scen["initial_energy"] = sc.initial_energy;
  scen["seed"] = sc.seed;
  scen["coverage_mode"] = std::string(to_string(sc.coverage_mode));
  if (sc.users) {
    ordered_json users = ordered_json::array();
    for (const auto& u : *sc.users) {
      users.push_back({{"id", u.id}, {"x", u.pos.x}, {"y", u.pos.y}, {"active", u.active}});
    }
    scen["users"] = std::move(users);
  }
  root["scenario"] = std::move(scen);

  const auto& e = c.energy;
  root["energy"] = {
      {"p_hover", e.p_hover},
      {"p_travel", e.p_travel},
      {"cruise_speed", e.cruise_speed},
      {"p_transmit_uav", e.p_transmit_uav},
      {"p_receive_uav", e.p_receive_uav},
      {"p_transmit_user", e.p_transmit_user},
      {"p_transmit_uav_dl", e.p_transmit_uav_dl},
      {"bandwidth", e.bandwidth},
      {"beta0", e.beta0},
      {"noise_sigma2", e.noise_sigma2},
      {"input_data_bits", e.input_data_bits},
      {"output_data_bits", e.output_data_bits},
      {"frame_duration", e.frame_duration},
  };
  const auto& w = c.woa;
  root["woa"] = {
      {"pop_size", w.pop_size},
      {"max_iters", w.max_iters},
      {"spiral_b", w.spiral_b},
      {"seed", w.seed},
      {"adaptive", w.adaptive},
      {"stagnation_window", w.stagnation_window},
      {"a_boost", w.a_boost},
      {"focus_uavs", w.focus_uavs},
      {"threads", w.threads},
  };
  const auto& p = c.pso;
  root["pso"] = {
      {"pop_size", p.pop_size},
      {"max_iters", p.max_iters},
      {"inertia", p.inertia},
      {"cognitive", p.cognitive},
      {"social", p.social},
      {"velocity_clamp", p.velocity_clamp},
      {"seed", p.seed},
      {"threads", p.threads},
  };
  const auto& m = c.sim;
  root["sim"] = {
      {"n_frames", m.n_frames},
      {"frame_duration", m.frame_duration},
      {"user_toggle_prob", m.user_toggle_prob},
      {"user_jitter_sigma", m.user_jitter_sigma},
      {"ecnsa_enabled", m.ecnsa_enabled},
      {"reopt_trigger", m.reopt_trigger},
      {"coverage_floor", m.coverage_floor},
  };
  root["ecnsa"] = {
      {"neighbors_only", m.swap.neighbors_only},
      {"benefit_margin_j", bound_json(m.swap.benefit_margin_j)},
  };
  return root.dump(2) + "\n";
}

std::vector<std::string> range_warnings(const Config& c) {
  std::vector<std::string> out;
  auto check = [&](const char* name, double v, double lo, double hi) {
    if (v < lo || v > hi) {
      std::ostringstream msg;
      msg << name << " = " << v << " is outside the studied range [" << lo
          << ", " << hi << "]";
      out.push_back(msg.str());
    }
  };
  const auto& sc = c.scenario;
  check("n_uavs", static_cast<double>(sc.n_uavs), 10, 120);
  check("n_users", static_cast<double>(sc.users ? sc.users->size() : sc.n_users), 30, 200);
  check("comm_radius_gamma", sc.comm_radius_gamma, 90, 200);
  check("altitude_h", sc.altitude_h, 300, 600);
  check("frame_duration", c.sim.frame_duration, 20 * 60, 60 * 60);
  return out;
}

GeneratedScenario generate_scenario(const Config& c) {
  c.validate();
  const auto& sc = c.scenario;
  Scenario s;
  s.area_width = sc.area_width;
  s.area_height = sc.area_height;
  s.altitude = sc.altitude_h;
  s.n_uavs = sc.n_uavs;
  s.comm_radius = sc.comm_radius_gamma;
  s.energy = c.energy;
  s.initial_energy = sc.initial_energy;
  s.seed = sc.seed;
  s.coverage_mode = sc.coverage_mode;
  if (sc.users) {
    s.users = *sc.users;
  } else {
    const CounterRng rng(sc.seed);
    s.users.reserve(sc.n_users);
    for (std::size_t k = 0; k < sc.n_users; ++k) {
      const auto id = static_cast<std::uint32_t>(k);
      s.users.push_back({k,
                         {rng.uniform(Stream::Users, 0, id, 0) * sc.area_width,
                          rng.uniform(Stream::Users, 0, id, 1) * sc.area_height},
                         true});
    }
  }
  s.validate();
  return {std::move(s), range_warnings(c)};
}

Config with_users(Config config, const Scenario& scenario) {
  config.scenario.users = scenario.users;
  config.scenario.n_users = scenario.users.size();
  return config;
}

}  // namespace uavfog
