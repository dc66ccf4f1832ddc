#include "gapspec/cli/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "gapspec/core/errors.hpp"

namespace gapspec {

using nlohmann::json;

const char* const kGapspecVersion = "0.3.0";

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw config_error(path + ": " + what);
}

double get_finite(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "must be finite");
  return v;
}

std::vector<int> get_increasing_ints(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array");
  std::vector<int> v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      fail(path + "[" + std::to_string(i) + "]", "expected an integer");
    v.push_back(j[i].get<int>());
    if (v.back() < 1)
      fail(path + "[" + std::to_string(i) + "]", "must be >= 1");
    if (i > 0 && v[i] <= v[i - 1]) fail(path, "must be strictly increasing");
  }
  return v;
}

V2Profile parse_v2(const json& j, const std::string& path) {
  V2Profile p;
  p.mean = 0.0;
  if (j.contains("mean")) p.mean = get_finite(j["mean"], path + ".mean");
  auto parse_terms = [&](const char* key,
                         std::vector<std::pair<int, double>>& out) {
    if (!j.contains(key)) return;
    const json& arr = j[key];
    if (!arr.is_array()) fail(path + "." + key, "expected an array of [k, coeff]");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ipath = path + "." + key + "[" + std::to_string(i) + "]";
      if (!arr[i].is_array() || arr[i].size() != 2)
        fail(ipath, "expected a [k, coeff] pair");
      if (!arr[i][0].is_number_integer()) fail(ipath + "[0]", "expected an integer k");
      const int k = arr[i][0].get<int>();
      if (k < 1) fail(ipath + "[0]", "harmonic index must be >= 1");
      out.emplace_back(k, get_finite(arr[i][1], ipath + "[1]"));
    }
  };
  parse_terms("cos", p.cosines);
  parse_terms("sin", p.sines);
  return p;
}

} // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig c;

  static const std::set<std::string> kinds = {"validate", "spectrum", "sweep",
                                              "evolve", "counterexample"};
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) fail("kind", "expected a string");
    c.kind = j["kind"].get<std::string>();
    if (!kinds.count(c.kind))
      fail("kind", "must be one of validate|spectrum|sweep|evolve|counterexample");
  }
  if (j.contains("out")) {
    if (!j["out"].is_string()) fail("out", "expected a string");
    c.out = j["out"].get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) fail("seed", "expected an integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("threads")) {
    if (!j["threads"].is_number_integer()) fail("threads", "expected an integer");
    c.threads = j["threads"].get<int>();
    if (c.threads < 1) fail("threads", "must be >= 1");
  }

  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (g.contains("L")) {
      c.grid_L = get_finite(g["L"], "grid.L");
      if (!(c.grid_L > 0.0)) fail("grid.L", "must be positive");
    }
    if (g.contains("n")) {
      if (!g["n"].is_number_integer()) fail("grid.n", "expected an integer");
      const long long n = g["n"].get<long long>();
      if (n < 8) fail("grid.n", "must be at least 8");
      if (n % 2 != 0) fail("grid.n", "must be even");
      c.grid_n = static_cast<std::size_t>(n);
    }
  }
  if (j.contains("shifted")) {
    if (!j["shifted"].is_boolean()) fail("shifted", "expected a boolean");
    c.shifted = j["shifted"].get<bool>();
  }

  if (j.contains("potential")) {
    const json& p = j["potential"];
    if (p.contains("Z")) {
      c.potential.Z = get_finite(p["Z"], "potential.Z");
      if (c.potential.Z < 0.0) fail("potential.Z", "must be nonnegative");
    }
    if (p.contains("g")) c.potential.g = get_finite(p["g"], "potential.g");
    if (p.contains("v2")) c.potential.v2 = parse_v2(p["v2"], "potential.v2");
    if (p.contains("h")) {
      if (!p["h"].is_number_integer()) fail("potential.h", "expected an integer");
      c.potential.h = p["h"].get<int>();
      if (c.potential.h < 1) fail("potential.h", "must be >= 1");
    }
    if (p.contains("epsilon_reg")) {
      c.potential.epsilon_reg = get_finite(p["epsilon_reg"], "potential.epsilon_reg");
      if (c.potential.epsilon_reg < 0.0)
        fail("potential.epsilon_reg", "must be nonnegative (0 = default 2*dx)");
    }
    if (p.contains("coupling")) {
      if (!p["coupling"].is_string()) fail("potential.coupling", "expected a string");
      const std::string s = p["coupling"].get<std::string>();
      if (s == "scalar")
        c.potential.coupling = Coupling::scalar;
      else if (s == "beta")
        c.potential.coupling = Coupling::beta;
      else
        fail("potential.coupling", "must be scalar|beta");
    }
  }

  if (j.contains("h_list")) c.h_list = get_increasing_ints(j["h_list"], "h_list");
  if (j.contains("shifts")) {
    const json& s = j["shifts"];
    if (!s.is_array() || s.empty()) fail("shifts", "expected a nonempty array");
    c.shifts.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double v = get_finite(s[i], "shifts[" + std::to_string(i) + "]");
      if (!(v > 0.0)) fail("shifts[" + std::to_string(i) + "]", "must be positive");
      c.shifts.push_back(v);
    }
  }
  if (j.contains("k_max")) {
    if (!j["k_max"].is_number_integer()) fail("k_max", "expected an integer");
    const long long k = j["k_max"].get<long long>();
    if (k < 0) fail("k_max", "must be nonnegative");
    c.k_max = static_cast<std::size_t>(k);
  }
  if (j.contains("delta_edge")) {
    c.delta_edge = get_finite(j["delta_edge"], "delta_edge");
    if (!(c.delta_edge > 0.0) || c.delta_edge >= 1.0)
      fail("delta_edge", "must be in (0, 1)");
  }

  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    if (t.contains("eig")) c.tol_eig = get_finite(t["eig"], "tolerances.eig");
    if (t.contains("solver"))
      c.tol_solver = get_finite(t["solver"], "tolerances.solver");
    if (t.contains("trend_abs"))
      c.trend_abs = get_finite(t["trend_abs"], "tolerances.trend_abs");
    if (t.contains("trend_rel"))
      c.trend_rel = get_finite(t["trend_rel"], "tolerances.trend_rel");
    for (const char* k : {"eig", "solver", "trend_abs", "trend_rel"})
      if (t.contains(k) && !(get_finite(t[k], std::string("tolerances.") + k) > 0.0))
        fail(std::string("tolerances.") + k, "must be positive");
  }

  if (j.contains("evolution")) {
    const json& e = j["evolution"];
    if (e.contains("dt")) {
      c.evo_dt = get_finite(e["dt"], "evolution.dt");
      if (!(c.evo_dt > 0.0)) fail("evolution.dt", "must be positive");
    }
    if (e.contains("T")) {
      c.evo_T = get_finite(e["T"], "evolution.T");
      if (c.evo_T < 0.0) fail("evolution.T", "must be nonnegative");
    }
    if (e.contains("u0")) {
      const json& u = e["u0"];
      if (u.contains("center")) c.u0_center = get_finite(u["center"], "evolution.u0.center");
      if (u.contains("sigma")) {
        c.u0_sigma = get_finite(u["sigma"], "evolution.u0.sigma");
        if (!(c.u0_sigma > 0.0)) fail("evolution.u0.sigma", "must be positive");
      }
    }
    if (e.contains("operator")) {
      if (!e["operator"].is_string()) fail("evolution.operator", "expected a string");
      const std::string s = e["operator"].get<std::string>();
      if (s != "full" && s != "point" && s != "cplus")
        fail("evolution.operator", "must be full|point|cplus");
      c.evo_operator = s;
    }
  }

  if (j.contains("probes")) {
    const json& p = j["probes"];
    if (!p.is_array() || p.empty()) fail("probes", "expected a nonempty array");
    c.probes.clear();
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::string ipath = "probes[" + std::to_string(i) + "]";
      ExperimentConfig::ProbeSpec ps;
      if (p[i].contains("center")) ps.center = get_finite(p[i]["center"], ipath + ".center");
      if (p[i].contains("sigma")) {
        ps.sigma = get_finite(p[i]["sigma"], ipath + ".sigma");
        if (!(ps.sigma > 0.0)) fail(ipath + ".sigma", "must be positive");
      }
      c.probes.push_back(ps);
    }
  }

  if (j.contains("weak_star")) {
    const json& w = j["weak_star"];
    if (w.contains("h_list"))
      c.weak_star_h = get_increasing_ints(w["h_list"], "weak_star.h_list");
    if (w.contains("phi")) {
      const json& p = w["phi"];
      if (p.contains("center"))
        c.weak_star_phi.center = get_finite(p["center"], "weak_star.phi.center");
      if (p.contains("sigma")) {
        c.weak_star_phi.sigma = get_finite(p["sigma"], "weak_star.phi.sigma");
        if (!(c.weak_star_phi.sigma > 0.0)) fail("weak_star.phi.sigma", "must be positive");
      }
      if (p.contains("halfwidth")) {
        c.weak_star_phi.halfwidth = get_finite(p["halfwidth"], "weak_star.phi.halfwidth");
        if (!(c.weak_star_phi.halfwidth > 0.0))
          fail("weak_star.phi.halfwidth", "must be positive");
      }
    }
  }

  if (j.contains("wells")) {
    const json& w = j["wells"];
    if (w.contains("h_list")) c.wells_h = get_increasing_ints(w["h_list"], "wells.h_list");
    if (w.contains("length")) {
      c.wells_length = get_finite(w["length"], "wells.length");
      if (!(c.wells_length > 0.0)) fail("wells.length", "must be positive");
    }
    if (w.contains("dx")) {
      c.wells_dx = get_finite(w["dx"], "wells.dx");
      if (!(c.wells_dx > 0.0)) fail("wells.dx", "must be positive");
    }
    if (w.contains("shift")) {
      c.wells_shift = get_finite(w["shift"], "wells.shift");
      if (!(c.wells_shift > 0.0)) fail("wells.shift", "must be positive");
    }
  }

  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config file not readable: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string config_to_json(const ExperimentConfig& c) {
  json j;
  j["kind"] = c.kind;
  j["out"] = c.out;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["grid"] = {{"L", c.grid_L}, {"n", c.grid_n}};
  j["shifted"] = c.shifted;
  json v2;
  v2["mean"] = c.potential.v2.mean;
  v2["cos"] = json::array();
  for (const auto& [k, a] : c.potential.v2.cosines) v2["cos"].push_back({k, a});
  v2["sin"] = json::array();
  for (const auto& [k, b] : c.potential.v2.sines) v2["sin"].push_back({k, b});
  j["potential"] = {{"Z", c.potential.Z},
                    {"g", c.potential.g},
                    {"v2", v2},
                    {"h", c.potential.h},
                    {"epsilon_reg", c.potential.epsilon_reg},
                    {"coupling", c.potential.coupling == Coupling::scalar
                                     ? "scalar"
                                     : "beta"}};
  j["h_list"] = c.h_list;
  j["shifts"] = c.shifts;
  j["k_max"] = c.k_max;
  j["delta_edge"] = c.delta_edge;
  j["tolerances"] = {{"eig", c.tol_eig},
                     {"solver", c.tol_solver},
                     {"trend_abs", c.trend_abs},
                     {"trend_rel", c.trend_rel}};
  j["evolution"] = {{"dt", c.evo_dt},
                    {"T", c.evo_T},
                    {"u0", {{"center", c.u0_center}, {"sigma", c.u0_sigma}}},
                    {"operator", c.evo_operator}};
  j["probes"] = json::array();
  for (const auto& p : c.probes)
    j["probes"].push_back({{"center", p.center}, {"sigma", p.sigma}});
  j["weak_star"] = {{"h_list", c.weak_star_h},
                    {"phi",
                     {{"center", c.weak_star_phi.center},
                      {"sigma", c.weak_star_phi.sigma},
                      {"halfwidth", c.weak_star_phi.halfwidth}}}};
  j["wells"] = {{"h_list", c.wells_h},
                {"length", c.wells_length},
                {"dx", c.wells_dx},
                {"shift", c.wells_shift}};
  return j.dump(2);
}

} // namespace gapspec
