// Copyright 2026 The tvec Authors
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
#include "run_config.hpp"

#include <fstream>

#include "tvec/characters.hpp"

namespace tvec::cli {

using nlohmann::json;

namespace {

template <class T>
T get_or(const json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: bad value for '") + key + "': " + e.what());
  }
}

cplx parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError("config: expected a number or [re, im], got " + j.dump());
}

}  // namespace

// {"value": c, "conductor": m, "exponents": [e1, ...]}; every field optional.
MultChar parse_char(int p, const json& j) {
  if (j.is_null()) return MultChar::trivial(p);
  if (!j.is_object()) throw ConfigError("config: character must be an object: " + j.dump());
  const cplx value = j.contains("value") ? parse_complex(j.at("value")) : cplx(1.0, 0.0);
  const int m = get_or<int>(j, "conductor", 0);
  if (m == 0) return MultChar::unramified(p, value);
  const auto exps = get_or<std::vector<i64>>(j, "exponents", {1});
  try {
    return MultChar(value, UnitChar::from_exponents(p, m, exps));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

RepSpec parse_rep(int p, const json& j) {
  const std::string kind = get_or<std::string>(j, "kind", "");
  try {
    if (kind == "principal") {
      return RepSpec::principal(parse_char(p, j.value("mu", json())),
                                parse_char(p, j.value("mu_prime", json())));
    }
    if (kind == "special_quotient") return RepSpec::special_quotient(parse_char(p, j.value("eta", json())));
    if (kind == "special_subspace") return RepSpec::special_subspace(parse_char(p, j.value("eta", json())));
    if (kind == "stub") {
      return RepSpec::stub(p, get_or<int>(j, "conductor", 2), parse_char(p, j.value("omega", json())),
                           get_or<std::string>(j, "label", "stub"), get_or<bool>(j, "minimal", true));
    }
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  throw ConfigError("config: unknown representation kind '" + kind + "'");
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  RunConfig cfg;
  cfg.source = doc;
  cfg.p = get_or<int>(doc, "p", 2);
  if (!is_prime(cfg.p)) throw ConfigError("config: p = " + std::to_string(cfg.p) + " is not prime");
  cfg.N = get_or<int>(doc, "N", 6);
  if (cfg.N < 2) throw ConfigError("config: N must be at least 2");
  cfg.budget = get_or<i64>(doc, "budget", cfg.budget);
  if (cfg.budget <= 0) throw ConfigError("config: budget must be positive");
  cfg.tolerance = get_or<double>(doc, "tolerance", cfg.tolerance);
  cfg.radius = get_or<int>(doc, "radius", cfg.radius);
  if (cfg.radius < 1 || cfg.radius > 24) throw ConfigError("config: radius out of range [1, 24]");
  cfg.seed = get_or<std::uint64_t>(doc, "seed", cfg.seed);
  cfg.spherical = get_or<int>(doc, "spherical", 0);
  cfg.verify_h = get_or<bool>(doc, "verify_h", true);
  cfg.cross_check_kernel = get_or<bool>(doc, "cross_check_kernel", true);
  if (doc.contains("fault")) cfg.alpha_fault = get_or<double>(doc.at("fault"), "alpha_scale", 1.0);
  cfg.report_path = get_or<std::string>(doc, "report", "");
  if (doc.contains("representations")) {
    const json& reps = doc.at("representations");
    if (!reps.is_array() || reps.size() != 3) {
      throw ConfigError("config: 'representations' must list exactly three");
    }
    for (const json& r : reps) cfg.specs.push_back(parse_rep(cfg.p, r));
  }
  if (doc.contains("paths")) {
    for (const json& pj : doc.at("paths")) {
      PathSpec ps{get_or<int>(pj, "n", 0), get_or<int>(pj, "offset", 0)};
      if (ps.n < 0) throw ConfigError("config: path length must be nonnegative");
      if (ps.n + std::abs(ps.offset) >= cfg.N) {
        throw ConfigError("config: path beyond the working precision N");
      }
      cfg.paths.push_back(ps);
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return parse_config(doc);
}

std::array<RepSpec, 3> triple(const RunConfig& cfg) {
  if (cfg.specs.size() != 3) throw ConfigError("config: this command needs three representations");
  return {cfg.specs[0], cfg.specs[1], cfg.specs[2]};
}

}  // namespace tvec::cli
