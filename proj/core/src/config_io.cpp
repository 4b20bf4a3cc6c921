#include "simplex/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace simplex {

using nlohmann::json;

namespace {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

Location locate(const std::string& text, std::size_t byte) {
  Location loc;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto loc = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), loc.line, loc.column);
  }
}

void apply_override(json& root, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ValidationError({{ErrorCode::InvalidArgument, "override '" + spec + "' is not key=value"}});
  }
  const std::string path = spec.substr(0, eq);
  const std::string raw = spec.substr(eq + 1);
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;

  json* node = &root;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot - start);
    if (key.empty()) {
      throw ValidationError({{ErrorCode::InvalidArgument, "empty key in override '" + spec + "'"}});
    }
    if (!node->is_object()) *node = json::object();
    if (dot == std::string::npos) {
      (*node)[key] = value;
      return;
    }
    node = &(*node)[key];
    start = dot + 1;
  }
}

// Schema reader that collects every problem instead of stopping at the first.
class Reader {
 public:
  std::vector<Issue> issues;

  void fail(const std::string& where, const std::string& what) {
    issues.push_back({ErrorCode::ParseError, where + ": " + what});
  }

  bool expect_object(const json& j, const std::string& where,
                     std::initializer_list<const char*> allowed) {
    if (!j.is_object()) {
      fail(where, "expected an object");
      return false;
    }
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items()) {
      if (!keys.contains(k)) fail(where, "unknown key '" + k + "'");
    }
    return true;
  }

  template <class T>
  bool get(const json& j, const char* key, const std::string& where, T& out) {
    if (!j.contains(key)) return false;
    try {
      out = j.at(key).get<T>();
      return true;
    } catch (const json::exception&) {
      fail(where + "." + key, "wrong type");
      return false;
    }
  }

  std::vector<std::pair<double, double>> pairs(const json& j, const std::string& where) {
    std::vector<std::pair<double, double>> out;
    if (!j.is_array()) {
      fail(where, "expected an array of pairs");
      return out;
    }
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        fail(where, "expected [number, number]");
        continue;
      }
      out.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return out;
  }

  Fitness fitness(const json& j) {
    const std::string w = "fitness";
    if (!expect_object(j, w, {"kind", "f0", "map", "param", "beta", "entries"})) return {};
    std::string kind = "constant";
    get(j, "kind", w, kind);
    if (kind == "constant") {
      double f0 = 1.0;
      get(j, "f0", w, f0);
      return Fitness::constant(f0);
    }
    if (kind == "product") {
      ScalarMap g;
      std::string name = "identity";
      get(j, "map", w, name);
      try {
        g.kind = parse_scalar_map_kind(name);
      } catch (const Error& e) {
        fail(w + ".map", e.what());
      }
      get(j, "param", w, g.param);
      return Fitness::product(g);
    }
    if (kind == "energy-exp") {
      double beta = 1.0;
      get(j, "beta", w, beta);
      return Fitness::energy_exp(beta);
    }
    if (kind == "table") {
      std::map<FaceType, double> entries;
      if (!j.contains("entries") || !j["entries"].is_array()) {
        fail(w + ".entries", "expected [[[w, ...], f], ...]");
        return {};
      }
      for (const auto& e : j["entries"]) {
        try {
          auto ws = e.at(0).get<std::vector<double>>();
          std::sort(ws.begin(), ws.end());
          entries[FaceType(std::move(ws))] = e.at(1).get<double>();
        } catch (const json::exception&) {
          fail(w + ".entries", "expected [[w, ...], f]");
        }
      }
      return Fitness::table(std::move(entries));
    }
    fail(w + ".kind", "unknown fitness kind '" + kind + "'");
    return {};
  }

  WeightLaw weights(const json& j) {
    const std::string w = "weights";
    if (!expect_object(j, w, {"kind", "atoms", "grid"})) return {};
    std::string kind = "uniform01";
    get(j, "kind", w, kind);
    if (kind == "uniform01") return WeightLaw::uniform01();
    if (kind == "finite") {
      std::vector<Atom> atoms;
      for (auto [v, p] : pairs(j.value("atoms", json::array()), w + ".atoms")) atoms.push_back({v, p});
      return WeightLaw::finite(std::move(atoms));
    }
    if (kind == "table-cdf") {
      std::vector<CdfPoint> grid;
      for (auto [v, c] : pairs(j.value("grid", json::array()), w + ".grid")) grid.push_back({v, c});
      return WeightLaw::table_cdf(std::move(grid));
    }
    fail(w + ".kind", "unknown weight law '" + kind + "'");
    return {};
  }

  InitialComplexSpec initial(const json& j) {
    const std::string w = "initial";
    InitialComplexSpec spec;
    if (!expect_object(j, w, {"kind", "faces", "weights"})) return spec;
    std::string kind = "simplex";
    get(j, "kind", w, kind);
    if (kind == "faces") {
      spec.kind = InitialComplexSpec::Kind::Faces;
    } else if (kind != "simplex") {
      fail(w + ".kind", "unknown initial complex '" + kind + "'");
    }
    get(j, "faces", w, spec.faces);
    if (j.contains("weights")) {
      for (auto [l, x] : pairs(j["weights"], w + ".weights")) {
        spec.weights.emplace_back(static_cast<Label>(l), x);
      }
    }
    return spec;
  }
};

}  // namespace

ModelConfig parse_config(const std::string& json_text, std::span<const std::string> overrides) {
  json root = parse_json(json_text);
  for (const auto& o : overrides) apply_override(root, o);

  Reader r;
  ModelConfig cfg;
  if (r.expect_object(root, "config", {"d", "variant", "seed", "fitness", "weights", "initial"})) {
    r.get(root, "d", "config", cfg.d);
    r.get(root, "seed", "config", cfg.seed);
    std::string variant;
    if (r.get(root, "variant", "config", variant)) {
      try {
        cfg.variant = parse_variant(variant);
      } catch (const Error& e) {
        r.fail("config.variant", e.what());
      }
    }
    if (root.contains("fitness")) cfg.fitness = r.fitness(root["fitness"]);
    if (root.contains("weights")) cfg.weights = r.weights(root["weights"]);
    if (root.contains("initial")) cfg.initial = r.initial(root["initial"]);
  }
  if (!r.issues.empty()) throw ValidationError(std::move(r.issues));
  return validate_config(std::move(cfg));
}

ModelConfig load_config(const std::string& path, std::span<const std::string> overrides) {
  if (path.empty()) return parse_config("{}", overrides);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), overrides);
}

std::string config_to_json(const ModelConfig& cfg, int indent) {
  json j;
  j["d"] = cfg.d;
  j["variant"] = to_string(cfg.variant);
  j["seed"] = cfg.seed;

  json f;
  f["kind"] = to_string(cfg.fitness.kind());
  switch (cfg.fitness.kind()) {
    case Fitness::Kind::Constant:
      f["f0"] = cfg.fitness.f0();
      break;
    case Fitness::Kind::Product:
      f["map"] = cfg.fitness.scalar_map().name();
      f["param"] = cfg.fitness.scalar_map().param;
      break;
    case Fitness::Kind::EnergyExp:
      f["beta"] = cfg.fitness.beta();
      break;
    case Fitness::Kind::Table: {
      json entries = json::array();
      for (const auto& [t, v] : cfg.fitness.entries()) {
        entries.push_back(json::array({std::vector<double>(t.weights().begin(), t.weights().end()), v}));
      }
      f["entries"] = entries;
      break;
    }
  }
  j["fitness"] = f;

  json w;
  w["kind"] = to_string(cfg.weights.kind());
  if (cfg.weights.kind() == WeightLaw::Kind::FiniteSupport) {
    json atoms = json::array();
    for (const auto& a : cfg.weights.atoms()) atoms.push_back({a.value, a.prob});
    w["atoms"] = atoms;
  } else if (cfg.weights.kind() == WeightLaw::Kind::TableCdf) {
    json grid = json::array();
    for (const auto& p : cfg.weights.grid()) grid.push_back({p.value, p.cumulative});
    w["grid"] = grid;
  }
  j["weights"] = w;

  json init;
  init["kind"] = cfg.initial.kind == InitialComplexSpec::Kind::Simplex ? "simplex" : "faces";
  if (cfg.initial.kind == InitialComplexSpec::Kind::Faces) init["faces"] = cfg.initial.faces;
  if (!cfg.initial.weights.empty()) {
    json ws = json::array();
    for (const auto& [l, x] : cfg.initial.weights) ws.push_back({l, x});
    init["weights"] = ws;
  }
  j["initial"] = init;
  return j.dump(indent);
}

}  // namespace simplex
