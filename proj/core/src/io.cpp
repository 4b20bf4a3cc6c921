#include "simplex/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace simplex {

using nlohmann::json;

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

// Column (1-based) of field i in a split line.
std::size_t column_of(const std::vector<std::string>& fields, std::size_t i) {
  std::size_t col = 1;
  for (std::size_t j = 0; j < i; ++j) col += fields[j].size() + 1;
  return col;
}

double parse_real(const std::vector<std::string>& fields, std::size_t i, std::size_t line) {
  const std::string& s = fields[i];
  if (!s.empty()) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() + s.size()) return v;
  }
  throw ParseError("bad number '" + s + "'", line, column_of(fields, i));
}

template <class Int>
Int parse_int(const std::vector<std::string>& fields, std::size_t i, std::size_t line) {
  const std::string& s = fields[i];
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + s + "'", line, column_of(fields, i));
  }
  return v;
}

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(e.what(), line, col);
  }
}

template <class Fn>
auto with_json_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

}  // namespace

void write_profile_csv(std::ostream& out, const DegreeProfile& p) {
  out << "# provenance=" << to_string(p.provenance) << " d=" << p.d << " n=" << p.n
      << " replicas=" << p.replicas << '\n';
  out << "k,count,fraction,stderr\n";
  for (const auto& e : p.entries) {
    out << e.k << ',' << format_real(e.count) << ',' << format_real(e.fraction) << ','
        << format_real(e.std_error) << '\n';
  }
}

DegreeProfile read_profile_csv(std::istream& in) {
  DegreeProfile p;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (next_line(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string tok;
      while (meta >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("bad metadata '" + tok + "'", lineno, 1);
        const std::string key = tok.substr(0, eq);
        const std::vector<std::string> val{tok.substr(eq + 1)};
        if (key == "provenance") {
          p.provenance = parse_provenance(val[0]);
        } else if (key == "d") {
          p.d = parse_int<int>(val, 0, lineno);
        } else if (key == "n") {
          p.n = parse_int<std::uint64_t>(val, 0, lineno);
        } else if (key == "replicas") {
          p.replicas = parse_int<std::uint64_t>(val, 0, lineno);
        }
      }
      continue;
    }
    if (!header) {
      if (line != "k,count,fraction,stderr") {
        throw ParseError("expected header k,count,fraction,stderr", lineno, 1);
      }
      header = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 4) {
      throw ParseError("expected 4 fields, got " + std::to_string(f.size()), lineno,
                       f.size() > 4 ? column_of(f, 4) : line.size() + 1);
    }
    ProfileEntry e;
    e.k = parse_int<int>(f, 0, lineno);
    e.count = parse_real(f, 1, lineno);
    e.fraction = parse_real(f, 2, lineno);
    e.std_error = parse_real(f, 3, lineno);
    if (!p.entries.empty() && e.k <= p.entries.back().k) {
      throw ParseError("k must increase", lineno, 1);
    }
    p.entries.push_back(e);
  }
  if (!header) throw ParseError("missing header", lineno + 1, 1);
  return p;
}

void save_profile_csv(const std::string& path, const DegreeProfile& profile) {
  auto out = open_out(path);
  write_profile_csv(out, profile);
  finish(out, path);
}

DegreeProfile load_profile_csv(const std::string& path) {
  auto in = open_in(path);
  return read_profile_csv(in);
}

void write_z_trace_csv(std::ostream& out, std::span<const ZPoint> trace) {
  out << "step,Z,Z/step\n";
  for (const auto& p : trace) {
    out << p.step << ',' << format_real(p.z) << ','
        << format_real(p.step > 0 ? p.z / static_cast<double>(p.step) : 0.0) << '\n';
  }
}

std::vector<ZPoint> read_z_trace_csv(std::istream& in) {
  std::vector<ZPoint> out;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (next_line(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!header) {
      if (line != "step,Z,Z/step") throw ParseError("expected header step,Z,Z/step", lineno, 1);
      header = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 3) {
      throw ParseError("expected 3 fields, got " + std::to_string(f.size()), lineno, 1);
    }
    ZPoint p;
    p.step = parse_int<std::uint64_t>(f, 0, lineno);
    p.z = parse_real(f, 1, lineno);
    parse_real(f, 2, lineno);
    out.push_back(p);
  }
  if (!header) throw ParseError("missing header", lineno + 1, 1);
  return out;
}

void save_z_trace_csv(const std::string& path, std::span<const ZPoint> trace) {
  auto out = open_out(path);
  write_z_trace_csv(out, trace);
  finish(out, path);
}

std::vector<ZPoint> load_z_trace_csv(const std::string& path) {
  auto in = open_in(path);
  return read_z_trace_csv(in);
}

std::string urn_to_json(const UrnSolution& s, int indent) {
  json j;
  j["lambda"] = s.lambda;
  j["residual"] = s.residual;
  j["iterations"] = s.iterations;
  json types = json::array();
  for (const auto& t : s.types) types.push_back(std::vector<double>(t.weights().begin(), t.weights().end()));
  j["types"] = types;
  j["pi"] = s.pi;
  j["pi_hat"] = s.pi_hat;
  return j.dump(indent);
}

UrnSolution urn_from_json(const std::string& text) {
  const json j = parse_json_text(text);
  return with_json_errors([&] {
    UrnSolution s;
    s.lambda = j.at("lambda").get<double>();
    s.residual = j.at("residual").get<double>();
    s.iterations = j.at("iterations").get<std::uint64_t>();
    for (const auto& t : j.at("types")) s.types.emplace_back(t.get<std::vector<double>>());
    s.pi = j.at("pi").get<std::vector<double>>();
    s.pi_hat = j.at("pi_hat").get<std::vector<double>>();
    if (s.pi.size() != s.types.size() || s.pi_hat.size() != s.types.size()) {
      throw ParseError("types, pi and pi_hat differ in length", 0, 0);
    }
    return s;
  });
}

std::string manifest_to_json(const RunManifest& m, int indent) {
  json j;
  j["subcommand"] = m.subcommand;
  j["config"] = m.config_json.empty() ? json(nullptr) : json::parse(m.config_json);
  j["seed"] = m.seed;
  j["version"] = m.version;
  j["wall_seconds"] = m.wall_seconds;
  j["arguments"] = m.arguments;
  j["outputs"] = m.outputs;
  return j.dump(indent);
}

RunManifest manifest_from_json(const std::string& text) {
  const json j = parse_json_text(text);
  return with_json_errors([&] {
    RunManifest m;
    m.subcommand = j.at("subcommand").get<std::string>();
    if (!j.at("config").is_null()) m.config_json = j.at("config").dump(2);
    m.seed = j.at("seed").get<std::uint64_t>();
    m.version = j.at("version").get<std::string>();
    m.wall_seconds = j.at("wall_seconds").get<double>();
    m.arguments = j.at("arguments").get<std::vector<std::string>>();
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    return m;
  });
}

void write_text_file(const std::string& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
  finish(out, path);
}

std::string read_text_file(const std::string& path) {
  auto in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace simplex
