#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "simplex/complex.hpp"
#include "simplex/model_config.hpp"
#include "simplex/profile.hpp"
#include "simplex/urn.hpp"

namespace simplex {

// CSV files use a header row, ',' separators, '.' decimals and LF line ends.
// Reals are written with 17 significant digits so reading them back is exact.

/// "%.17g".
std::string format_real(double x);

/// Profile CSV: one "# provenance=... d=... n=... replicas=..." line, then
/// "k,count,fraction,stderr".
void write_profile_csv(std::ostream& out, const DegreeProfile& profile);
DegreeProfile read_profile_csv(std::istream& in);
void save_profile_csv(const std::string& path, const DegreeProfile& profile);
DegreeProfile load_profile_csv(const std::string& path);

/// "step,Z,Z/step". The ratio column is derived and ignored on input.
void write_z_trace_csv(std::ostream& out, std::span<const ZPoint> trace);
std::vector<ZPoint> read_z_trace_csv(std::istream& in);
void save_z_trace_csv(const std::string& path, std::span<const ZPoint> trace);
std::vector<ZPoint> load_z_trace_csv(const std::string& path);

std::string urn_to_json(const UrnSolution& s, int indent = 2);
UrnSolution urn_from_json(const std::string& text);

struct RunManifest {
  std::string subcommand;
  std::string config_json;  // config_to_json output
  std::uint64_t seed = 0;
  std::string version;  // git describe of the build
  double wall_seconds = 0.0;
  std::vector<std::string> arguments;  // argv after the subcommand
  std::vector<std::string> outputs;
};

std::string manifest_to_json(const RunManifest& m, int indent = 2);
RunManifest manifest_from_json(const std::string& text);

/// Writes `text` to `path`, throwing IoError on failure.
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace simplex
