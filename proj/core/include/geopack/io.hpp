#pragma once

#include "geopack/pipelines.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace geopack {

inline constexpr const char* kInstanceSchema = "geopack-instance/1";
inline constexpr const char* kReportSchema = "geopack-report/1";

struct Instance {
  KnapsackSpec knapsack = KnapsackSpec::unit(2);
  std::vector<Item> items;
  std::optional<Rational> eps;
  std::optional<Mode> mode;
  std::map<std::string, std::string> overrides;  // PipelineOptions knobs by name
  std::vector<std::string> warnings;
};

// Numbers may be JSON numbers, decimal strings or "p/q" strings; all parse exactly.
Instance parse_instance_text(const std::string& text, bool strict = true);
Instance parse_instance_file(const std::string& path, bool strict = true);
std::string serialize_instance(const Instance& inst);

// Applies the instance's override table to the options.
void apply_overrides(const std::map<std::string, std::string>& overrides, PipelineOptions& opt);

struct PhaseTiming {
  std::string phase;
  double ms = 0.0;
};

std::string report_json(const std::vector<Item>& items, const PackingSolution& sol,
                        const std::vector<PhaseTiming>& timings = {});

struct SvgOptions {
  int pixels = 600;
  bool cells = false;
  std::size_t max_cells = 1u << 18;
  Rational eps{1, 10};  // fills: size key >= eps large, >= eps^2 medium, else small
};
std::string render_svg(const std::vector<Item>& items, const PackingSolution& sol, const SvgOptions& opt = {});

// The `pack` command line; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geopack
