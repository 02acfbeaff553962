#ifndef INTERSECTRA_TOOLS_COMMANDS_HPP
#define INTERSECTRA_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

// Machine-readable run record {"command", "inputs", "outputs", "provenance",
// "pass"?}.  Keys serialize sorted, so identical inputs give byte-identical
// documents; wall-clock fields are deliberately excluded.
struct Report {
  nlohmann::json doc;
  std::optional<bool> pass;  // set by verification runs only
  std::string text;          // human rendering for non-JSON output
};

struct SearchOptions {
  std::uint64_t budget = 0;  // 0 = unlimited
  bool symmetry_off = false;
  int workers = 1;
  bool all_optima = false;
  bool verify_bounds = false;
};

// INTERSECTRA_BUDGET env override, else 10^8 nodes.
std::uint64_t default_budget();

Report cmd_analyze(const std::string& file, std::vector<int> ks);
Report cmd_check(const std::string& file, int n, int r);
Report cmd_construct(const std::string& kind, int n, int r, int k,
                     const std::string& base_file, const std::string& out_file);
Report cmd_search(const std::string& objective, int n, int r, int k,
                  const SearchOptions& opt);
Report cmd_verify(const std::string& suite, std::uint64_t budget);

}  // namespace cli

#endif
