#pragma once

#include "spectral/json_io.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace spectral {

struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::vector<CheckEntry> checks;
  std::map<std::string, std::size_t> counts;

  void add(std::string name, bool passed, std::string detail = {});
  bool passed() const;
  /// 0 iff every check passed, 1 otherwise.
  int exit_status() const { return passed() ? 0 : 1; }
  Json to_json() const;
  /// Failed checks in full, passing ones summarized by count.
  std::string summary() const;
};

/// Runs fn(0..n-1), on worker threads when parallel is set. Results keep index order.
void for_each_index(std::size_t n, bool parallel, const std::function<void(std::size_t)>& fn);

struct SweepOptions {
  bool parallel = true;
  /// Even–even–even exemplar triples checked operator by operator.
  std::size_t associativity_samples = 24;
  unsigned seed = 1729;
};

/// All 16×16 graded pairs (both conventions where defined), the mixed-variant block,
/// convention equivalence and D² additivity on even–even pairs, the traditional failure
/// matrix over classic classes, and class- and operator-level associativity.
RunReport run_sweep(const SweepOptions& opts = {});

/// Exterior *-DGA, its sign-flipped twin, tensor products under both conventions,
/// the unit algebra, and the triple-product reassociation.
RunReport run_dga_check();

}  // namespace spectral
