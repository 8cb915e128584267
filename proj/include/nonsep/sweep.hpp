#ifndef NONSEP_SWEEP_HPP
#define NONSEP_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nonsep/digraph_finder.hpp"
#include "nonsep/shapes.hpp"

namespace nonsep {

enum class SweepMode { Auto, Finder, Oracle };

// One experiment: `count` hosts, each drawn from `family` with a seed mixed
// from `seed` and the instance index, hunted for `shape`.
//
//   family   "random" (default), "named:<catalog name>", or "file:<path>".
//   n_lo/hi  host order range for random hosts; 0 = tightest legal default.
//   delta    forced minimum (semi-)degree; -1 = the theorem threshold
//            (m+1 directed, m+2 undirected).
//   probe    overrides delta to m, one below the theorem, to probe whether
//            the shapes survive past the proved frontier.
//   mode     Auto runs the constructive finder, except probe sweeps where
//            the theorem no longer promises anything and the exhaustive
//            oracle answers instead.
struct SweepConfig {
  ShapeSpec shape;
  int count = 100;
  std::uint64_t seed = 1;
  std::string family = "random";
  int n_lo = 0;
  int n_hi = 0;
  int delta = -1;
  bool probe = false;
  SweepMode mode = SweepMode::Auto;
  int jobs = 1;
  std::string witness_dir;  // contradiction dumps land here; empty = skip
};

struct InstanceReport {
  int instance = 0;
  std::uint64_t seed = 0;
  int n = 0;
  std::string shape;
  std::string outcome;     // found | precondition-failed | not-found | contradiction
  std::string kind_found;  // realized family member, empty unless found
  int iterations = 0;
  std::vector<TraceEntry> trace;
  bool verified = false;
  double wall_ms = 0.0;
};

// One constructive-finder call dispatched on the shape kind.  Exactly one
// of g and d must be non-null, matching the shape's direction; iterations
// and trace stay empty for undirected shapes, whose finders do not loop.
struct FinderRun {
  Embedding tree;
  int iterations = 0;
  std::vector<TraceEntry> trace;
};

FinderRun run_finder(const Graph* g, const Digraph* d, const ShapeSpec& spec);

// Stable per-instance seed stream.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// The report as one JSON object, keys sorted, no newline.
std::string report_json_line(const InstanceReport& r);

// Runs a single instance exactly as the sweep would.
InstanceReport run_sweep_instance(const SweepConfig& cfg, int index);

// Fans the instances across `jobs` workers; reports return in instance
// order no matter the completion order, and when `lines` is non-null each
// one streams to it as soon as all its predecessors have.
std::vector<InstanceReport> run_sweep(const SweepConfig& cfg, std::ostream* lines);

}  // namespace nonsep

#endif  // NONSEP_SWEEP_HPP
