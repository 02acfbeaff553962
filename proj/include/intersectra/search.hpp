#ifndef INTERSECTRA_SEARCH_HPP
#define INTERSECTRA_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "intersectra/set_family.hpp"

namespace intersectra {

enum class Symmetry { on, off };

struct SearchConfig {
  // Expanded-node cap; 0 means unlimited.  Exhausting the budget returns the
  // best result so far with optimal=false, never an exception.  A finite
  // budget forces sequential execution so value and flag stay deterministic.
  std::uint64_t node_budget = 0;
  // Symmetry pruning + class dedup.  Requires n <= the canonicalization
  // limit; above it symmetry must be off.
  Symmetry symmetry = Symmetry::on;
  // Advisory worker count for unlimited-budget beta_search runs; value,
  // optimal flag and witness do not depend on it.
  int parallel_width = 1;
  // Collect one representative per isomorphism class of optimal families.
  bool report_all_optima = false;
  // Debug instrumentation: verify at every expanded node that the upper
  // bound dominates the best value found in that subtree.
  bool verify_bounds = false;
};

struct SearchParams {
  int n = 0, r = 0, k = 0;
};

struct SearchResult {
  SearchParams params;
  std::int64_t value = 0;
  // Intersecting, r-uniform, maximal, with exactly `value` k-sized pairwise
  // intersections.  Normalized to the least witness under (invariant profile,
  // canonical encoding); raw colex-least encoding when n exceeds the
  // canonicalization limit.
  SetFamily witness;
  bool optimal = false;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t elapsed_ms = 0;
  std::vector<SetFamily> optima_classes;  // filled when report_all_optima
};

// Exact maximum of |F<k>| over intersecting r-uniform families F over [n]
// when optimal=true.  The search runs over maximal families only (the
// objective is monotone under superfamily) by include/exclude branching on
// the colex-least includable r-set, with remembered exclusions making leaves
// maximal-consistent and an admissible per-node upper bound (k-sets realized
// by any pair of still-available members).  Deterministic for a fixed config.
// Limits: 1 <= k <= r <= n, n <= 64, C(n,r) <= 4096 ("search instance too
// large"), and n <= 10 when symmetry is on ("canonicalization limit").
SearchResult beta_search(int n, int r, int k, const SearchConfig& cfg = {});

// beta_search(n, r, 1).  The true quantity maximizes over every ground size;
// a fixed-n run is a lower bound that stabilizes once n is large enough.
SearchResult alpha_search(int r, int n, const SearchConfig& cfg = {});

struct EnumerationResult {
  std::vector<SetFamily> families;
  bool complete = false;
  std::uint64_t nodes_expanded = 0;
};

// Every maximal intersecting r-uniform family over [n], each exactly once
// (symmetry=off), or one canonical representative per isomorphism class
// (symmetry=on).  Streaming form visits families in discovery order and
// stops early when the visitor returns false.  Always sequential.
EnumerationResult enumerate_maximal_families(int n, int r, const SearchConfig& cfg = {});
EnumerationResult enumerate_maximal_families(
    int n, int r, const SearchConfig& cfg,
    const std::function<bool(const SetFamily&)>& visit);

struct EkrReport {
  int n = 0, r = 0;
  std::uint64_t bound = 0;       // C(n-1, r-1)
  std::int64_t max_size = 0;     // largest maximal family encountered
  bool bound_holds = false;      // no family exceeded the bound
  bool attained = false;         // max_size == bound
  // Families of maximum size: isomorphism classes when symmetry=on, labeled
  // families when off.
  std::uint64_t attaining = 0;
  bool classes = false;          // whether `attaining` counts classes
  std::uint64_t families_seen = 0;
  bool complete = false;
  std::uint64_t nodes_expanded = 0;
};

// Enumerates maximal families for n >= 2r and checks the classical size
// bound C(n-1, r-1).  Throws std::invalid_argument("parameter out of range")
// when n < 2r.
EkrReport ekr_check(int n, int r, const SearchConfig& cfg = {});

}  // namespace intersectra

#endif
