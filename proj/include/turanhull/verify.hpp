#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "turanhull/enumerate.hpp"
#include "turanhull/report.hpp"

namespace turanhull {

struct SweepOptions {
  /// Worker threads; the index space is cut into this many contiguous chunks.
  int workers = 1;
  /// Unlocks n = 7 graph sweeps and n = 6 complex sweeps.
  bool long_run = false;
  /// Restricts the sweep to one chunk of the instance index space.
  std::optional<IndexRange> range;
  /// Records wall time in the report (makes the output non-reproducible).
  bool timing = false;
  /// Receives human-readable progress lines.
  std::function<void(const std::string&)> progress;
};

/// Cap on graph order for exhaustive graph sweeps without long_run.
inline constexpr int kDefaultGraphSweepCap = 6;

/// Ratio chain c_k t_{k-1} <= c_{k-1} t_k (2 <= k <= min(r, n)) and c_2 <= t_2
/// over every labeled graph on n vertices with clique number <= r. Throws
/// std::invalid_argument outside the caps.
VerificationReport check_theorem_3_1(int n, int r, const SweepOptions& options = {});

/// c_k(G) <= t_k(n, r) for every labeled graph in G(n, r) and every k; for a
/// full sweep also checks that the maxima equal t_k(n, r).
VerificationReport check_zykov(int n, int r, const SweepOptions& options = {});

/// Adds a failure unless the recorded clique-count maxima equal t(n, r). Used
/// on complete (possibly merged) Zykov reports.
void check_zykov_attainment(VerificationReport& report);

/// Every downward-closed family on {1..n} with r-colorable underlying graph
/// has its face vector inside C_g, g = t(n, r), by both membership oracles
/// with sound certificates, and satisfies f_k t_{k-1} <= f_{k-1} t_k. The
/// chunk holding index 0 also checks that each truncation g^k is the face
/// vector of the k-skeleton of the clique complex of T(n, r), and that this
/// skeleton is r-colorable.
VerificationReport check_theorem_1_1(int n, int r, const SweepOptions& options = {});

/// Random r-colorable complexes on n vertices (sample i seeded by (seed, i)).
/// Builds Lambda by shifting the non-neighbors of the smallest vertex onto it,
/// takes L = link and D = induced complex on V(L), H = balance(symmetrize(graph
/// of L)), G = join(H, m) and checks c_{k-1}(G) f_k(Lambda) <= c_k(G) f_{k-1}(Lambda).
/// Samples where D and L differ at sizes k-1, k, or where H misses the
/// hypothesis f_t(L) c_{t-1}(H) <= f_{t-1}(L) c_t(H) for t in {k-1, k},
/// are skipped and counted, not failed.
VerificationReport check_section5_chain(std::uint64_t samples, int n, int r, int k, std::uint64_t seed,
                                        const SweepOptions& options = {});

/// Builds one random r-colorable complex as used by check_section5_chain.
SimplicialComplex random_colorable_complex(int n, int r, std::uint64_t seed, std::uint64_t sample);

}  // namespace turanhull
