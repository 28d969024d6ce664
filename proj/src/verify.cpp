#include "turanhull/verify.hpp"

#include <chrono>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

#include "turanhull/complex_io.hpp"
#include "turanhull/graph_io.hpp"
#include "turanhull/hull.hpp"
#include "turanhull/operators.hpp"
#include "turanhull/turan.hpp"

namespace turanhull {

namespace {

using U128 = unsigned __int128;

U128 product(std::uint64_t a, std::uint64_t b) { return static_cast<U128>(a) * b; }

VerificationReport base_report(std::string theorem, int n, int r, int k, std::string mode, std::uint64_t seed) {
  VerificationReport rep;
  rep.theorem = std::move(theorem);
  rep.n = n;
  rep.r = r;
  rep.k = k;
  rep.mode = std::move(mode);
  rep.seed = seed;
  return rep;
}

// Cuts the requested index range into contiguous worker chunks and merges the
// partial reports in chunk order.
template <typename ChunkFn>
VerificationReport run_sweep(VerificationReport base, std::uint64_t total, const SweepOptions& options, ChunkFn&& chunk) {
  IndexRange range = options.range.value_or(IndexRange{0, total});
  range.end = std::min(range.end, total);
  range.begin = std::min(range.begin, range.end);
  const std::uint64_t span = range.end - range.begin;
  const auto workers = static_cast<std::uint64_t>(std::max(1, options.workers));
  const std::uint64_t pieces = std::max<std::uint64_t>(1, std::min(workers, span));

  base.config = {{"workers", workers}, {"long_run", options.long_run}, {"chunked", options.range.has_value()}};
  if (options.progress)
    options.progress(base.theorem + " n=" + std::to_string(base.n) + " r=" + std::to_string(base.r) + ": instances [" +
                     std::to_string(range.begin) + ", " + std::to_string(range.end) + ")");
  const auto start = std::chrono::steady_clock::now();

  std::vector<VerificationReport> parts(pieces, base);
  std::vector<std::exception_ptr> errors(pieces);
  auto work = [&](std::uint64_t p) {
    const IndexRange sub{range.begin + span * p / pieces, range.begin + span * (p + 1) / pieces};
    parts[p].range_begin = sub.begin;
    parts[p].range_end = sub.end;
    try {
      chunk(sub, parts[p]);
    } catch (...) {
      errors[p] = std::current_exception();
    }
  };
  if (pieces == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t p = 0; p < pieces; ++p) threads.emplace_back(work, p);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerificationReport merged = base;
  merged.range_begin = range.begin;
  merged.range_end = range.begin;
  for (const auto& part : parts) merge_into(merged, part);
  merged.range_begin = range.begin;
  merged.range_end = range.end;
  if (options.timing)
    merged.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (options.progress)
    options.progress(base.theorem + ": " + std::to_string(merged.instances_checked) + " checked, " +
                     std::to_string(merged.failure_count) + " failures");
  return merged;
}

void check_graph_caps(int n, int r, const SweepOptions& options) {
  if (n < 1 || n > kMaxEnumeratedGraphOrder) throw std::invalid_argument("graph sweep order " + std::to_string(n) + " outside [1, 7]");
  if (n > kDefaultGraphSweepCap && !options.long_run)
    throw std::invalid_argument("graph sweep at n = " + std::to_string(n) + " needs the long-run flag");
  if (r < 1) throw std::invalid_argument("r must be positive");
}

std::vector<std::uint64_t> as_vector(const IntVector& v) { return v.entries(); }

}  // namespace

VerificationReport check_theorem_3_1(int n, int r, const SweepOptions& options) {
  check_graph_caps(n, r, options);
  const IntVector t = turan_clique_vector(n, r);
  const int top = std::min(n, r);
  auto rep = run_sweep(base_report("thm31", n, r, 0, "exhaustive", 0), labeled_graph_count(n), options,
                       [&](IndexRange sub, VerificationReport& part) {
    enumerate_labeled_graphs(
        n,
        [&](std::uint64_t index, const Graph& g) {
          const IntVector c = clique_vector(g);
          if (c.trimmed().size() > static_cast<std::size_t>(r)) {
            ++part.instances_skipped;
            part.bump("clique_number_above_r");
            return;
          }
          ++part.instances_checked;
          for (int k = 2; k <= top; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            if (product(c.entry(ku), t.entry(ku - 1)) > product(c.entry(ku - 1), t.entry(ku))) {
              part.add_failure(index, {{"graph6", to_graph6(g)}, {"check", "ratio_chain"}, {"k", k}, {"c", as_vector(c)}});
              return;
            }
          }
          if (c.entry(2) > t.entry(2))
            part.add_failure(index, {{"graph6", to_graph6(g)}, {"check", "edge_bound"}, {"c", as_vector(c)}});
        },
        sub);
    if (sub.begin == 0 && sub.end > 0) {
      // Equality case: T(n, r) itself has every ratio c_k / t_k equal to 1.
      if (clique_vector(turan_graph(n, r)) == t)
        part.bump("turan_equality_case");
      else
        part.add_failure(0, {{"check", "turan_equality_case"}, {"t", as_vector(t)}});
    }
  });
  return rep;
}

VerificationReport check_zykov(int n, int r, const SweepOptions& options) {
  check_graph_caps(n, r, options);
  const IntVector t = turan_clique_vector(n, r);
  auto rep = run_sweep(base_report("zykov", n, r, 0, "exhaustive", 0), labeled_graph_count(n), options,
                       [&](IndexRange sub, VerificationReport& part) {
    enumerate_labeled_graphs(
        n,
        [&](std::uint64_t index, const Graph& g) {
          const IntVector c = clique_vector(g);
          if (c.trimmed().size() > static_cast<std::size_t>(r)) {
            ++part.instances_skipped;
            part.bump("clique_number_above_r");
            return;
          }
          ++part.instances_checked;
          part.raise_maxima("max_clique_counts", c.entries());
          for (std::size_t k = 1; k <= c.size(); ++k) {
            if (c.at(k) > t.at(k)) {
              part.add_failure(index, {{"graph6", to_graph6(g)}, {"check", "pointwise_bound"}, {"k", k}, {"c", as_vector(c)}});
              return;
            }
          }
        },
        sub);
  });
  rep.maxima["turan_vector"] = t.entries();
  if (!options.range) check_zykov_attainment(rep);
  return rep;
}

void check_zykov_attainment(VerificationReport& report) {
  const IntVector t = turan_clique_vector(report.n, report.r);
  auto it = report.maxima.find("max_clique_counts");
  std::vector<std::uint64_t> maxima = it == report.maxima.end() ? std::vector<std::uint64_t>{} : it->second;
  maxima.resize(t.size(), 0);
  if (maxima == t.entries()) {
    report.bump("maxima_attain_turan");
  } else {
    report.add_failure(0, {{"check", "attainment"}, {"maxima", maxima}, {"t", t.entries()}});
  }
}

VerificationReport check_theorem_1_1(int n, int r, const SweepOptions& options) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  // Validates the caps before the counting walk.
  const std::uint64_t total = complex_family_count(n, options.long_run);
  const IntVector g = turan_clique_vector(n, r);
  auto rep = run_sweep(base_report("thm11", n, r, 0, "exhaustive", 0), total, options, [&](IndexRange sub, VerificationReport& part) {
    enumerate_complexes(
        n, options.long_run,
        [&](std::uint64_t index, const SimplicialComplex& c) {
          if (!is_r_colorable(underlying_graph(c), r)) {
            ++part.instances_skipped;
            part.bump("not_r_colorable");
            return;
          }
          ++part.instances_checked;
          const IntVector f = face_vector(c);
          if (f.entry(1) != static_cast<std::uint64_t>(n)) part.bump("absent_vertices");
          auto fail = [&](const std::string& what, nlohmann::json extra = nlohmann::json::object()) {
            extra["check"] = what;
            extra["complex"] = complex_to_json(c);
            extra["f"] = f.entries();
            part.add_failure(index, std::move(extra));
          };
          const HullCertificate by_inequalities = membership_inequalities(f, g);
          const HullCertificate by_coefficients = membership_coefficients(f, g);
          if (!by_inequalities.inside()) return fail("inequality_oracle", {{"certificate", certificate_to_json(by_inequalities)}});
          if (!by_coefficients.inside()) return fail("coefficient_oracle", {{"certificate", certificate_to_json(by_coefficients)}});
          for (const auto* cert : {&by_inequalities, &by_coefficients}) {
            const CertificateCheck check = verify_certificate(f, g, *cert);
            if (!check.sound) return fail("certificate", {{"reason", check.reason}});
          }
          part.bump("certificates_verified", 2);
          for (std::size_t k = 2; k <= f.size(); ++k)
            if (product(f.at(k), g.at(k - 1)) > product(f.at(k - 1), g.at(k))) return fail("ratio", {{"k", k}});
        },
        sub);
    if (sub.begin == 0 && sub.end > 0) {
      const SimplicialComplex turan_complex = clique_complex(turan_graph(n, r));
      for (int k = 1; k <= n; ++k) {
        const SimplicialComplex sk = skeleton(turan_complex, k);
        const bool attained = face_vector(sk) == truncation(g, static_cast<std::size_t>(k));
        const bool colorable = is_r_colorable(underlying_graph(sk), r).has_value();
        if (attained && colorable)
          part.bump("truncations_attained");
        else
          part.add_failure(0, {{"check", "truncation_attainment"}, {"k", k}, {"attained", attained}, {"colorable", colorable}});
      }
    }
  });
  rep.maxima["turan_vector"] = g.entries();
  return rep;
}

SimplicialComplex random_colorable_complex(int n, int r, std::uint64_t seed, std::uint64_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(sample),
                    static_cast<std::uint32_t>(sample >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> color_of(1, r);
  std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) color[static_cast<std::size_t>(v)] = color_of(rng);
  std::uniform_int_distribution<int> facet_count(1, 2 * n);
  std::bernoulli_distribution coin(0.5);
  const bool coned = (sample % 2) == 1;

  std::vector<Face> facets;
  const int count = facet_count(rng);
  for (int i = 0; i < count; ++i) {
    Face f;
    std::uint64_t colors_used = 0;
    for (int v = 1; v <= n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << color[static_cast<std::size_t>(v)];
      if (coin(rng) && (colors_used & bit) == 0) {
        f = f.with(v);
        colors_used |= bit;
      }
    }
    facets.push_back(f);
    if (coned) {
      // Cone the part of f avoiding vertex 1's color over vertex 1.
      Face cone;
      for_each_label(f, [&](int v) {
        if (color[static_cast<std::size_t>(v)] != color[1]) cone = cone.with(v);
      });
      facets.push_back(cone.with(1));
    }
  }
  return SimplicialComplex::from_facets(n, facets);
}

VerificationReport check_section5_chain(std::uint64_t samples, int n, int r, int k, std::uint64_t seed, const SweepOptions& options) {
  if (n < 1 || n > 12) throw std::invalid_argument("chain sampling order " + std::to_string(n) + " outside [1, 12]");
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (k < 2 || k > n) throw std::invalid_argument("k must lie in [2, n]");
  const auto ku = static_cast<std::size_t>(k);
  auto rep = run_sweep(base_report("sec5", n, r, k, "random", seed), samples, options, [&](IndexRange sub, VerificationReport& part) {
    for (std::uint64_t index = sub.begin; index < sub.end; ++index) {
      const SimplicialComplex delta = random_colorable_complex(n, r, seed, index);
      auto fail = [&](const std::string& what, nlohmann::json extra = nlohmann::json::object()) {
        extra["check"] = what;
        extra["complex"] = complex_to_json(delta);
        part.add_failure(index, std::move(extra));
      };
      const VertexSet verts = delta.vertices();
      if (verts.empty()) {
        ++part.instances_skipped;
        part.bump("no_vertices");
        continue;
      }
      const LambdaConstruction lc = shift_non_neighbors_onto(delta, verts.min_label());
      if (lc.m == 1) part.bump("cone_over_link");
      const IntVector f_lambda = face_vector(lc.lambda);
      const IntVector f_link = face_vector(lc.link);
      const IntVector f_induced = face_vector(lc.induced);

      bool decomposed = true;
      for (std::size_t j = 1; j <= f_lambda.size(); ++j)
        if (f_lambda.at(j) != static_cast<std::uint64_t>(lc.m) * f_link.entry(j - 1) + f_induced.at(j)) decomposed = false;
      if (!decomposed) {
        fail("lambda_decomposition");
        continue;
      }
      if (!is_r_colorable(underlying_graph(lc.lambda), r)) {
        fail("lambda_colorability");
        continue;
      }
      if (f_induced.entry(ku - 1) != f_link.entry(ku - 1) || f_induced.entry(ku) != f_link.entry(ku)) {
        ++part.instances_skipped;
        part.bump("claim_unmet");
        continue;
      }

      const InducedSubgraph link_graph = induced_subgraph(underlying_graph(lc.link), lc.link.vertices());
      const Graph h = balance_multipartite(symmetrize_to_multipartite(link_graph.graph).graph).graph;
      const IntVector c_h = clique_vector(h);
      bool hypothesis = true;
      for (std::size_t t = ku - 1; t <= ku; ++t)
        if (product(f_link.entry(t), c_h.entry(t - 1)) > product(f_link.entry(t - 1), c_h.entry(t))) hypothesis = false;
      if (!hypothesis) {
        ++part.instances_skipped;
        part.bump("hypothesis_unmet");
        continue;
      }

      const Graph joined = join_with_independent_set(h, lc.m);
      const IntVector c_g = clique_vector(joined);
      if (c_g.trimmed().size() > static_cast<std::size_t>(r)) {
        fail("join_clique_number", {{"c", c_g.entries()}});
        continue;
      }
      ++part.instances_checked;
      const U128 lhs = product(c_g.entry(ku - 1), f_lambda.entry(ku));
      const U128 rhs = product(c_g.entry(ku), f_lambda.entry(ku - 1));
      if (lhs > rhs) {
        fail("chain_inequality", {{"f_lambda", f_lambda.entries()}, {"c_join", c_g.entries()}, {"m", lc.m}});
        continue;
      }
      if (lhs == rhs) part.bump("tight");
    }
  });
  return rep;
}

}  // namespace turanhull
