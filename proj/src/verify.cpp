#include "cubespec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "cubespec/cayley.hpp"
#include "cubespec/config.hpp"
#include "cubespec/errors.hpp"
#include "cubespec/polynomial.hpp"
#include "cubespec/rng.hpp"
#include "cubespec/spectrum.hpp"
#include "cubespec/trees.hpp"
#include "cubespec/walks.hpp"

namespace cubespec {

namespace {

using Runner = std::function<std::string(int cap)>;  // "" means pass

void run_check(std::vector<CheckResult>& out, const std::string& name, int cap,
               const Runner& body) {
  if (cap < 1) return;
  CheckResult r{name, cap, false, ""};
  try {
    r.detail = body(cap);
    r.pass = r.detail.empty();
    if (r.pass) r.detail = "ok";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  out.push_back(r);
}

std::string fail_at(int n, const std::string& what) {
  return "n=" + std::to_string(n) + ": " + what;
}

// Expands prod (x - lambda)^multiplicity from a spectrum table; used to tie
// the table back to the recursion polynomial.
RationalPolynomial polynomial_from_table(const SpectrumTable& table) {
  RationalPolynomial p = RationalPolynomial::constant(BigRat(1));
  for (const auto& e : table.entries()) {
    const RationalPolynomial factor(
        std::vector<BigRat>{-e.eigenvalue, BigRat(1)});
    for (BigInt m = 0; m < e.multiplicity; ++m) p = p * factor;
  }
  return p;
}

std::vector<Vertex> random_generators(SplitMix64& rng, int n) {
  const Vertex limit = Vertex(1) << n;
  std::set<Vertex> gens;
  const std::uint64_t want = 1 + bounded(rng.next(), static_cast<std::uint64_t>(n));
  while (gens.size() < want) {
    const Vertex g = 1 + bounded(rng.next(), limit - 1);
    gens.insert(g);
  }
  return {gens.begin(), gens.end()};
}

std::string check_regularity(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto g = make_hypercube(n);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto nb = g.neighbors(v);
      if (static_cast<int>(nb.size()) != g.degree())
        return fail_at(n, "vertex " + std::to_string(v) + " has degree " +
                              std::to_string(nb.size()));
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
        return fail_at(n, "repeated neighbor at vertex " + std::to_string(v));
    }
  }
  return "";
}

std::string check_symmetry(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto g = make_hypercube(n);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v : g.neighbors(u))
        if (!g.adjacent(v, u))
          return fail_at(n, std::to_string(u) + "~" + std::to_string(v) +
                                " but not conversely");
  }
  return "";
}

std::string check_vertex_transitivity(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto g = make_hypercube(n);
    const Vertex count = g.vertex_count();
    for (Vertex t = 0; t < count; ++t) {
      // u -> u^t must preserve adjacency and send 0 to t
      for (Vertex u = 0; u < count; ++u)
        for (Vertex v : g.neighbors(u))
          if (!g.adjacent(u ^ t, v ^ t))
            return fail_at(n, "translation by " + std::to_string(t) +
                                  " breaks edge " + std::to_string(u) + "~" +
                                  std::to_string(v));
    }
  }
  return "";
}

std::string check_edge_count(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto g = make_hypercube(n);
    std::uint64_t edges = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v : g.neighbors(u))
        if (u < v) ++edges;
    const std::uint64_t expected =
        static_cast<std::uint64_t>(n) << (n - 1);
    if (edges != expected || g.edge_count() != expected)
      return fail_at(n, "edge count " + std::to_string(edges) +
                            ", expected " + std::to_string(expected));
  }
  return "";
}

std::uint64_t bfs_reach(const CayleyGraph& g) {
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<Vertex> frontier{0};
  seen[0] = 1;
  std::uint64_t reached = 1;
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex v : frontier)
      for (Vertex u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          next.push_back(u);
        }
    frontier = std::move(next);
  }
  return reached;
}

std::string check_connectivity_vs_rank(int cap, std::uint64_t seed) {
  SplitMix64 rng(stream_state(seed, 0xC0117EC7ull));
  for (int n = 1; n <= cap; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      const auto g = make_cayley(n, random_generators(rng, n));
      const bool spans = is_generating(g.generators());
      const bool connected = bfs_reach(g) == g.vertex_count();
      if (spans != connected)
        return fail_at(n, std::string("generating=") + (spans ? "yes" : "no") +
                              " but connected=" + (connected ? "yes" : "no"));
    }
  }
  return "";
}

std::string check_block_structure(int cap) {
  for (int n = 2; n <= cap; ++n)
    if (!verify_block_structure(n)) return fail_at(n, "block mismatch");
  return "";
}

std::string check_recursion_vs_product(int cap) {
  for (int n = 1; n <= cap; ++n)
    if (!(charpoly_recursive(n) == charpoly_product(n)))
      return fail_at(n, "recursion and product coefficients differ");
  return "";
}

std::string check_charpoly_oracle(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto lap = normalized_laplacian_exact(make_hypercube(n));
    if (!(charpoly_faddeev_leverrier(lap) == laplacian_charpoly(n)))
      return fail_at(n, "iteration disagrees with closed-form polynomial");
  }
  return "";
}

std::string check_degree_leading(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto f = charpoly_recursive(n);
    const long expected_degree = 1L << n;
    if (f.degree() != expected_degree)
      return fail_at(n, "degree " + std::to_string(f.degree()));
    if (f.leading_coefficient() !=
        BigRat(int_pow(BigInt(n), static_cast<unsigned long>(expected_degree))))
      return fail_at(n, "leading coefficient is not n^(2^n)");
  }
  return "";
}

std::string check_roots(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto g = laplacian_charpoly(n);
    for (int k = 0; k <= n; ++k)
      if (g.evaluate(make_rational(2 * k, n)) != 0)
        return fail_at(n, "2*" + std::to_string(k) + "/n is not a root");
  }
  return "";
}

std::string check_scaling(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto f = charpoly_product(n);
    const auto g = laplacian_charpoly(n);
    const BigRat scale(int_pow(BigInt(n), 1ul << static_cast<unsigned>(n)));
    const auto& fc = f.coefficients();
    const auto& gc = g.coefficients();
    if (fc.size() != gc.size()) return fail_at(n, "degree mismatch");
    for (std::size_t i = 0; i < fc.size(); ++i)
      if (fc[i] != gc[i] * scale) return fail_at(n, "scaling fails at power " +
                                                        std::to_string(i));
  }
  return "";
}

std::string check_block_determinant(int cap, std::uint64_t seed) {
  SplitMix64 rng(stream_state(seed, 0xB10CDE7ull));
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t order = 1 + bounded(rng.next(), static_cast<std::uint64_t>(cap));
    RatMatrix a(order, order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = i; j < order; ++j) {
        const long num = static_cast<long>(bounded(rng.next(), 21)) - 10;
        const long den = 1 + static_cast<long>(bounded(rng.next(), 6));
        a(i, j) = a(j, i) = make_rational(num, den);
      }
    RatMatrix b(2 * order, 2 * order);
    RatMatrix ap(order, order), am(order, order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) {
        b(i, j) = a(i, j);
        b(i + order, j + order) = a(i, j);
        ap(i, j) = a(i, j);
        am(i, j) = a(i, j);
      }
    for (std::size_t i = 0; i < order; ++i) {
      b(i, i + order) = 1;
      b(i + order, i) = 1;
      ap(i, i) += 1;
      am(i, i) -= 1;
    }
    if (determinant(b) != determinant(ap) * determinant(am))
      return "order " + std::to_string(order) +
             ": det([[A,I],[I,A]]) != det(A+I)det(A-I)";
  }
  return "";
}

std::string check_spectrum_range(int cap) {
  for (int n = 1; n <= cap; ++n)
    for (const auto& e : hypercube_spectrum(n).entries())
      if (e.eigenvalue < 0 || e.eigenvalue > 2)
        return fail_at(n, "eigenvalue outside [0,2]");
  return "";
}

std::string check_spectrum_completeness(int cap) {
  for (int n = 1; n <= cap; ++n)
    if (hypercube_spectrum(n).total_multiplicity() !=
        int_pow(BigInt(2), static_cast<unsigned long>(n)))
      return fail_at(n, "multiplicities do not sum to 2^n");
  return "";
}

std::string check_spectrum_trace(int cap) {
  for (int n = 1; n <= cap; ++n) {
    BigRat tr(0);
    for (const auto& e : hypercube_spectrum(n).entries())
      tr += e.eigenvalue * BigRat(e.multiplicity);
    if (tr != BigRat(int_pow(BigInt(2), static_cast<unsigned long>(n))))
      return fail_at(n, "trace is not 2^n");
  }
  return "";
}

std::string check_spectrum_symmetry(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto entries = hypercube_spectrum(n).entries();
    for (const auto& e : entries) {
      const BigRat mirrored = 2 - e.eigenvalue;
      const auto it = std::find_if(entries.begin(), entries.end(),
                                   [&](const SpectrumEntry& o) {
                                     return o.eigenvalue == mirrored;
                                   });
      if (it == entries.end() || it->multiplicity != e.multiplicity)
        return fail_at(n, "no mirror for eigenvalue " +
                              to_fraction_string(e.eigenvalue));
    }
  }
  return "";
}

std::string check_spectrum_cross_route(int cap, double tol, double gap) {
  for (int n = 1; n <= cap; ++n) {
    const auto table = hypercube_spectrum(n);
    const auto numeric =
        jacobi_eigenvalues(normalized_laplacian(make_hypercube(n)), tol);
    const auto clusters = cluster_eigenvalues(numeric, gap);
    if (clusters.size() != table.entries().size())
      return fail_at(n, "cluster count " + std::to_string(clusters.size()));
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      const auto& exact = table.entries()[i];
      if (BigInt(static_cast<unsigned long>(clusters[i].multiplicity)) !=
          exact.multiplicity)
        return fail_at(n, "multiplicity mismatch at cluster " +
                              std::to_string(i));
      if (std::abs(clusters[i].value - exact.eigenvalue.get_d()) > 1e-8)
        return fail_at(n, "cluster value off by more than 1e-8");
    }
    // tie the table to the recursion polynomial as well
    const BigRat scale(int_pow(BigInt(n), 1ul << static_cast<unsigned>(n)));
    const auto from_table = polynomial_from_table(table);
    const auto recursive = charpoly_recursive(n);
    const auto& tc = from_table.coefficients();
    const auto& rc = recursive.coefficients();
    if (tc.size() != rc.size()) return fail_at(n, "table polynomial degree");
    for (std::size_t i = 0; i < tc.size(); ++i)
      if (tc[i] * scale != rc[i])
        return fail_at(n, "table polynomial differs from recursion");
  }
  return "";
}

std::string check_eigentime_routes(int cap, int mfpt_cap) {
  for (int n = 1; n <= cap; ++n) {
    const BigRat closed = eigentime_closed_form(n);
    if (closed != eigentime_from_spectrum(hypercube_spectrum(n)))
      return fail_at(n, "closed form and spectral sum differ");
    if (n <= mfpt_cap &&
        closed != eigentime_from_first_passage(make_hypercube(n)))
      return fail_at(n, "first-passage value differs");
  }
  return "";
}

std::string check_start_independence(int cap) {
  for (int n = 1; n <= cap; ++n)
    eigentime_from_first_passage(make_hypercube(n));  // throws on violation
  return "";
}

std::string check_stationarity(int cap, std::uint64_t seed) {
  // pi P = pi with P = D^{-1} A, summed exactly
  const auto verify_graph = [](const CayleyGraph& g) -> bool {
    const auto pi = stationary_distribution(g);
    const BigRat inv_degree = make_rational(1, g.degree());
    for (Vertex j = 0; j < g.vertex_count(); ++j) {
      BigRat acc(0);
      for (Vertex i : g.neighbors(j))  // undirected: i ~ j
        acc += pi[static_cast<std::size_t>(i)] * inv_degree;
      if (acc != pi[static_cast<std::size_t>(j)]) return false;
    }
    return true;
  };
  for (int n = 1; n <= cap; ++n)
    if (!verify_graph(make_hypercube(n))) return fail_at(n, "pi P != pi");
  SplitMix64 rng(stream_state(seed, 0x57A71011ull));
  for (int n = 1; n <= std::min(cap, 6); ++n)
    for (int rep = 0; rep < 10; ++rep) {
      const auto g = make_cayley(n, random_generators(rng, n));
      if (!is_generating(g.generators())) continue;
      if (!verify_graph(g)) return fail_at(n, "pi P != pi on random graph");
    }
  return "";
}

std::string check_asymptotics(int n_max) {
  const int envelope_cap = std::min(n_max, 60);
  for (int n = 5; n <= envelope_cap; ++n) {
    const BigRat gap_to_one = abs(eigentime_size_ratio(n) - 1);
    if (gap_to_one > make_rational(6, n))
      return fail_at(n, "|ratio - 1| above 6/n");
  }
  if (n_max >= 8) {
    BigRat prev(-1);
    for (int n : {8, 16, 32, 64}) {
      const BigRat gap_to_one = abs(eigentime_size_ratio(n) - 1);
      if (prev >= 0 && gap_to_one >= prev)
        return fail_at(n, "|ratio - 1| is not strictly decreasing");
      prev = gap_to_one;
    }
  }
  return "";
}

std::string check_decomposition(int cap) {
  for (int n = 1; n <= cap; ++n)
    eigentime_decomposition(n);  // internal assertions throw on violation
  return "";
}

std::string check_monte_carlo(int cap, const VerifyOptions& opts) {
  for (int n = 1; n <= cap; ++n) {
    const auto g = make_hypercube(n);
    const double exact = eigentime_closed_form(n).get_d();
    int hits = 0;
    for (int s = 0; s < opts.monte_carlo_seeds; ++s) {
      const auto report =
          simulate_eigentime(g, opts.trials, opts.seed + static_cast<std::uint64_t>(s));
      if (std::abs(report.estimate - exact) <= 3.0 * report.standard_error)
        ++hits;
    }
    const double required = 0.99 * opts.monte_carlo_seeds;
    if (hits < required)
      return fail_at(n, std::to_string(hits) + "/" +
                            std::to_string(opts.monte_carlo_seeds) +
                            " seeds within 3 standard errors");
  }
  return "";
}

std::string check_tree_routes(int cap, int kirchhoff_cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto closed = spanning_trees_closed_form(n);
    const auto spectral = spanning_trees_from_spectrum(
        hypercube_spectrum(n), n, std::uint64_t(1) << n);
    if (closed.value != spectral.value)
      return fail_at(n, "closed form and spectral count differ");
    if (n <= kirchhoff_cap) {
      const auto oracle = spanning_trees_kirchhoff(make_hypercube(n));
      if (oracle.value != closed.value)
        return fail_at(n, "Kirchhoff determinant differs");
    }
  }
  return "";
}

std::string check_disconnected_sanity(int cap) {
  // single weight-2 generator in dimension 2: two disjoint edges
  const auto g = make_cayley(2, {3});
  const auto oracle = spanning_trees_kirchhoff(g);
  if (oracle.value != 0 || oracle.connected)
    return "Kirchhoff count of a disconnected graph is not 0";
  const auto numeric = jacobi_eigenvalues(normalized_laplacian(g));
  const auto clusters = cluster_eigenvalues(numeric);
  if (clusters.empty() || std::abs(clusters.front().value) > 1e-9 ||
      clusters.front().multiplicity < 2)
    return "disconnected spectrum lacks a repeated zero eigenvalue";
  (void)cap;
  return "";
}

std::string check_tree_parity(int cap) {
  for (int n = 1; n <= cap; ++n) {
    const auto count = spanning_trees_closed_form(n);
    const BigInt power =
        int_pow(BigInt(2), (1ul << static_cast<unsigned>(n)) -
                               static_cast<unsigned long>(n) - 1);
    if (count.value % power != 0)
      return fail_at(n, "2^(2^n - n - 1) does not divide the count");
  }
  return "";
}

}  // namespace

std::vector<CheckResult> verify_suite(int n_max, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  if (n_max < 1) return out;
  const auto capped = [n_max](int cap) { return std::min(n_max, cap); };

  run_check(out, "cayley/regularity", capped(12), check_regularity);
  run_check(out, "cayley/symmetry", capped(8), check_symmetry);
  run_check(out, "cayley/vertex-transitivity", capped(6),
            check_vertex_transitivity);
  run_check(out, "cayley/edge-count", capped(12), check_edge_count);
  run_check(out, "cayley/connectivity-vs-rank", capped(8), [&](int cap) {
    return check_connectivity_vs_rank(cap, options.seed);
  });
  run_check(out, "cayley/block-structure", std::min(capped(dense_cap()), n_max),
            check_block_structure);
  run_check(out, "polynomial/recursion-vs-product", capped(10),
            check_recursion_vs_product);
  run_check(out, "polynomial/charpoly-oracle", capped(6),
            check_charpoly_oracle);
  run_check(out, "polynomial/degree-and-leading", capped(10),
            check_degree_leading);
  run_check(out, "polynomial/root-membership", capped(10), check_roots);
  run_check(out, "polynomial/scaling-relation", capped(10), check_scaling);
  run_check(out, "polynomial/block-determinant", std::min(8, 2 * n_max),
            [&](int cap) { return check_block_determinant(cap, options.seed); });
  run_check(out, "spectrum/range", capped(kFormulaCap), check_spectrum_range);
  run_check(out, "spectrum/completeness", capped(kFormulaCap),
            check_spectrum_completeness);
  run_check(out, "spectrum/trace-identity", capped(kFormulaCap),
            check_spectrum_trace);
  run_check(out, "spectrum/bipartite-symmetry", capped(kFormulaCap),
            check_spectrum_symmetry);
  run_check(out, "spectrum/cross-route", std::min(capped(10), dense_cap()),
            [&](int cap) {
              return check_spectrum_cross_route(cap, options.jacobi_tol,
                                                options.cluster_gap);
            });
  run_check(out, "walks/three-route-eigentime", capped(kFormulaCap),
            [&](int cap) { return check_eigentime_routes(cap, capped(8)); });
  run_check(out, "walks/start-independence", capped(6),
            check_start_independence);
  run_check(out, "walks/stationarity", capped(8), [&](int cap) {
    return check_stationarity(cap, options.seed);
  });
  run_check(out, "walks/linear-growth", capped(kFormulaCap),
            [&](int) { return check_asymptotics(n_max); });
  run_check(out, "walks/decomposition", capped(60), check_decomposition);
  run_check(out, "walks/monte-carlo", capped(5),
            [&](int cap) { return check_monte_carlo(cap, options); });
  run_check(out, "trees/triple-agreement", capped(12),
            [&](int cap) { return check_tree_routes(cap, capped(6)); });
  run_check(out, "trees/disconnected-sanity", n_max >= 2 ? 2 : 0,
            check_disconnected_sanity);
  run_check(out, "trees/parity", capped(10), check_tree_parity);
  return out;
}

}  // namespace cubespec
