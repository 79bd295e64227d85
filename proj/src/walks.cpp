#include "cubespec/walks.hpp"

#include <cmath>
#include <string>

#include "cubespec/config.hpp"
#include "cubespec/errors.hpp"
#include "cubespec/rng.hpp"

namespace cubespec {

namespace {

constexpr Vertex kFirstPassageVertexCap = 256;

void check_formula_dimension(int n) {
  if (n < 1 || n > kFormulaCap)
    throw DimensionError("eigentime formulas need 1 <= n <= " +
                         std::to_string(kFormulaCap) + ", got " +
                         std::to_string(n));
}

}  // namespace

BigRat eigentime_closed_form(int n) {
  check_formula_dimension(n);
  const unsigned long un = static_cast<unsigned long>(n);
  BigRat sum(0);
  for (unsigned long k = 1; k <= un; ++k)
    sum += make_rational(un * binomial(un, k), BigInt(2 * k));
  return sum;
}

BigRat eigentime_from_spectrum(const SpectrumTable& spectrum) {
  if (spectrum.zero_multiplicity() > 1)
    throw DisconnectedError(
        "eigentime is undefined: eigenvalue 0 has multiplicity above 1");
  BigRat sum(0);
  for (const auto& e : spectrum.entries()) {
    if (e.eigenvalue == 0) continue;
    sum += BigRat(e.multiplicity) / e.eigenvalue;
  }
  return sum;
}

std::vector<BigRat> stationary_distribution(const CayleyGraph& g) {
  // degree_i / 2|E|, which is 1/N on a regular graph
  const BigRat weight = make_rational(BigInt(g.degree()),
                                      BigInt(2) * BigInt(g.edge_count()));
  return std::vector<BigRat>(static_cast<std::size_t>(g.vertex_count()),
                             weight);
}

RatMatrix first_passage_matrix(const CayleyGraph& g) {
  const Vertex count = g.vertex_count();
  if (count > kFirstPassageVertexCap)
    throw DimensionError("first-passage solve capped at " +
                         std::to_string(kFirstPassageVertexCap) + " vertices");
  const std::size_t n = static_cast<std::size_t>(count);
  const int degree = g.degree();

  RatMatrix h(n, n);
  // For target j the unknowns h_i (i != j) satisfy
  //   d*h_i - sum_{u ~ i, u != j} h_u = d,
  // the Laplacian principal submatrix system. Row index of vertex i is i,
  // shifted down by one past the deleted target row.
  for (std::size_t target = 0; target < n; ++target) {
    IntMatrix a(n - 1, n - 1);
    std::vector<BigInt> rhs(n - 1, BigInt(degree));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == target) continue;
      const std::size_t row = i < target ? i : i - 1;
      a(row, row) = degree;
      for (Vertex u : g.neighbors(i)) {
        if (u == target) continue;
        const std::size_t col = u < target ? u : u - 1;
        a(row, col) -= 1;
      }
    }
    std::vector<BigRat> column;
    try {
      column = solve_linear_system(a, rhs);
    } catch (const SingularSystemError&) {
      throw SingularSystemError(
          "first-passage system is singular: graph is disconnected");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == target) continue;
      h(i, target) = column[i < target ? i : i - 1];
    }
  }
  return h;
}

BigRat eigentime_from_first_passage(const CayleyGraph& g) {
  const RatMatrix h = first_passage_matrix(g);
  const std::size_t n = h.rows();
  const BigRat pi = make_rational(1, static_cast<long>(n));

  BigRat value(0);
  for (std::size_t j = 0; j < n; ++j) value += pi * h(0, j);
  for (std::size_t i = 1; i < n; ++i) {
    BigRat other(0);
    for (std::size_t j = 0; j < n; ++j) other += pi * h(i, j);
    if (other != value)
      throw ConsistencyError(
          "eigentime differs between start vertices 0 and " +
          std::to_string(i) + ": " + to_fraction_string(value) + " vs " +
          to_fraction_string(other));
  }
  return value;
}

EigentimeDecomposition eigentime_decomposition(int n) {
  check_formula_dimension(n);
  const unsigned long un = static_cast<unsigned long>(n);
  const BigRat half_n = make_rational(static_cast<long>(un), 2);

  BigRat s(0), l(0), t(0);
  for (unsigned long k = 1; k <= un; ++k) {
    const BigRat b(binomial(un, k));
    s += b / BigRat((k + 1));
    l += b / BigRat(k * (k + 1));
    t += b / BigRat((k + 1) * (k + 2));
  }
  s *= half_n;
  l *= half_n;
  t *= half_n;

  // n(2^{n+1} - n - 2) / (2(n+1))
  const BigRat s_closed = make_rational(
      BigInt(un) * (int_pow(BigInt(2), un + 1) - BigInt(un) - 2),
      BigInt(2) * BigInt(un + 1));
  if (s != s_closed)
    throw ConsistencyError("dominant eigentime term disagrees with its closed form at n=" +
                           std::to_string(n));
  if (l + s != eigentime_closed_form(n))
    throw ConsistencyError("eigentime decomposition does not sum back at n=" +
                           std::to_string(n));
  if (!(t < l && l <= 3 * t))
    throw ConsistencyError("remainder-term squeeze violated at n=" +
                           std::to_string(n));
  return {s, l, t};
}

BigRat eigentime_size_ratio(int n) {
  check_formula_dimension(n);
  return eigentime_closed_form(n) /
         BigRat(int_pow(BigInt(2), static_cast<unsigned long>(n)));
}

WalkReport simulate_eigentime(const CayleyGraph& g, std::int64_t trials,
                              std::uint64_t seed) {
  if (trials < 1) throw DomainError("trial count must be positive");
  if (!is_generating(g.generators()))
    throw DisconnectedError(
        "simulation requires a generating set: some targets are unreachable");

  const std::uint64_t vertex_count = g.vertex_count();
  const auto& gens = g.generators().elements();
  const std::uint64_t degree = gens.size();

  // Integer accumulation keeps the result independent of any trial
  // partitioning.
  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(stream_state(seed, static_cast<std::uint64_t>(trial)));
    const Vertex target = bounded(rng.next(), vertex_count);
    Vertex cur = 0;
    std::uint64_t steps = 0;
    while (cur != target) {
      cur ^= gens[bounded(rng.next(), degree)];
      ++steps;
    }
    sum += steps;
    sum_sq += static_cast<unsigned __int128>(steps) * steps;
  }

  const double mean = static_cast<double>(sum) / static_cast<double>(trials);
  double stderr_est = 0.0;
  if (trials > 1) {
    // sample variance from exact integer moments
    const unsigned __int128 num =
        sum_sq * static_cast<unsigned __int128>(trials) -
        static_cast<unsigned __int128>(sum) * sum;
    const double variance = static_cast<double>(num) /
                            (static_cast<double>(trials) *
                             static_cast<double>(trials - 1));
    stderr_est = std::sqrt(variance / static_cast<double>(trials));
  }
  return {g.dimension(), trials, mean, stderr_est, seed};
}

}  // namespace cubespec
