#pragma once

#include <cstdint>

#include "cubespec/cayley.hpp"
#include "cubespec/matrix.hpp"
#include "cubespec/rational.hpp"
#include "cubespec/spectrum.hpp"

namespace cubespec {

// Expected time for a walker to hit a stationary-random target, i.e. the
// Kemeny constant of the simple random walk. Identical values come out of
// three routes: the closed-form binomial sum, the spectral sum over nonzero
// normalized-Laplacian eigenvalues, and the exact first-passage solve.

// sum_{k=1..n} n*C(n,k)/(2k), exact. 1 <= n <= 64.
BigRat eigentime_closed_form(int n);

// sum of multiplicity/eigenvalue over nonzero eigenvalues. Throws
// DisconnectedError when eigenvalue 0 has multiplicity above 1 (the
// eigentime is undefined for a disconnected graph).
BigRat eigentime_from_spectrum(const SpectrumTable& spectrum);

// pi_i = degree_i / 2|E|; uniform here since Cayley graphs are regular.
std::vector<BigRat> stationary_distribution(const CayleyGraph& g);

// Full mean-first-passage-time matrix H, H[i][j] = expected steps from i to
// first reach j, H[i][i] = 0. One exact linear solve per target column via
// fraction-free elimination. Capped at 2^n <= 256 vertices; throws
// SingularSystemError for disconnected graphs.
RatMatrix first_passage_matrix(const CayleyGraph& g);

// sum_j pi_j H[i][j] evaluated at i = 0, with the identical value asserted
// for every other start vertex (throws ConsistencyError otherwise -- that
// equality is the point of the identity).
BigRat eigentime_from_first_passage(const CayleyGraph& g);

// The three binomial sums behind the linear-growth argument:
//   s = (n/2) sum C(n,k)/(k+1)        -- dominant part, ~2^n
//   l = (n/2) sum C(n,k)/(k(k+1))     -- remainder, eigentime = s + l
//   t = (n/2) sum C(n,k)/((k+1)(k+2)) -- comparison sum squeezing l
// Construction asserts s = n(2^{n+1}-n-2)/(2(n+1)), eigentime = s + l and
// t < l <= 3t; violations throw ConsistencyError.
struct EigentimeDecomposition {
  BigRat s;
  BigRat l;
  BigRat t;
};
EigentimeDecomposition eigentime_decomposition(int n);

// eigentime / 2^n, exact; approaches 1 from either side as n grows.
BigRat eigentime_size_ratio(int n);

struct WalkReport {
  int n = 0;
  std::int64_t trials = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t seed = 0;
};

// Monte Carlo estimate of the eigentime: per trial, draw a stationary
// target, walk from vertex 0 by uniform generator steps until hitting it,
// and average the hitting times. Fully determined by (seed, trials); trial
// index t draws from its own splitmix64 stream. Throws DisconnectedError if
// the generators do not span.
WalkReport simulate_eigentime(const CayleyGraph& g, std::int64_t trials,
                              std::uint64_t seed);

}  // namespace cubespec
