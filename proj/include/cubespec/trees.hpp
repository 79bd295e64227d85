#pragma once

#include <cstdint>

#include "cubespec/cayley.hpp"
#include "cubespec/rational.hpp"
#include "cubespec/spectrum.hpp"

namespace cubespec {

struct TreeCount {
  BigInt value;
  int dimension = 0;
  bool connected = true;
};

// 2^(2^n - n - 1) * prod_{k=1..n} k^C(n,k), exact. 1 <= n <= 16; the n = 16
// value already has tens of thousands of digits.
TreeCount spanning_trees_closed_form(int n);

// Spectral route for a regular graph: degree^(N-1) * prod_{nonzero} lambda^mult / N.
// Returns value 0 with connected = false when eigenvalue 0 has multiplicity
// above 1 (the nonzero product would silently misreport). A non-integer
// result throws ConsistencyError.
TreeCount spanning_trees_from_spectrum(const SpectrumTable& spectrum,
                                       int degree, std::uint64_t vertices);

// Kirchhoff cofactor: determinant of the standard Laplacian D - A with the
// first row and column deleted, by fraction-free integer elimination.
// Deliberately ignorant of the normalized spectrum so the two counting
// routes stay independent. Capped at 64 vertices.
TreeCount spanning_trees_kirchhoff(const CayleyGraph& g);

}  // namespace cubespec
