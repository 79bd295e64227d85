#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "cubespec/cayley.hpp"
#include "cubespec/matrix.hpp"
#include "cubespec/rational.hpp"

namespace cubespec {

struct SpectrumEntry {
  BigRat eigenvalue;
  BigInt multiplicity;

  bool operator==(const SpectrumEntry&) const = default;
};

// Exact eigenvalue table: strictly increasing eigenvalues, positive
// multiplicities.
class SpectrumTable {
 public:
  SpectrumTable() = default;
  explicit SpectrumTable(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  BigInt total_multiplicity() const;
  BigInt zero_multiplicity() const;

  bool operator==(const SpectrumTable&) const = default;

 private:
  std::vector<SpectrumEntry> entries_;
};

// The n-cube's normalized Laplacian spectrum in closed form:
// eigenvalue 2k/n with multiplicity C(n,k) for k = 0..n. 1 <= n <= 64.
SpectrumTable hypercube_spectrum(int n);

// I - D^{-1/2} A D^{-1/2}. Cayley graphs over Z_2^n are always regular, so
// this is 1 on the diagonal and -1/degree at adjacent pairs.
RealMatrix normalized_laplacian(const CayleyGraph& g);   // dim <= dense_cap()
RatMatrix normalized_laplacian_exact(const CayleyGraph& g);  // dim <= 6

// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
// rotations. Sweeps run until the off-diagonal Frobenius norm drops below
// tol. Throws ShapeError for non-symmetric input (asymmetry beyond 1e-14)
// and ConvergenceError if the sweep cap is hit.
std::vector<double> jacobi_eigenvalues(RealMatrix a, double tol = 1e-12);

struct EigenvalueCluster {
  double value;  // mean of the cluster members
  std::size_t multiplicity;
};

// Merges consecutive sorted values whose gap is at most `gap`. Valid for
// hypercube spectra because distinct exact eigenvalues are 2/n >= 2/64
// apart, far above the default gap.
std::vector<EigenvalueCluster> cluster_eigenvalues(
    const std::vector<double>& sorted_values, double gap = 1e-6);

// CSV with header "eigenvalue_num,eigenvalue_den,multiplicity".
void write_spectrum_csv(const SpectrumTable& table, std::ostream& out);

}  // namespace cubespec
