#include "cubespec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "cubespec/config.hpp"
#include "cubespec/errors.hpp"

namespace cubespec {

namespace {

constexpr int kExactLaplacianCap = 6;
constexpr int kMaxJacobiSweeps = 100;
constexpr double kSymmetryTolerance = 1e-14;

double off_diagonal_norm(const RealMatrix& a) {
  const std::size_t n = a.rows();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(2.0 * sum);
}

}  // namespace

SpectrumTable::SpectrumTable(std::vector<SpectrumEntry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              return a.eigenvalue < b.eigenvalue;
            });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].multiplicity <= 0)
      throw DomainError("spectrum multiplicities must be positive");
    if (i > 0 && entries_[i].eigenvalue == entries_[i - 1].eigenvalue)
      throw DomainError("duplicate eigenvalue in spectrum table");
  }
}

BigInt SpectrumTable::total_multiplicity() const {
  BigInt total(0);
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

BigInt SpectrumTable::zero_multiplicity() const {
  for (const auto& e : entries_)
    if (e.eigenvalue == 0) return e.multiplicity;
  return BigInt(0);
}

SpectrumTable hypercube_spectrum(int n) {
  if (n < 1 || n > kFormulaCap)
    throw DimensionError("closed-form spectrum needs 1 <= n <= " +
                         std::to_string(kFormulaCap) + ", got " +
                         std::to_string(n));
  std::vector<SpectrumEntry> entries;
  entries.reserve(static_cast<std::size_t>(n) + 1);
  const unsigned long un = static_cast<unsigned long>(n);
  for (unsigned long k = 0; k <= un; ++k)
    entries.push_back(
        {make_rational(BigInt(2 * k), BigInt(un)), binomial(un, k)});
  return SpectrumTable(std::move(entries));
}

RealMatrix normalized_laplacian(const CayleyGraph& g) {
  if (g.dimension() > dense_cap())
    throw DimensionError("dense Laplacian capped at dimension " +
                         std::to_string(dense_cap()));
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  const double off = -1.0 / g.degree();
  RealMatrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    m(v, v) = 1.0;
    for (Vertex s : g.generators().elements()) m(v, v ^ s) = off;
  }
  return m;
}

RatMatrix normalized_laplacian_exact(const CayleyGraph& g) {
  if (g.dimension() > kExactLaplacianCap)
    throw DimensionError("exact Laplacian capped at dimension " +
                         std::to_string(kExactLaplacianCap));
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  const BigRat off = make_rational(-1, g.degree());
  RatMatrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    m(v, v) = 1;
    for (Vertex s : g.generators().elements()) m(v, v ^ s) = off;
  }
  return m;
}

std::vector<double> jacobi_eigenvalues(RealMatrix a, double tol) {
  if (!a.square()) throw ShapeError("eigensolver needs a square matrix");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  const std::size_t n = a.rows();
  if (n > (std::size_t(1) << dense_cap()))
    throw DimensionError("eigensolver order capped at 2^" +
                         std::to_string(dense_cap()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > kSymmetryTolerance)
        throw ShapeError("eigensolver input is not symmetric");

  std::vector<double> diag(n);
  if (n == 1) return {a(0, 0)};

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off < tol) {
      for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
      std::sort(diag.begin(), diag.end());
      return diag;
    }
    // Early sweeps skip entries far below the mean off-diagonal magnitude;
    // later sweeps rotate everything nonzero.
    const double thresh =
        sweep < 3 ? 0.2 * off / (static_cast<double>(n) * n) : 0.0;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0 || std::abs(apq) <= thresh) continue;

        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        double* rp = a.row(p);
        double* rq = a.row(q);
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = rp[k];
          const double akq = rq[k];
          rp[k] = akp - s * (akq + tau * akp);
          rq[k] = akq + s * (akp - tau * akq);
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a(k, p) = rp[k];
          a(k, q) = rq[k];
        }
      }
    }
  }
  throw ConvergenceError("Jacobi iteration did not reach tolerance within " +
                         std::to_string(kMaxJacobiSweeps) + " sweeps");
}

std::vector<EigenvalueCluster> cluster_eigenvalues(
    const std::vector<double>& sorted_values, double gap) {
  if (gap <= 0) throw DomainError("cluster gap must be positive");
  std::vector<EigenvalueCluster> clusters;
  std::size_t start = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < sorted_values.size(); ++i) {
    sum += sorted_values[i];
    const bool last = i + 1 == sorted_values.size();
    if (last || sorted_values[i + 1] - sorted_values[i] > gap) {
      const std::size_t count = i - start + 1;
      clusters.push_back({sum / static_cast<double>(count), count});
      start = i + 1;
      sum = 0.0;
    }
  }
  return clusters;
}

void write_spectrum_csv(const SpectrumTable& table, std::ostream& out) {
  out << "eigenvalue_num,eigenvalue_den,multiplicity\n";
  for (const auto& e : table.entries())
    out << e.eigenvalue.get_num().get_str() << ','
        << e.eigenvalue.get_den().get_str() << ','
        << e.multiplicity.get_str() << '\n';
}

}  // namespace cubespec
