#include "cubespec/trees.hpp"

#include <bit>
#include <string>

#include "cubespec/errors.hpp"
#include "cubespec/matrix.hpp"

namespace cubespec {

namespace {

constexpr int kClosedFormCap = 16;
constexpr Vertex kKirchhoffVertexCap = 64;

int dimension_of(std::uint64_t vertices) {
  if (vertices != 0 && std::has_single_bit(vertices))
    return std::countr_zero(vertices);
  return -1;
}

}  // namespace

TreeCount spanning_trees_closed_form(int n) {
  if (n < 1 || n > kClosedFormCap)
    throw DimensionError("closed-form tree count needs 1 <= n <= " +
                         std::to_string(kClosedFormCap) + ", got " +
                         std::to_string(n));
  const unsigned long un = static_cast<unsigned long>(n);
  BigInt value = int_pow(BigInt(2), (1ul << un) - un - 1);
  for (unsigned long k = 2; k <= un; ++k)
    value *= int_pow(BigInt(k), binomial(un, k).get_ui());
  return {value, n, true};
}

TreeCount spanning_trees_from_spectrum(const SpectrumTable& spectrum,
                                       int degree, std::uint64_t vertices) {
  if (degree < 1 || vertices < 1)
    throw DomainError("spectral tree count needs a positive degree and size");
  const int n = dimension_of(vertices);
  const BigInt zero_mult = spectrum.zero_multiplicity();
  if (zero_mult == 0)
    throw DomainError("not a graph spectrum: eigenvalue 0 is missing");
  if (zero_mult > 1) return {BigInt(0), n, false};

  BigRat product(int_pow(BigInt(degree), vertices - 1));
  for (const auto& e : spectrum.entries()) {
    if (e.eigenvalue == 0) continue;
    if (!e.multiplicity.fits_ulong_p())
      throw DomainError("eigenvalue multiplicity too large to exponentiate");
    product *= rat_pow(e.eigenvalue, e.multiplicity.get_ui());
  }
  product /= BigInt(vertices);
  if (product.get_den() != 1)
    throw ConsistencyError("spectral tree count is not an integer: " +
                           to_fraction_string(product));
  return {product.get_num(), n, true};
}

TreeCount spanning_trees_kirchhoff(const CayleyGraph& g) {
  const Vertex count = g.vertex_count();
  if (count > kKirchhoffVertexCap)
    throw DimensionError("Kirchhoff determinant capped at " +
                         std::to_string(kKirchhoffVertexCap) + " vertices");
  const std::size_t n = static_cast<std::size_t>(count);

  // standard Laplacian D - A with row/column 0 deleted
  IntMatrix reduced(n - 1, n - 1);
  for (std::size_t v = 1; v < n; ++v) {
    reduced(v - 1, v - 1) = g.degree();
    for (Vertex u : g.neighbors(v))
      if (u != 0) reduced(v - 1, u - 1) -= 1;
  }
  BigInt det = bareiss_determinant(std::move(reduced));
  return {det, g.dimension(), det != 0};
}

}  // namespace cubespec
