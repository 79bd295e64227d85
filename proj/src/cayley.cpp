#include "cubespec/cayley.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <string>

#include "cubespec/config.hpp"

namespace cubespec {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > max_dimension())
    throw DimensionError("dimension must be in [1, " +
                         std::to_string(max_dimension()) + "], got " +
                         std::to_string(n));
}

}  // namespace

GeneratorSet::GeneratorSet(int dimension, std::vector<Vertex> elements)
    : dimension_(dimension), elements_(std::move(elements)) {
  check_dimension(dimension_);
  const Vertex limit = Vertex(1) << dimension_;
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == 0)
      throw InvalidGeneratorError("identity element is not a valid generator");
    if (elements_[i] >= limit)
      throw InvalidGeneratorError("generator " + std::to_string(elements_[i]) +
                                  " out of range for dimension " +
                                  std::to_string(dimension_));
    if (i > 0 && elements_[i] == elements_[i - 1])
      throw InvalidGeneratorError("duplicate generator " +
                                  std::to_string(elements_[i]));
  }
}

CayleyGraph::CayleyGraph(GeneratorSet generators)
    : generators_(std::move(generators)) {}

void CayleyGraph::check_vertex(Vertex v) const {
  if (v >= vertex_count())
    throw VertexRangeError("vertex " + std::to_string(v) +
                           " out of range for dimension " +
                           std::to_string(dimension()));
}

bool CayleyGraph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& gens = generators_.elements();
  return std::binary_search(gens.begin(), gens.end(), u ^ v);
}

std::vector<Vertex> CayleyGraph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(generators_.size());
  for (Vertex s : generators_.elements()) out.push_back(v ^ s);
  std::sort(out.begin(), out.end());
  return out;
}

CayleyGraph make_hypercube(int n) {
  check_dimension(n);
  std::vector<Vertex> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) gens.push_back(Vertex(1) << i);
  return CayleyGraph(GeneratorSet(n, std::move(gens)));
}

CayleyGraph make_cayley(int n, std::vector<Vertex> generators) {
  return CayleyGraph(GeneratorSet(n, std::move(generators)));
}

int gf2_rank(const std::vector<Vertex>& vectors) {
  Vertex basis[64] = {};  // basis[d] has leading bit d
  int rank = 0;
  for (Vertex v : vectors) {
    while (v != 0) {
      const int d = 63 - std::countl_zero(v);
      if (basis[d] != 0) {
        v ^= basis[d];
      } else {
        basis[d] = v;
        ++rank;
        break;
      }
    }
  }
  return rank;
}

bool is_generating(const GeneratorSet& generators) {
  return gf2_rank(generators.elements()) == generators.dimension();
}

std::vector<std::uint8_t> dense_adjacency(const CayleyGraph& g) {
  if (g.dimension() > dense_cap())
    throw DimensionError("dense adjacency capped at dimension " +
                         std::to_string(dense_cap()));
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::uint8_t> a(n * n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex s : g.generators().elements()) a[v * n + (v ^ s)] = 1;
  return a;
}

bool verify_block_structure(int n) {
  if (n < 2 || n > dense_cap())
    throw DimensionError("block-structure check needs 2 <= n <= " +
                         std::to_string(dense_cap()));
  const auto big = dense_adjacency(make_hypercube(n));
  const auto small = dense_adjacency(make_hypercube(n - 1));
  const std::size_t h = std::size_t(1) << (n - 1);
  const std::size_t full = h * 2;
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      const std::uint8_t a = small[i * h + j];
      const std::uint8_t id = (i == j) ? 1 : 0;
      if (big[i * full + j] != a) return false;
      if (big[(i + h) * full + (j + h)] != a) return false;
      if (big[i * full + (j + h)] != id) return false;
      if (big[(i + h) * full + j] != id) return false;
    }
  }
  return true;
}

void write_edge_list(const CayleyGraph& g, std::ostream& out) {
  const Vertex n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

void write_dot(const CayleyGraph& g, std::ostream& out) {
  out << "graph cayley {\n";
  const Vertex n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace cubespec
