#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cubespec/errors.hpp"

namespace cubespec {

// A vertex is an element of Z_2^n encoded as an unsigned integer in
// 0..2^n-1. The group operation is bitwise XOR and the identity is 0.
// Numeric order of the encoding is the lexicographic order of the
// coordinate tuple (x_1,...,x_n) with x_1 in the most significant bit, which
// is what makes the recursive block form of the adjacency matrix literal:
// the first half of all indices is exactly the x_1 = 0 half.
using Vertex = std::uint64_t;

// Validated set of connection elements of Z_2^n: nonzero, distinct, all
// below 2^n. Every element of Z_2^n is its own inverse, so closure under
// inversion is automatic.
class GeneratorSet {
 public:
  GeneratorSet(int dimension, std::vector<Vertex> elements);

  int dimension() const { return dimension_; }
  const std::vector<Vertex>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  int dimension_;
  std::vector<Vertex> elements_;  // sorted ascending
};

// Undirected graph on Z_2^n with u ~ v iff u XOR v is a generator. Immutable
// after construction; adjacency is computed on demand, never stored.
class CayleyGraph {
 public:
  explicit CayleyGraph(GeneratorSet generators);

  int dimension() const { return generators_.dimension(); }
  Vertex vertex_count() const { return Vertex(1) << dimension(); }
  int degree() const { return static_cast<int>(generators_.size()); }
  std::uint64_t edge_count() const { return vertex_count() / 2 * degree(); }
  const GeneratorSet& generators() const { return generators_; }

  bool adjacent(Vertex u, Vertex v) const;

  // XOR translates of v by each generator, sorted ascending.
  std::vector<Vertex> neighbors(Vertex v) const;

  void check_vertex(Vertex v) const;

 private:
  GeneratorSet generators_;
};

// The n-cube: generators are the n weight-1 vectors. 1 <= n <= max_dimension().
CayleyGraph make_hypercube(int n);

// General Cayley graph over Z_2^n; connected iff the generators span GF(2)^n.
CayleyGraph make_cayley(int n, std::vector<Vertex> generators);

// True iff the generators span GF(2)^n (Gaussian elimination over GF(2)),
// equivalently iff the Cayley graph is connected.
bool is_generating(const GeneratorSet& generators);

int gf2_rank(const std::vector<Vertex>& vectors);

// Materializes the adjacency matrices of the n-cube and the (n-1)-cube and
// checks entrywise that the larger one is [[A', I], [I, A']]. Dense, so
// capped at the configured dense dimension.
bool verify_block_structure(int n);

// Dense 0/1 adjacency in lexicographic vertex order; capped at dense_cap().
std::vector<std::uint8_t> dense_adjacency(const CayleyGraph& g);

// One edge per line, "u v" with u < v, sorted.
void write_edge_list(const CayleyGraph& g, std::ostream& out);

// Undirected DOT document.
void write_dot(const CayleyGraph& g, std::ostream& out);

}  // namespace cubespec
