#pragma once

namespace cubespec {

// Dense matrices (adjacency, Laplacian, Jacobi working copies) are only
// materialized up to 2^dense_cap() rows. The default of 12 keeps the largest
// dense object at 4096x4096; setting CUBESPEC_MAX_N raises or lowers it at
// the user's own memory risk.
int dense_cap();

// Largest dimension accepted by graph constructors. Adjacency is generated
// lazily, so this is well above the dense cap.
int max_dimension();

// Dimension cap for formula-only paths (closed-form spectra, eigentime,
// binomial sums). 2^64 vertices is where multiplicities stop fitting in
// machine words comfortably.
inline constexpr int kFormulaCap = 64;

}  // namespace cubespec
