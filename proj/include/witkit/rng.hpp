#ifndef WITKIT_RNG_HPP
#define WITKIT_RNG_HPP

#include <cstdint>

#include "witkit/matrix.hpp"

namespace witkit {

/// Deterministic splitmix64 stream. Unlike the std distributions, the
/// sequence is identical across platforms, so seeded reports are
/// byte-reproducible. fork(i) yields an independent stream per task,
/// which keeps results stable no matter how callers parallelize.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal via Box-Muller.
  double normal();

  /// Independent stream derived from this seed and a stream index.
  Rng fork(std::uint64_t stream) const;

  /// Haar-random unit vector in C^d.
  CVector haar_vector(int d);

  /// Rank-1 projector onto a Haar-random unit vector.
  CMatrix haar_projector(int d);

  /// Random Hermitian matrix with iid Gaussian entries (GUE-like, unnormalized).
  CMatrix hermitian(int d);

 private:
  std::uint64_t state_;
};

}  // namespace witkit

#endif
