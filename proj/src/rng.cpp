#include "witkit/rng.hpp"

#include <cmath>
#include <numbers>

namespace witkit {

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  // Box-Muller; the paired value is discarded to keep the stream stateless.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rng Rng::fork(std::uint64_t stream) const {
  std::uint64_t mix = state_ ^ (0x632be59bd9b4e019ULL * (stream + 1));
  return Rng(splitmix64(mix));
}

CVector Rng::haar_vector(int d) {
  CVector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(normal(), normal());
  v /= v.norm();
  return v;
}

CMatrix Rng::haar_projector(int d) {
  const CVector v = haar_vector(d);
  return v * v.adjoint();
}

CMatrix Rng::hermitian(int d) {
  CMatrix x(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) x(i, j) = Complex(normal(), normal());
  return (x + x.adjoint()) / 2.0;
}

}  // namespace witkit
