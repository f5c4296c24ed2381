#pragma once

#include <cstdint>

#include "qhom/field.hpp"

namespace qhom {

/// Deterministic splitmix64 generator.  Hand-rolled so that identical seeds
/// give identical streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [0, n); deterministic, n >= 1.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Random scalar with small integer value in [-bound, bound] (rationals)
  /// or a uniform residue (prime fields).
  Scalar scalar(const FieldSpec& f, int bound = 5) {
    if (f.kind == FieldKind::PrimeField)
      return Scalar::from_int(f, static_cast<std::int64_t>(
                                     below(static_cast<std::uint64_t>(
                                         f.characteristic))));
    return Scalar::from_int(f, range(-bound, bound));
  }

  /// Fork an independent deterministic substream.
  Rng fork() { return Rng(next() ^ 0xa0761d6478bd642full); }

 private:
  std::uint64_t state_;
};

}  // namespace qhom
