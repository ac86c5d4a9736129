#pragma once

#include <cstdint>
#include <vector>

#include "powerdec/ff.hpp"
#include "powerdec/poly.hpp"

namespace powerdec {

/// Seedable, splittable generator (splitmix64 core). Children derived via
/// derive() depend only on the parent seed and the keys, never on how much
/// of the parent stream was consumed, so experiment trials are reproducible
/// independently of scheduling order.
class Rng {
  public:
    explicit Rng(uint64_t seed) : seed_(seed), state_(mix_init(seed)) {}

    uint64_t seed() const { return seed_; }

    /// Stateless child generator keyed by up to three values.
    Rng derive(uint64_t k1, uint64_t k2 = 0, uint64_t k3 = 0) const;

    uint64_t next();
    /// Uniform in [0, bound); bound >= 1.
    uint64_t below(uint64_t bound);

    FieldElement uniform(const Field& f);
    FieldElement uniform_nonzero(const Field& f);
    /// Uniform polynomial with the given number of coefficients (degree may
    /// be lower when high coefficients draw zero).
    Poly uniform_poly(const FieldPtr& field, size_t coeff_count);
    /// Uniformly random sorted subset of {0..n-1} of the given size.
    std::vector<size_t> subset(size_t n, size_t count);

  private:
    static uint64_t mix_init(uint64_t s);

    uint64_t seed_;
    uint64_t state_;
};

}  // namespace powerdec
