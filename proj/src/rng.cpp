#include "powerdec/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace powerdec {

namespace {

uint64_t splitmix(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

uint64_t Rng::mix_init(uint64_t s) {
    uint64_t st = s;
    (void)splitmix(st);
    return st;
}

Rng Rng::derive(uint64_t k1, uint64_t k2, uint64_t k3) const {
    uint64_t st = seed_;
    uint64_t h = splitmix(st);
    st ^= k1 + 0x632be59bd9b4e019ull;
    h ^= splitmix(st);
    st ^= k2 + 0x9e6c63d0876a9a47ull;
    h ^= splitmix(st);
    st ^= k3 + 0xc2b2ae3d27d4eb4full;
    h ^= splitmix(st);
    return Rng(h);
}

uint64_t Rng::next() { return splitmix(state_); }

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    // Lemire's multiply-shift with rejection
    uint64_t x = next();
    __uint128_t m = (__uint128_t)x * bound;
    uint64_t lo = (uint64_t)m;
    if (lo < bound) {
        uint64_t thresh = (0 - bound) % bound;
        while (lo < thresh) {
            x = next();
            m = (__uint128_t)x * bound;
            lo = (uint64_t)m;
        }
    }
    return (uint64_t)(m >> 64);
}

FieldElement Rng::uniform(const Field& f) {
    return {&f, (uint32_t)below(f.order())};
}

FieldElement Rng::uniform_nonzero(const Field& f) {
    return {&f, (uint32_t)(1 + below(f.order() - 1))};
}

Poly Rng::uniform_poly(const FieldPtr& field, size_t coeff_count) {
    std::vector<uint32_t> c(coeff_count);
    for (auto& v : c) v = (uint32_t)below(field->order());
    return Poly(field, std::move(c));
}

std::vector<size_t> Rng::subset(size_t n, size_t count) {
    if (count > n) throw std::invalid_argument("subset larger than ground set");
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (size_t i = 0; i < count; ++i) {
        size_t j = i + (size_t)below(n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(count);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace powerdec
