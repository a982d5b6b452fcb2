#pragma once

#include <cstdint>

namespace torspect {

bool is_prime_u64(uint64_t n);

/* Prime field GF(p) with canonical representatives in [0, p).  The modulus is
 * capped at 2^31 so that a*b fits in uint64_t without widening tricks; the
 * SIMD kernels additionally specialize for p < 2^15 (which covers the default
 * experiment prime 32003). */
class Fp {
public:
    explicit Fp(uint64_t p);

    uint32_t modulus() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const
    {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const
    {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;  // a != 0

    // Canonical representative of an arbitrary signed integer.
    uint32_t reduce(int64_t v) const
    {
        int64_t r = v % static_cast<int64_t>(p_);
        return static_cast<uint32_t>(r < 0 ? r + p_ : r);
    }

    bool operator==(const Fp& other) const { return p_ == other.p_; }

private:
    uint32_t p_;
};

}  // namespace torspect
