#include "torspect/gf.hpp"

#include "torspect/errors.hpp"

namespace torspect {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m)
{
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin witness set for n < 3.3e24.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Fp::Fp(uint64_t p)
{
    if (p >= (1ULL << 31))
        throw InputError("modulus must be below 2^31");
    if (!is_prime_u64(p))
        throw InputError("modulus " + std::to_string(p) + " is not prime");
    p_ = static_cast<uint32_t>(p);
}

uint32_t Fp::pow(uint32_t a, uint64_t e) const
{
    uint64_t r = 1 % p_;
    uint64_t base = a % p_;
    while (e) {
        if (e & 1)
            r = r * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t Fp::inv(uint32_t a) const
{
    if (a == 0)
        throw InputError("inverse of zero");
    return pow(a, p_ - 2);
}

}  // namespace torspect
