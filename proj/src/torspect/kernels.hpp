#pragma once

#include <cstddef>
#include <cstdint>

namespace torspect::kernels {

/* Row-operation kernels under Gaussian elimination over GF(p).  All rows hold
 * reduced values in [0, p).  The hot path is axpy_acc: it accumulates
 * c*row into a 64-bit workspace without reducing, so eliminating one row
 * against all pivots costs a single reduction pass at the end.  Callers must
 * keep accumulators below 2^63 (see RrefBuilder for the budget bookkeeping).
 *
 * The AVX2 variants of axpy_mod/scale_mod require p < 2^15 so that
 * out + c*in stays below 2^31; the dispatcher falls back to scalar code for
 * larger moduli.  Every variant computes bit-identical results to the scalar
 * reference and is equivalence-tested against it. */

using AxpyAccFn = void (*)(uint64_t* acc, const uint32_t* row, uint64_t c, std::size_t n);
using AxpyModFn = void (*)(uint32_t* out, const uint32_t* in, uint32_t c, std::size_t n, uint32_t p);
using ScaleModFn = void (*)(uint32_t* row, uint32_t c, std::size_t n, uint32_t p);
using ReduceModFn = void (*)(uint32_t* out, const uint64_t* acc, std::size_t n, uint32_t p);

struct Ops {
    AxpyAccFn axpy_acc;
    AxpyModFn axpy_mod;
    ScaleModFn scale_mod;
    ReduceModFn reduce_mod;
    const char* name;
};

const Ops& scalar_ops();
bool cpu_has_avx2();
#ifdef TORSPECT_HAVE_AVX2_TU
const Ops& avx2_ops();  // valid only for p < 2^15
#endif

/* Kernels to use for modulus p on this machine.  The environment variable
 * TORSPECT_SIMD=scalar|avx2 overrides autodetection (used by the
 * equivalence tests). */
const Ops& select_ops(uint32_t p);

}  // namespace torspect::kernels
