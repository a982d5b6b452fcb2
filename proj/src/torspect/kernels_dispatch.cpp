#include "torspect/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace torspect::kernels {

bool cpu_has_avx2()
{
#if defined(TORSPECT_HAVE_AVX2_TU) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops& select_ops(uint32_t p)
{
#ifdef TORSPECT_HAVE_AVX2_TU
    static const int mode = [] {
        const char* env = std::getenv("TORSPECT_SIMD");
        if (env && std::strcmp(env, "scalar") == 0)
            return 0;
        if (env && std::strcmp(env, "avx2") == 0)
            return cpu_has_avx2() ? 1 : 0;
        return cpu_has_avx2() ? 1 : 0;
    }();
    // axpy_mod/scale_mod lane arithmetic needs out + c*in < 2^31.
    if (mode == 1 && p < (1u << 15))
        return avx2_ops();
    if (mode == 1) {
        static const Ops mixed{avx2_ops().axpy_acc, scalar_ops().axpy_mod, scalar_ops().scale_mod,
                               scalar_ops().reduce_mod, "avx2-acc+scalar"};
        return mixed;
    }
#else
    (void)p;
#endif
    return scalar_ops();
}

}  // namespace torspect::kernels
