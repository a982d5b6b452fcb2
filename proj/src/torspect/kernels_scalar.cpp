#include "torspect/kernels.hpp"

namespace torspect::kernels {

namespace {

void axpy_acc_scalar(uint64_t* acc, const uint32_t* row, uint64_t c, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        acc[i] += c * row[i];
}

void axpy_mod_scalar(uint32_t* out, const uint32_t* in, uint32_t c, std::size_t n, uint32_t p)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<uint32_t>((out[i] + static_cast<uint64_t>(c) * in[i]) % p);
}

void scale_mod_scalar(uint32_t* row, uint32_t c, std::size_t n, uint32_t p)
{
    for (std::size_t i = 0; i < n; ++i)
        row[i] = static_cast<uint32_t>(static_cast<uint64_t>(c) * row[i] % p);
}

void reduce_mod_scalar(uint32_t* out, const uint64_t* acc, std::size_t n, uint32_t p)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<uint32_t>(acc[i] % p);
}

}  // namespace

const Ops& scalar_ops()
{
    static const Ops ops{axpy_acc_scalar, axpy_mod_scalar, scale_mod_scalar, reduce_mod_scalar,
                         "scalar"};
    return ops;
}

}  // namespace torspect::kernels
