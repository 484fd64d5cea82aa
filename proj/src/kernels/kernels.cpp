#include "moyal/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace moyal::kernels {

bool avx2_available() {
#if (defined(__x86_64__) || defined(__i386__)) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

static const Ops& select() {
    const char* env = std::getenv("MOYAL_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return scalar_ops();
    if (env && std::strcmp(env, "avx2") == 0) return avx2_ops();
    return avx2_available() ? avx2_ops() : scalar_ops();
}

const Ops& ops() {
    static const Ops& selected = select();
    return selected;
}

} // namespace moyal::kernels
