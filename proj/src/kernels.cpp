#include "lpc/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace lpc::kernels {

bool avx2_available() {
#if defined(LPC_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

#if !defined(LPC_HAVE_AVX2_TU) || !(defined(__x86_64__) || defined(_M_X64))
const Ops& avx2_ops() { return scalar_ops(); }
#endif

const Ops& ops() {
    static const Ops& chosen = []() -> const Ops& {
        if (const char* force = std::getenv("LPC_KERNEL")) {
            if (std::strcmp(force, "scalar") == 0) return scalar_ops();
            if (std::strcmp(force, "avx2") == 0 && avx2_available()) return avx2_ops();
        }
        return avx2_available() ? avx2_ops() : scalar_ops();
    }();
    return chosen;
}

}  // namespace lpc::kernels
