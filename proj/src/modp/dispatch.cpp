#include "jacsyz/modp/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace jacsyz::modp {

namespace {

const KernelTable* detect() {
    if (const char* env = std::getenv("JACSYZ_SIMD"); env && std::strcmp(env, "scalar") == 0)
        return &scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return t;
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& slot() {
    static std::atomic<const KernelTable*> current{detect()};
    return current;
}

}  // namespace

const KernelTable& active_kernels() { return *slot().load(std::memory_order_relaxed); }

bool select_kernels(const std::string& name) {
    if (name == "scalar") {
        slot().store(&scalar_kernels());
        return true;
    }
    if (name == "avx2") {
        if (const KernelTable* t = avx2_kernels()) {
            slot().store(t);
            return true;
        }
    }
    return false;
}

}  // namespace jacsyz::modp
