#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "plateau/sim/kernels.hpp"

namespace plateau::sim {

#ifdef PLATEAU_HAVE_AVX2_BACKEND
extern const KernelBackend kAvx2Backend;

const KernelBackend* avx2_backend() noexcept {
    return __builtin_cpu_supports("avx2") ? &kAvx2Backend : nullptr;
}
#else
const KernelBackend* avx2_backend() noexcept { return nullptr; }
#endif

std::vector<const KernelBackend*> available_backends() {
    std::vector<const KernelBackend*> out{&scalar_backend()};
    if (const KernelBackend* b = avx2_backend()) {
        out.push_back(b);
    }
    return out;
}

const KernelBackend& resolve_backend(const char* choice) {
    if (choice == nullptr || std::string_view(choice).empty()) {
        if (const KernelBackend* b = avx2_backend()) {
            return *b;
        }
        return scalar_backend();
    }
    const std::string_view name(choice);
    if (name == "scalar") {
        return scalar_backend();
    }
    if (name == "avx2") {
        if (const KernelBackend* b = avx2_backend()) {
            return *b;
        }
        throw std::invalid_argument("PLATEAU_SIMD=avx2 requested but AVX2 is "
                                    "not available on this machine");
    }
    throw std::invalid_argument("unknown SIMD backend '" + std::string(name) +
                                "' (expected 'scalar' or 'avx2')");
}

const KernelBackend& active_backend() {
    static const KernelBackend& chosen =
        resolve_backend(std::getenv("PLATEAU_SIMD"));
    return chosen;
}

}  // namespace plateau::sim
