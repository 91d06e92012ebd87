#include "tourn/kernels.hpp"

#include <stdexcept>
#include <string>

namespace tourn::kernels {

bool available(Backend backend)
{
    switch (backend) {
    case Backend::scalar:
        return true;
    case Backend::avx2:
        return detail::avx2_table() != nullptr && detail::cpu_has_avx2();
    case Backend::neon:
        return detail::neon_table() != nullptr;
    }
    return false;
}

const KernelTable& table(Backend backend)
{
    if (!available(backend))
        throw std::invalid_argument("kernel backend not available: " + std::string(name(backend)));
    switch (backend) {
    case Backend::avx2:
        return *detail::avx2_table();
    case Backend::neon:
        return *detail::neon_table();
    case Backend::scalar:
        break;
    }
    return detail::scalar_table();
}

const KernelTable& best()
{
    static const KernelTable& chosen = [] () -> const KernelTable& {
        if (available(Backend::avx2))
            return *detail::avx2_table();
        if (available(Backend::neon))
            return *detail::neon_table();
        return detail::scalar_table();
    }();
    return chosen;
}

std::string_view name(Backend backend)
{
    switch (backend) {
    case Backend::scalar:
        return "scalar";
    case Backend::avx2:
        return "avx2";
    case Backend::neon:
        return "neon";
    }
    return "unknown";
}

} // namespace tourn::kernels
