#include "cihom/errors.hpp"

#include <cstdlib>

namespace cihom {

namespace {

std::uint64_t env_u64(const char* name, std::uint64_t fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v)
        return fallback;
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0')
        return fallback;
    return parsed;
}

} // namespace

const ResourceLimits& ResourceLimits::get()
{
    static const ResourceLimits limits = [] {
        ResourceLimits l;
        l.max_gb_pairs = env_u64("CIHOM_MAX_GB_PAIRS", l.max_gb_pairs);
        l.max_betti = env_u64("CIHOM_MAX_BETTI", l.max_betti);
        return l;
    }();
    return limits;
}

} // namespace cihom
