#include "toricoh/common.hpp"

#include <cstdlib>
#include <thread>

namespace toricoh {

namespace {

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

}  // namespace

Characteristic::Characteristic(long long value) {
    if (value != 0 && (!is_prime(value) || value >= (1LL << 31)))
        throw InvalidInput("characteristic must be 0 or a prime below 2^31, got " + std::to_string(value));
    value_ = static_cast<std::uint32_t>(value);
}

IndexSet negative_support(const FineDegree& p) {
    IndexSet s;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < 0) s.insert(i);
    return s;
}

FineDegree orthant_apex(IndexSet I, std::size_t n) {
    FineDegree p(n, 0);
    for (auto i : I.elements()) p[i] = -1;
    return p;
}

unsigned worker_count() {
    unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TORICOH_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

}  // namespace toricoh
