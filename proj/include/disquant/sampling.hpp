#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <thread>
#include <vector>

#include "disquant/algebra.hpp"

namespace disquant {

// Per-item seed independent of evaluation order.
inline std::uint64_t point_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1) + 0xBF58476D1CE4E5B9ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline Vec3 random_unit_vector(std::mt19937_64& rng)
{
    std::normal_distribution<double> nd(0.0, 1.0);
    for (;;) {
        Vec3 v{nd(rng), nd(rng), nd(rng)};
        const double r = norm(v);
        if (r > 1e-3) return v / r;
    }
}

inline SpinorParams random_spinor_params(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-M_PI, M_PI);
    std::normal_distribution<double> nd(0.0, 0.8);
    SpinorParams p;
    p.A = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    p.kappa = u(rng);
    p.phi = u(rng);
    do {
        p.eta = Vec3(nd(rng), nd(rng), nd(rng));
    } while (norm(p.eta) > 3.0);
    p.n = random_unit_vector(rng);
    p.z = random_unit_vector(rng);
    return p;
}

// Evaluates fn(i) for i in [0, n) on up to `threads` workers; results keep index order.
template <class Fn>
auto parallel_map(std::size_t n, unsigned threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    std::vector<decltype(fn(std::size_t{}))> out(n);
    const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(t);
    for (unsigned w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += t) out[i] = fn(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace disquant
