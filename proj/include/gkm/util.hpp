#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace gkm {

using Rng = std::mt19937_64;

// child seed for a named stream; all randomness is derived from one root seed
std::uint64_t derive_seed(std::uint64_t root, const std::string& name, std::uint64_t index = 0);
inline Rng make_rng(std::uint64_t root, const std::string& name, std::uint64_t index = 0) {
    return Rng(derive_seed(root, name, index));
}

int worker_count();  // GKM_HESS_THREADS, default hardware concurrency
// runs f(k) for k in [0, count); results must be written to per-index slots
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);

std::vector<long> first_primes(int n);

}  // namespace gkm
