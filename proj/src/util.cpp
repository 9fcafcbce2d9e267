#include "gkm/util.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace gkm {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t root, const std::string& name, std::uint64_t index) {
    std::uint64_t h = splitmix(root);
    for (unsigned char ch : name) h = splitmix(h ^ ch);
    return splitmix(h ^ splitmix(index));
}

int worker_count() {
    if (const char* env = std::getenv("GKM_HESS_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
    int workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) f(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t k; (k = next++) < count;) {
                try {
                    f(k);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::vector<long> first_primes(int n) {
    std::vector<long> p;
    for (long x = 2; static_cast<int>(p.size()) < n; ++x) {
        bool prime = true;
        for (long q : p) {
            if (q * q > x) break;
            if (x % q == 0) {
                prime = false;
                break;
            }
        }
        if (prime) p.push_back(x);
    }
    return p;
}

}  // namespace gkm
