#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace wkl {

// Worker cap from WKL_THREADS, else hardware concurrency.
int worker_count();

// Runs f(i) for i in [0, n). Each index writes only its own slot, so the
// result never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

// Fixed binary reduction tree.
template <class T>
T pairwise_sum(const T* v, std::size_t n) {
    if (n == 0) return T{};
    if (n == 1) return v[0];
    if (n <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < n; ++i) s += v[i];
        return s;
    }
    std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(v.data(), v.size());
}

}  // namespace wkl
