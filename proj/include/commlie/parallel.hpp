#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace commlie {

/// f(0), ..., f(count-1) on up to `jobs` threads. Results are in index order, so the output does
/// not depend on the number of workers. The first exception by index is rethrown.
template <class F>
auto parallel_map(std::size_t count, std::size_t jobs, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> out(count);
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        out[i] = f(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace commlie
