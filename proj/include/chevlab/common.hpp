#pragma once

// Shared error types, arbitrary-precision integer alias and a small
// bounded-thread parallel loop used by the long verification sweeps.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace chevlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingMismatch : Error { using Error::Error; };
struct UnsupportedRing : Error { using Error::Error; };
struct UnsupportedQuotient : Error { using Error::Error; };
struct InfiniteRing : Error { using Error::Error; };
struct PerpNonEmpty : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct NotInDelta : Error { using Error::Error; };
struct GeneratorsNotInSystem : Error { using Error::Error; };
struct PairNotAdmissible : Error { using Error::Error; };
struct ReductionMismatch : Error { using Error::Error; };
struct DecompositionFailure : Error { using Error::Error; };
struct PreconditionViolation : Error { using Error::Error; };

// Thread cap: CHEVLAB_THREADS wins, then hardware_concurrency.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("CHEVLAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [0, count). Work is split in contiguous blocks so
// results indexed by i stay deterministic regardless of the thread count.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned threads = thread_cap();
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (threads > count) threads = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        pool.emplace_back([&, lo, hi, t] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace chevlab
