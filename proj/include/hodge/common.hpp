// Shared numeric utilities: exact combinatorial prefactors, deterministic
// pairwise summation, chunked parallel reduction, small dense determinants.
#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hodge {

/// Exact n! as a 64-bit integer; valid for n <= 20.
inline std::uint64_t factorial_u64(int n) {
    static constexpr std::array<std::uint64_t, 21> table = {
        1ULL,
        1ULL,
        2ULL,
        6ULL,
        24ULL,
        120ULL,
        720ULL,
        5040ULL,
        40320ULL,
        362880ULL,
        3628800ULL,
        39916800ULL,
        479001600ULL,
        6227020800ULL,
        87178291200ULL,
        1307674368000ULL,
        20922789888000ULL,
        355687428096000ULL,
        6402373705728000ULL,
        121645100408832000ULL,
        2432902008176640000ULL};
    if (n < 0 || n > 20) throw std::invalid_argument("factorial_u64: n out of [0,20]");
    return table[static_cast<std::size_t>(n)];
}

inline double factorial(int n) { return static_cast<double>(factorial_u64(n)); }

/// Binomial coefficient computed exactly in 128-bit integer arithmetic.
inline double binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= static_cast<unsigned __int128>(n - k + i);
        r /= static_cast<unsigned __int128>(i);
    }
    return static_cast<double>(r);
}

/// Streaming pairwise (binary-counter) summation. The reduction tree depends
/// only on the order terms are added, never on chunking or thread count.
class PairwiseSum {
  public:
    void add(double x) {
        std::uint64_t i = count_++;
        int level = 0;
        while (i & 1ULL) {
            x += partial_[static_cast<std::size_t>(level)];
            i >>= 1;
            ++level;
        }
        partial_[static_cast<std::size_t>(level)] = x;
    }

    double total() const {
        double s = 0.0;
        std::uint64_t c = count_;
        for (int level = 0; c != 0; ++level, c >>= 1)
            if (c & 1ULL) s += partial_[static_cast<std::size_t>(level)];
        return s;
    }

    std::uint64_t count() const { return count_; }

  private:
    std::array<double, 64> partial_{};
    std::uint64_t count_ = 0;
};

namespace detail {
inline std::atomic<int>& thread_override() {
    static std::atomic<int> n{0};
    return n;
}
}  // namespace detail

/// Worker count: explicit setting > HODGE_THREADS > hardware concurrency.
inline int thread_count() {
    int n = detail::thread_override().load();
    if (n > 0) return n;
    if (const char* env = std::getenv("HODGE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

inline void set_thread_count(int n) { detail::thread_override().store(n); }

/// Runs fn(chunk_index) for chunk_index in [0, n_chunks). Chunk boundaries are
/// caller-defined, so results may be combined in chunk order afterwards to get
/// an answer independent of the worker count.
template <typename Fn>
void parallel_for_chunks(std::size_t n_chunks, Fn&& fn) {
    int workers = thread_count();
    if (workers <= 1 || n_chunks <= 1) {
        for (std::size_t i = 0; i < n_chunks; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n_chunks) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), n_chunks));
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int w = 0; w < spawn; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

/// Deterministic parallel reduction: each chunk produces a partial via
/// chunk_sum(i), partials are combined pairwise in chunk order.
template <typename ChunkSum>
double reduce_chunked(std::size_t n_chunks, ChunkSum&& chunk_sum) {
    std::vector<double> partials(n_chunks, 0.0);
    parallel_for_chunks(n_chunks, [&](std::size_t i) { partials[i] = chunk_sum(i); });
    PairwiseSum acc;
    for (double p : partials) acc.add(p);
    return acc.total();
}

/// Determinant of a small row-major n x n matrix by Gaussian elimination with
/// partial pivoting. Destroys the buffer.
inline double det_inplace(double* a, int n) {
    if (n == 0) return 1.0;
    if (n == 1) return a[0];
    if (n == 2) return a[0] * a[3] - a[1] * a[2];
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::fabs(a[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double v = std::fabs(a[r * n + col]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = col; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
            det = -det;
        }
        double d = a[col * n + col];
        det *= d;
        for (int r = col + 1; r < n; ++r) {
            double factor = a[r * n + col] / d;
            if (factor == 0.0) continue;
            for (int c = col + 1; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
        }
    }
    return det;
}

}  // namespace hodge
