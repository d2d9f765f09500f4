#include "subfn/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "subfn/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subfn::kernels {

int thread_limit() {
    static const int limit = [] {
        const char* env = std::getenv("SUBFN_THREADS");
        if (!env || !*env) return 0;
        const long v = std::strtol(env, nullptr, 10);
        return v > 0 ? static_cast<int>(v) : 0;
    }();
    return limit;
}

namespace {

int worker_count() {
#ifdef _OPENMP
    const int cap = thread_limit();
    return cap > 0 ? cap : omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

Exec default_exec() {
#ifdef _OPENMP
    return worker_count() > 1 ? Exec::parallel : Exec::serial;
#else
    return Exec::serial;
#endif
}

void map_index_serial(std::size_t n, const std::function<void(std::size_t)>& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

void map_index_parallel(std::size_t n, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
    const int nw = worker_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nw)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        fn(static_cast<std::size_t>(i));
#else
    map_index_serial(n, fn);
#endif
}

void map_index(std::size_t n, const std::function<void(std::size_t)>& fn, Exec exec) {
    if (exec == Exec::parallel) map_index_parallel(n, fn);
    else map_index_serial(n, fn);
}

namespace {

// Plain ascending accumulation of one chunk into `partial`.
void chunk_partial(std::span<const double> w,
                   const std::function<std::span<const double>(std::size_t)>& value,
                   std::size_t begin, std::size_t end, std::span<double> partial) {
    std::fill(partial.begin(), partial.end(), 0.0);
    for (std::size_t i = begin; i < end; ++i) {
        const double wi = w[i];
        const auto v = value(i);
        if (v.size() != partial.size())
            throw ShapeError("weighted_sum: value shape mismatch");
        for (std::size_t j = 0; j < partial.size(); ++j) partial[j] += wi * v[j];
    }
}

// Kahan-add `partial` into acc/comp, componentwise.
void kahan_add(std::span<double> acc, std::span<double> comp,
               std::span<const double> partial) {
    for (std::size_t j = 0; j < acc.size(); ++j) {
        const double y = partial[j] - comp[j];
        const double t = acc[j] + y;
        comp[j] = (t - acc[j]) - y;
        acc[j] = t;
    }
}

// Shared driver. The chunk grid is fixed by kahan_chunk, so the combination
// order (ascending chunks, Kahan) is the same for every thread count.
void weighted_sum_impl(std::span<const double> w,
                       const std::function<std::span<const double>(std::size_t)>& value,
                       std::span<double> acc, bool parallel) {
    const std::size_t n = w.size();
    const std::size_t dim = acc.size();
    std::fill(acc.begin(), acc.end(), 0.0);
    if (n == 0) return;

    if (n <= kahan_threshold) {
        for (std::size_t i = 0; i < n; ++i) {
            const double wi = w[i];
            const auto v = value(i);
            if (v.size() != dim) throw ShapeError("weighted_sum: value shape mismatch");
            for (std::size_t j = 0; j < dim; ++j) acc[j] += wi * v[j];
        }
        return;
    }

    const std::size_t nchunks = (n + kahan_chunk - 1) / kahan_chunk;
    std::vector<double> partials(nchunks * dim);
    auto run_chunk = [&](std::size_t c) {
        const std::size_t begin = c * kahan_chunk;
        const std::size_t end = std::min(n, begin + kahan_chunk);
        chunk_partial(w, value, begin, end,
                      std::span<double>(partials.data() + c * dim, dim));
    };
    map_index(nchunks, run_chunk, parallel ? Exec::parallel : Exec::serial);

    std::vector<double> comp(dim, 0.0);
    for (std::size_t c = 0; c < nchunks; ++c)
        kahan_add(acc, comp, std::span<const double>(partials.data() + c * dim, dim));
}

}  // namespace

void weighted_sum_serial(std::span<const double> w,
                         const std::function<std::span<const double>(std::size_t)>& value,
                         std::span<double> acc) {
    weighted_sum_impl(w, value, acc, false);
}

void weighted_sum_parallel(std::span<const double> w,
                           const std::function<std::span<const double>(std::size_t)>& value,
                           std::span<double> acc) {
    weighted_sum_impl(w, value, acc, true);
}

void weighted_sum(std::span<const double> w,
                  const std::function<std::span<const double>(std::size_t)>& value,
                  std::span<double> acc, Exec exec) {
    weighted_sum_impl(w, value, acc, exec == Exec::parallel);
}

namespace {

inline std::size_t wrap_index(long long i, long long n) {
    long long m = i % n;
    if (m < 0) m += n;
    return static_cast<std::size_t>(m);
}

inline std::size_t clamp_index(long long i, long long n) {
    if (i < 0) return 0;
    if (i >= n) return static_cast<std::size_t>(n - 1);
    return static_cast<std::size_t>(i);
}

// out[i] = sum_{j=-K}^{K} khalf[|j|] * in_ext(i - j); fixed ascending-j order.
template <bool Periodic>
inline double conv_point(std::span<const double> in, std::span<const double> khalf,
                         long long i, long long n) {
    const long long K = static_cast<long long>(khalf.size()) - 1;
    double s = 0.0;
    for (long long j = -K; j <= K; ++j) {
        const double k = khalf[static_cast<std::size_t>(j < 0 ? -j : j)];
        const std::size_t idx = Periodic ? wrap_index(i - j, n) : clamp_index(i - j, n);
        s += k * in[idx];
    }
    return s;
}

void convolve_impl(std::span<const double> in, std::span<double> out,
                   std::span<const double> khalf, Extension ext, Exec exec) {
    if (in.size() != out.size()) throw DimensionError("convolve_1d: in/out size mismatch");
    if (khalf.empty()) throw DimensionError("convolve_1d: empty kernel");
    const long long n = static_cast<long long>(in.size());
    auto body = [&](std::size_t i) {
        out[i] = (ext == Extension::periodic)
                     ? conv_point<true>(in, khalf, static_cast<long long>(i), n)
                     : conv_point<false>(in, khalf, static_cast<long long>(i), n);
    };
#ifdef _OPENMP
    if (exec == Exec::parallel && n >= 64) {
        const int nw = worker_count();
#pragma omp parallel for schedule(static) num_threads(nw)
        for (long long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)exec;
    for (long long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace

void convolve_1d_serial(std::span<const double> in, std::span<double> out,
                        std::span<const double> khalf, Extension ext) {
    convolve_impl(in, out, khalf, ext, Exec::serial);
}

void convolve_1d_parallel(std::span<const double> in, std::span<double> out,
                          std::span<const double> khalf, Extension ext) {
    convolve_impl(in, out, khalf, ext, Exec::parallel);
}

void convolve_1d(std::span<const double> in, std::span<double> out,
                 std::span<const double> khalf, Extension ext, Exec exec) {
    convolve_impl(in, out, khalf, ext, exec);
}

}  // namespace subfn::kernels
