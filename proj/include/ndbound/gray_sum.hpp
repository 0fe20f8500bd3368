#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ndbound/dd.hpp"
#include "ndbound/exec.hpp"

namespace ndbound {

// Signed sum over subsets S of {0..m-1}:
//
//     sum_S (-1)^{|S|} * term(w(S)),   w(S) = sum_{i in S} weights[i]
//
// The empty set is included only when `include_empty` is set. Subsets are
// visited in reflected Gray-code order so consecutive subsets differ by one
// element and w(S) is updated by a single add or subtract, carried in
// double-double so the running sum never drifts. Terms are accumulated in
// double-double as well.
//
// The Gray sequence is cut into a fixed number of contiguous chunks (the
// count depends only on m, never on the thread count); each chunk seeds its
// subset sum directly from its starting code and partial results are combined
// in chunk order. Exec::Serial walks the same chunks in a plain loop, so both
// paths return bit-identical sums.
namespace detail {

inline constexpr unsigned kMaxChunkBits = 8;

template <class Term>
dd::DD gray_chunk(std::span<const double> weights, Term& term, std::uint64_t first,
                  std::uint64_t last, bool include_empty) {
    dd::DD acc;
    std::uint64_t code = first ^ (first >> 1);
    dd::DD sum;
    for (std::size_t b = 0; b < weights.size(); ++b) {
        if (code >> b & 1U) sum = dd::add(sum, weights[b]);
    }
    for (std::uint64_t i = first; i < last; ++i) {
        if (i != first) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
            code ^= std::uint64_t{1} << bit;
            const double w = weights[bit];
            sum = dd::add(sum, (code >> bit & 1U) ? w : -w);
        }
        if (code == 0 && !include_empty) continue;
        dd::DD t = term(sum);
        if (std::popcount(code) & 1) t = dd::neg(t);
        acc = dd::add(acc, t);
    }
    return acc;
}

}  // namespace detail

template <class Term>
dd::DD alternating_subset_sum(std::span<const double> weights, Term term, bool include_empty,
                              Exec exec = Exec::Parallel) {
    const std::size_t m = weights.size();
    const std::uint64_t total = std::uint64_t{1} << m;
    const unsigned chunk_bits = m < detail::kMaxChunkBits ? static_cast<unsigned>(m)
                                                          : detail::kMaxChunkBits;
    const std::int64_t chunks = std::int64_t{1} << chunk_bits;
    const std::uint64_t chunk_len = total >> chunk_bits;
    std::vector<dd::DD> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(static) firstprivate(term) if (exec == Exec::Parallel && m >= 12)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t first = static_cast<std::uint64_t>(c) * chunk_len;
        partial[static_cast<std::size_t>(c)] =
            detail::gray_chunk(weights, term, first, first + chunk_len, include_empty);
    }

    dd::DD acc;
    for (const dd::DD& p : partial) acc = dd::add(acc, p);
    return acc;
}

}  // namespace ndbound
