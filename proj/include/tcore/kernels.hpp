#pragma once

// Data-parallel kernels. Every kernel here has a straightforward serial
// reference path selected by Execution::serial; the parallel path must
// produce bit-identical results and is checked against it in tests.

#include <cstdint>
#include <functional>
#include <vector>

#include "tcore/partition.hpp"

namespace tcore {

enum class Execution { serial, parallel };

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int worker_count();

/// counts[k] = #{lambda in Par_{r,s} : |core_t(lambda)| = k}.
///
/// serial: walks BoxPartitions and calls t_core_fast on each partition.
/// parallel: splits the colex rank range into chunks, unranks each chunk
/// start and updates runner sizes incrementally; the core size comes from
/// the positions of justification. Requires C(r+s, r) < 2^62.
std::vector<std::uint64_t> exhaustive_core_size_counts(Box b, int t, Execution exec);

/// Sorted 1-positions of the boundary word with the given colex rank.
std::vector<int> unrank_colex_subset(std::uint64_t rank, int k, int n);

/// Calls body(i) for i in [0, count) in fixed contiguous chunks of
/// chunk_size; chunk boundaries never depend on the thread count.
void parallel_for_chunks(std::int64_t count, std::int64_t chunk_size, Execution exec,
                         const std::function<void(std::int64_t begin, std::int64_t end)>& body);

}  // namespace tcore
