#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace neno {

/// 0 means one worker per hardware thread.
inline unsigned resolve_workers(unsigned requested) noexcept {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

struct ScanCounters {
  std::uint64_t candidates = 0;
  std::uint64_t pairs = 0;

  ScanCounters& operator+=(const ScanCounters& o) noexcept {
    candidates += o.candidates;
    pairs += o.pairs;
    return *this;
  }
};

struct ScanResult {
  std::optional<std::uint64_t> first_failure;
  ScanCounters counters;
};

/// Finds the least index in [0, total) for which `test` reports a failure.
///
/// `make_state()` builds per-worker scratch; `test(state, index, pairs)`
/// returns true on failure and adds the pairs it examined. Chunks are handed
/// out in increasing order and chunks past the best failure are skipped, so
/// the result and the counters (every index up to and including the failure)
/// do not depend on the worker count.
template <typename MakeState, typename Test>
ScanResult first_failure_scan(std::uint64_t total, unsigned workers, MakeState&& make_state, Test&& test) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(4096, total / 256 + 1));
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<ScanCounters> per_chunk(chunks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kNone};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    try {
      auto state = make_state();
      while (true) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) return;
        const std::uint64_t begin = c * chunk;
        if (begin > best.load()) return;
        const std::uint64_t end = std::min(total, begin + chunk);
        ScanCounters& counters = per_chunk[c];
        for (std::uint64_t i = begin; i < end; ++i) {
          ++counters.candidates;
          if (test(state, i, counters.pairs)) {
            std::uint64_t seen = best.load();
            while (i < seen && !best.compare_exchange_weak(seen, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(chunks);
    }
  };

  workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(1, chunks)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  ScanResult result;
  const std::uint64_t found = best.load();
  for (std::uint64_t c = 0; c < chunks; ++c) {
    if (found != kNone && c * chunk > found) break;
    result.counters += per_chunk[c];
  }
  if (found != kNone) result.first_failure = found;
  return result;
}

}  // namespace neno
