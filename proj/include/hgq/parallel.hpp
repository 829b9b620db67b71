#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hgq {

/// Fold `body(acc, i)` over i in [0, count) using up to `threads` workers.
///
/// The index range is cut into contiguous chunks, each folded into its own
/// copy of `identity`, and the partial results are merged in chunk order.
/// With an associative and commutative `merge` the result does not depend on
/// the thread count.
template <class Acc, class Body, class Merge>
Acc parallel_fold(std::size_t count, unsigned threads, Acc identity, Body body, Merge merge) {
  threads = std::max(1U, threads);
  const std::size_t chunks = std::min<std::size_t>(threads, std::max<std::size_t>(count, 1));
  if (chunks <= 1) {
    Acc acc = identity;
    for (std::size_t i = 0; i < count; ++i) body(acc, i);
    return acc;
  }
  std::vector<Acc> partial(chunks, identity);
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        try {
          const std::size_t lo = count * c / chunks;
          const std::size_t hi = count * (c + 1) / chunks;
          for (std::size_t i = lo; i < hi; ++i) body(partial[c], i);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc acc = std::move(partial.front());
  for (std::size_t c = 1; c < chunks; ++c) merge(acc, std::move(partial[c]));
  return acc;
}

}  // namespace hgq
