//------------------------------------------------------------------------------
//
//   Copyright 2026 The contracert Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace contracert::detail {

inline unsigned resolve_threads(unsigned requested) noexcept
{
  if (requested != 0)
  {
    return requested;
  }
  unsigned const hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

inline std::size_t chunk_count(std::size_t count, unsigned threads) noexcept
{
  return std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), count));
}

/// Splits [0, count) into at most `threads` contiguous chunks and calls
/// fn(chunk, begin, end) for each. Chunk k always covers the same range for a
/// given (count, threads), so callers can merge per-chunk results in order.
/// The first exception thrown by any chunk is rethrown.
template <class Fn>
std::size_t parallel_chunks(std::size_t count, unsigned threads, Fn &&fn)
{
  std::size_t const workers = chunk_count(count, threads);
  std::size_t const step    = count == 0 ? 0 : (count + workers - 1) / workers;
  if (workers == 1)
  {
    fn(std::size_t{0}, std::size_t{0}, count);
    return 1;
  }

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
    {
      std::size_t const begin = std::min(count, w * step);
      std::size_t const end   = std::min(count, begin + step);
      pool.emplace_back([&, w, begin, end] {
        try
        {
          fn(w, begin, end);
        }
        catch (...)
        {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto const &e : errors)
  {
    if (e)
    {
      std::rethrow_exception(e);
    }
  }
  return workers;
}

}  // namespace contracert::detail
