#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <string_view>

namespace psa {

/// Selects between the OpenMP kernel and its serial reference.
/// Both produce identical results; the serial path exists for testing and benchmarks.
enum class Exec { Serial, Parallel };

/// Three-valued answer for questions the membership oracle may refuse.
enum class Verdict { No, Yes, Unsupported };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::No: return "no";
  case Verdict::Yes: return "yes";
  case Verdict::Unsupported: return "unsupported";
  }
  return "?";
}

/// Runs fn(i) for i in [0, n). Under Exec::Parallel the loop is an OpenMP
/// parallel-for; the first exception thrown by any iteration is rethrown.
/// fn must only write to per-index state.
template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(psa_for_each_index_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
}

} // namespace psa
