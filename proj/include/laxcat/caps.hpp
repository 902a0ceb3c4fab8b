#pragma once

#include <cstdint>

namespace laxcat {

/// Size limits shared by every construction in the library.
///
/// Validation rejects inputs above the caps instead of trying to be clever;
/// enumeration-style operations (functor search, natural-transformation
/// search, V-functor search) additionally count visited candidates against
/// `search_budget` and abort once it is exhausted.  Every operation that can
/// hit a cap takes a Caps argument, so callers can raise or lower the limits
/// per call.
struct Caps {
  int max_objects = 64;
  int max_morphisms = 512;
  std::int64_t search_budget = 1 << 20;
};

}  // namespace laxcat
