#pragma once

#include <cstdint>

namespace kz {

/// Resource caps consulted by the Gröbner, resolution and search routines.
struct Budget {
  int max_degree = 64;     // largest S-pair degree Buchberger may reach
  int max_steps = 16;      // longest resolution / replacement the engine builds
  int max_retries = 32;    // candidates tried per regular-sequence element
};

/// Budget in force on the calling thread.
const Budget& current_budget();

/// Installs a budget for the lifetime of the guard (per thread).
class ScopedBudget {
 public:
  explicit ScopedBudget(const Budget& b);
  ~ScopedBudget();
  ScopedBudget(const ScopedBudget&) = delete;
  ScopedBudget& operator=(const ScopedBudget&) = delete;

 private:
  Budget saved_;
};

}  // namespace kz
