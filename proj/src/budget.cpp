#include "koszulator/budget.hpp"

namespace kz {

namespace {
thread_local Budget g_budget;
}

const Budget& current_budget() { return g_budget; }

ScopedBudget::ScopedBudget(const Budget& b) : saved_(g_budget) { g_budget = b; }
ScopedBudget::~ScopedBudget() { g_budget = saved_; }

}  // namespace kz
