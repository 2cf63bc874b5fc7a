#include "flatband/common.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>

namespace flatband {

IntVec ivec_add(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec ivec_sub(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec ivec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

int32_t ivec_sup_norm(const IntVec& a) {
  int32_t m = 0;
  for (int32_t x : a) m = std::max(m, x < 0 ? -x : x);
  return m;
}

int64_t ivec_total(const IntVec& a) {
  int64_t s = 0;
  for (int32_t x : a) s += x;
  return s;
}

std::string ivec_to_string(const IntVec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  s += ")";
  return s;
}

namespace cancel {

namespace {
std::atomic<bool> g_requested{false};
}

void request() noexcept { g_requested.store(true, std::memory_order_relaxed); }
void reset() noexcept { g_requested.store(false, std::memory_order_relaxed); }
bool requested() noexcept { return g_requested.load(std::memory_order_relaxed); }

void checkpoint() {
  if (requested()) throw CancelledError();
}

}  // namespace cancel
}  // namespace flatband
