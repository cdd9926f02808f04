#include "symcoh/errors.hpp"

#include <atomic>
#include <limits>

namespace symcoh {

namespace {

std::atomic<std::uint64_t> g_entry_cap{Guards::kDefaultEntryCap};
std::atomic<std::uint64_t> g_enumeration_cap{Guards::kDefaultEnumerationCap};
std::atomic<std::uint64_t> g_group_order_cap{Guards::kDefaultGroupOrderCap};

}  // namespace

std::uint64_t Guards::entry_cap() { return g_entry_cap.load(); }
void Guards::set_entry_cap(std::uint64_t cap) { g_entry_cap.store(cap); }
std::uint64_t Guards::enumeration_cap() { return g_enumeration_cap.load(); }
void Guards::set_enumeration_cap(std::uint64_t cap) { g_enumeration_cap.store(cap); }
std::uint64_t Guards::group_order_cap() { return g_group_order_cap.load(); }
void Guards::set_group_order_cap(std::uint64_t cap) { g_group_order_cap.store(cap); }

void Guards::check_entries(std::uint64_t rows, std::uint64_t cols, const std::string& what) {
  if (rows != 0 && cols > std::numeric_limits<std::uint64_t>::max() / rows) {
    throw ResourceGuardError(what + ": matrix dimensions overflow");
  }
  check_count(rows * cols, what);
}

void Guards::check_count(std::uint64_t count, const std::string& what) {
  const std::uint64_t cap = entry_cap();
  if (count > cap) {
    throw ResourceGuardError(what + ": " + std::to_string(count) + " entries exceed the cap of " +
                             std::to_string(cap));
  }
}

ScopedGuards::ScopedGuards()
    : entry_cap_(Guards::entry_cap()),
      enumeration_cap_(Guards::enumeration_cap()),
      group_order_cap_(Guards::group_order_cap()) {}

ScopedGuards::~ScopedGuards() {
  Guards::set_entry_cap(entry_cap_);
  Guards::set_enumeration_cap(enumeration_cap_);
  Guards::set_group_order_cap(group_order_cap_);
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

}  // namespace symcoh
