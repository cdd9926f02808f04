#ifndef SYMCOH_ERRORS_HPP
#define SYMCOH_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symcoh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (group spec, module spec, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid arguments (dimension mismatch, index out of range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size limit would be exceeded.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured cap.
class EnumerationGuardError : public ResourceGuardError {
 public:
  using ResourceGuardError::ResourceGuardError;
};

class CompositionNotZero : public Error {
 public:
  using Error::Error;
};

/// A matrix does not respect the relations of its source group.
class NotWellDefined : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class InfiniteBase : public Error {
 public:
  using Error::Error;
};

/// Group axioms failed for a multiplication table.
class NotAGroup : public Error {
 public:
  using Error::Error;
};

/// Process-wide limits.  Reads and writes are atomic.
struct Guards {
  static constexpr std::uint64_t kDefaultEntryCap = 10'000'000;
  static constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;
  static constexpr std::uint64_t kDefaultGroupOrderCap = 1'024;

  static std::uint64_t entry_cap();
  static void set_entry_cap(std::uint64_t cap);
  static std::uint64_t enumeration_cap();
  static void set_enumeration_cap(std::uint64_t cap);
  static std::uint64_t group_order_cap();
  static void set_group_order_cap(std::uint64_t cap);

  /// Throws ResourceGuardError when rows*cols exceeds the entry cap.
  static void check_entries(std::uint64_t rows, std::uint64_t cols, const std::string& what);
  /// Throws ResourceGuardError when `count` exceeds the entry cap.
  static void check_count(std::uint64_t count, const std::string& what);
};

/// Restores all guards to their previous values on destruction.
class ScopedGuards {
 public:
  ScopedGuards();
  ~ScopedGuards();
  ScopedGuards(const ScopedGuards&) = delete;
  ScopedGuards& operator=(const ScopedGuards&) = delete;

 private:
  std::uint64_t entry_cap_, enumeration_cap_, group_order_cap_;
};

/// base^exp, saturating at UINT64_MAX.
std::uint64_t checked_power(std::uint64_t base, unsigned exp);

}  // namespace symcoh

#endif  // SYMCOH_ERRORS_HPP
