#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cbounds {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class errc {
  domain,                    // argument outside the operation's domain
  invalid_class,             // numerical data that cannot come from a curve/divisor class
  undefined_value,           // quantity genuinely undefined (beta at g = 1, x at C^2 = 0)
  precondition,              // caller-asserted hypothesis does not hold
  impossible_configuration,  // no curve can have these invariants
  unsupported_comparison,    // surds over unrelated radicals
  inconsistent_input,        // derived value would be negative/meaningless
  budget_exceeded,           // enumeration over the candidate budget
};

constexpr std::string_view to_string(errc e) noexcept {
  switch (e) {
    case errc::domain: return "domain error";
    case errc::invalid_class: return "invalid class";
    case errc::undefined_value: return "undefined value";
    case errc::precondition: return "precondition violated";
    case errc::impossible_configuration: return "impossible configuration";
    case errc::unsupported_comparison: return "unsupported comparison";
    case errc::inconsistent_input: return "inconsistent input";
    case errc::budget_exceeded: return "budget exceeded";
  }
  return "unknown error";
}

class bounds_error : public std::runtime_error {
 public:
  bounds_error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

namespace detail {

[[noreturn]] inline void fail(errc code, const std::string& what) { throw bounds_error(code, what); }

inline void require(bool cond, errc code, const char* what) {
  if (!cond) fail(code, what);
}

}  // namespace detail
}  // namespace cbounds
