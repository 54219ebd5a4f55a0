#pragma once

#include <stdexcept>
#include <string>

namespace sl2 {

// Machine-readable reasons for domain-precondition failures.
enum class errc {
  not_traceless,
  zero_input,
  indeterminate,
  non_positive_lambda,
  not_on_surface,
  not_a_ruling,
  not_critical,
  step_too_large,
  not_tangent,
  degenerate_point,
  zero_class_not_sampleable,
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::not_traceless: return "not_traceless";
    case errc::zero_input: return "zero_input";
    case errc::indeterminate: return "indeterminate";
    case errc::non_positive_lambda: return "non_positive_lambda";
    case errc::not_on_surface: return "not_on_surface";
    case errc::not_a_ruling: return "not_a_ruling";
    case errc::not_critical: return "not_critical";
    case errc::step_too_large: return "step_too_large";
    case errc::not_tangent: return "not_tangent";
    case errc::degenerate_point: return "degenerate_point";
    case errc::zero_class_not_sampleable: return "zero_class_not_sampleable";
  }
  return "unknown";
}

class domain_error : public std::runtime_error {
 public:
  domain_error(errc code, const std::string& what_arg)
      : std::runtime_error(what_arg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw domain_error(code, std::string(to_string(code)) + ": " + msg);
}

}  // namespace sl2
