#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liepic {

enum class ErrorKind {
  InvalidType,  // malformed or out-of-range Lie type token
  Usage,        // malformed command-line input
  Domain,       // argument outside the mathematical domain (non-dominant weight, gcd != 1, ...)
  Shape,        // vector length / rank mismatch
  Resource,     // size guard refused the computation
  Unsupported,  // outside the supported scope (genus 0)
  Precision,    // numerical certificate could not be established
  Consistency,  // an internal identity failed; indicates a convention bug
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

// Throws ErrorKind::Consistency with `what` unless `cond` holds.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) raise(ErrorKind::Consistency, what);
}

}  // namespace liepic
