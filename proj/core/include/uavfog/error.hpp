#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uavfog {

enum class ErrorKind {
  Structural,  // malformed shapes: wrong vector lengths, bad indices
  Domain,      // numerically singular or physically infeasible inputs
  Config,      // invalid configuration documents or parameter values
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace uavfog
