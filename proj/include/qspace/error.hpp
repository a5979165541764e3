#pragma once

#include <stdexcept>
#include <string>

namespace qspace {

enum class ErrorKind {
  parse,
  unknown_space,
  unknown_symbol,
  unsupported,
  domain,
  singular,
  config,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qspace
