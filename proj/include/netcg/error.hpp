#pragma once

#include <stdexcept>
#include <string>

namespace netcg {

// Error codes name the violated contract; the message carries the details.
enum class Err {
  ZeroInverse,
  ZeroInput,
  NotPrime,
  ModulusMismatch,
  BadParameters,
  OutOfRange,
  NotTransitive,
  InvalidCayleySet,
  IdentityElement,
  NotAPartition,
  NotASubgroup,
  NotNormal,
  InternalInconsistency,
  DisconnectedInput,
  CentralizingH,
  InvalidParams,
  UnsupportedOrder,
  GroupOrderOverflow,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const noexcept { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace netcg
