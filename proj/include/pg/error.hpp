#pragma once

#include <stdexcept>
#include <string>

namespace pg {

enum class ErrorKind {
  Usage,       // bad arguments: out-of-range ids, unknown formats, parse errors
  Validation,  // malformed input data or a violated group axiom
  Resource,    // a configured size cap was exceeded
  Domain,      // operation undefined for this input (e.g. Sylow of a non-nilpotent group)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace pg
