#pragma once

#include <stdexcept>
#include <string>

namespace ainf {

enum class ErrorKind {
  kParse,      // malformed document text
  kSemantic,   // well-formed but invalid data (degree mismatch, unknown id, ...)
  kArgument,   // bad call (arity mismatch, field mismatch, missing units, ...)
  kRelation,   // structure fails the identities an operation requires
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ainf
