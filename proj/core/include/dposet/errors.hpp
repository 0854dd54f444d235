#pragma once

#include <stdexcept>
#include <string>

namespace dposet {

/// Base of every domain error raised by the library. `name()` is the stable
/// identifier printed by the command-line front end.
class Error : public std::runtime_error {
 public:
  Error(const char* name, const std::string& what)
      : std::runtime_error(what), name_(name) {}
  const char* name() const noexcept { return name_; }

 private:
  const char* name_;
};

#define DPOSET_DEFINE_ERROR(Type)                                      \
  class Type : public Error {                                          \
   public:                                                             \
    explicit Type(const std::string& what) : Error(#Type, what) {}     \
  };

DPOSET_DEFINE_ERROR(CycleError)
DPOSET_DEFINE_ERROR(IndexError)
DPOSET_DEFINE_ERROR(SizeCapError)
DPOSET_DEFINE_ERROR(NotIncreasingError)
DPOSET_DEFINE_ERROR(InvalidPartitionError)
DPOSET_DEFINE_ERROR(InvalidPermutationError)
DPOSET_DEFINE_ERROR(InvalidCompositionError)
DPOSET_DEFINE_ERROR(NotSpecialError)
DPOSET_DEFINE_ERROR(OverflowError)
DPOSET_DEFINE_ERROR(EmptyError)
DPOSET_DEFINE_ERROR(NotAPartitionError)
DPOSET_DEFINE_ERROR(LengthMismatchError)
DPOSET_DEFINE_ERROR(SizeMismatchError)
DPOSET_DEFINE_ERROR(NotLatticeError)
DPOSET_DEFINE_ERROR(PreconditionError)

#undef DPOSET_DEFINE_ERROR

/// Malformed text input; carries the 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("ParseError", "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dposet
