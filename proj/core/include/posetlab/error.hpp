#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posetlab {

/// Base class of every error thrown by posetlab.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error { public: using Error::Error; };
class NotReducedError : public Error { public: using Error::Error; };
class UnknownElement : public Error { public: using Error::Error; };
class NotComparable : public Error { public: using Error::Error; };
class NotBounded : public Error { public: using Error::Error; };
class NotGraded : public Error { public: using Error::Error; };
class PreconditionViolated : public Error { public: using Error::Error; };
class NotViable : public Error { public: using Error::Error; };
class NotLeftModular : public Error { public: using Error::Error; };
class NotELLabelled : public Error { public: using Error::Error; };
class NotLinearExtension : public Error { public: using Error::Error; };
class NotNonStraddling : public Error { public: using Error::Error; };
class SizeLimit : public Error { public: using Error::Error; };
class ValidationError : public Error { public: using Error::Error; };

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace posetlab
