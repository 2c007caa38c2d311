#ifndef COC_ERROR_HPP
#define COC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace coc {

enum class Errc {
  parse,
  invalid_argument,
  not_caterpillar,
  class_violation,
  too_large,
  precondition,
  not_applicable,
  modulator_not_vc,
  packing_not_full,
  internal,
  io,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(Errc::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class NotCaterpillar : public Error {
 public:
  NotCaterpillar(int component, const std::string& why)
      : Error(Errc::not_caterpillar,
              "component " + std::to_string(component) + " is not a caterpillar: " + why),
        component_(component) {}
  int component() const noexcept { return component_; }

 private:
  int component_;
};

// Thrown when an internal invariant that the algorithms guarantee is violated.
[[noreturn]] void invariant_failure(const char* expr, const char* file, int line);

}  // namespace coc

#define COC_ENSURE(expr) \
  ((expr) ? static_cast<void>(0) : ::coc::invariant_failure(#expr, __FILE__, __LINE__))

#endif
