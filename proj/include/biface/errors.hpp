#pragma once

#include <stdexcept>
#include <string>

namespace biface {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

struct ConvergenceError : std::runtime_error {
  ConvergenceError(double residual, std::size_t iterations)
      : std::runtime_error("power iteration did not converge after " +
                           std::to_string(iterations) +
                           " iterations (residual " + std::to_string(residual) + ")"),
        residual(residual),
        iterations(iterations) {}
  double residual;
  std::size_t iterations;
};

}  // namespace biface
