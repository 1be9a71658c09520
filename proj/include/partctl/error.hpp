#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace partctl {

enum class Errc {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EmptySet,
  Disconnected,
  NotBiconnected,
  OutOfRange,
  TooSmall,
  TooLarge,
  SizeMismatch,
  PackingInfeasible,
  ConstructionFailed,
  InfeasibleDensity,
  ParseError,
  UnknownSuite,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace partctl
