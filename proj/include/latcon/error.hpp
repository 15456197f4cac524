#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latcon {

enum class Errc {
  DuplicateElement,
  UnknownElement,
  CycleDetected,
  NotTransitiveReduction,
  NotALattice,
  NoBoundElement,
  ConLTooLarge,
  NotGraded,
  EdgesCross,
  DuplicateXpos,
  NotAnSpsDiagram,
  NotACorner,
  NoCorners,
  NotACoveringPair,
  InternalContradiction,
  InvalidChain,
  UnknownFixture,
  BoundExceeded,
  SyntaxError,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message names the offending elements or line.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace latcon
