#pragma once

#include <stdexcept>
#include <string>

namespace twc {

// Every contract failure a caller might want to branch on. Class-violation
// kinds signal that an input promised to be in the supported graph class is
// not; the witness machinery surfaces them instead of returning garbage.
enum class Fail {
  BudgetExceeded,
  TooLarge,
  ParseError,
  NotAPmc,
  NotAClique,
  NoPrivateVertex,
  PrimitiveSeparator,
  JNotIndependent,
  NoCoveringComponent,
  VNotCovered,
  NoSuchPair,
  PurePmc,
  NoZVertices,
  LiftFailed,
  NotInClassC,
  NotLongHoleFree,
  NotP5Free,
  GiveUp,
};

const char* fail_name(Fail f);

class SolverError : public std::runtime_error {
 public:
  SolverError(Fail kind, const std::string& what)
      : std::runtime_error(std::string(fail_name(kind)) + ": " + what), kind_(kind) {}

  Fail kind() const { return kind_; }

  // True for failures caused by the input graph lying outside the promised
  // hereditary class (as opposed to resource limits or malformed input).
  bool is_class_violation() const {
    switch (kind_) {
      case Fail::NotAClique:
      case Fail::NoPrivateVertex:
      case Fail::NoCoveringComponent:
      case Fail::NoSuchPair:
      case Fail::NoZVertices:
      case Fail::NotInClassC:
      case Fail::NotLongHoleFree:
      case Fail::NotP5Free:
        return true;
      default:
        return false;
    }
  }

 private:
  Fail kind_;
};

[[noreturn]] inline void raise(Fail kind, const std::string& what) {
  throw SolverError(kind, what);
}

}  // namespace twc
