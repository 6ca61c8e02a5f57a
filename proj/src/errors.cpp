#include "twc/errors.hpp"

namespace twc {

const char* fail_name(Fail f) {
  switch (f) {
    case Fail::BudgetExceeded: return "BudgetExceeded";
    case Fail::TooLarge: return "TooLarge";
    case Fail::ParseError: return "ParseError";
    case Fail::NotAPmc: return "NotAPmc";
    case Fail::NotAClique: return "NotAClique";
    case Fail::NoPrivateVertex: return "NoPrivateVertex";
    case Fail::PrimitiveSeparator: return "PrimitiveSeparator";
    case Fail::JNotIndependent: return "JNotIndependent";
    case Fail::NoCoveringComponent: return "NoCoveringComponent";
    case Fail::VNotCovered: return "VNotCovered";
    case Fail::NoSuchPair: return "NoSuchPair";
    case Fail::PurePmc: return "PurePmc";
    case Fail::NoZVertices: return "NoZVertices";
    case Fail::LiftFailed: return "LiftFailed";
    case Fail::NotInClassC: return "NotInClassC";
    case Fail::NotLongHoleFree: return "NotLongHoleFree";
    case Fail::NotP5Free: return "NotP5Free";
    case Fail::GiveUp: return "GiveUp";
  }
  return "Unknown";
}

}  // namespace twc
