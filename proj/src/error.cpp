#include "rcc/error.hpp"

namespace rcc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::LabelMultiplicity: return "LabelMultiplicity";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::SameComponent: return "SameComponent";
    case ErrorCode::UnknownCrossing: return "UnknownCrossing";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

}  // namespace rcc
