#include "sylab/error.hpp"

namespace sylab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopArgument: return "LoopArgument";
    case ErrorKind::DependentContraction: return "DependentContraction";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::OverlappingConstraints: return "OverlappingConstraints";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NoCandidate: return "NoCandidate";
    case ErrorKind::BadQuotient: return "BadQuotient";
    case ErrorKind::ParallelPair: return "ParallelPair";
    case ErrorKind::EmptyMatroid: return "EmptyMatroid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace sylab
