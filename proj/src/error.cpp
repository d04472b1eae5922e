#include "grr/error.hpp"

namespace grr {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::ZeroLengthEdge: return "ZeroLengthEdge";
    case ErrorCode::CrossingEdges: return "CrossingEdges";
    case ErrorCode::OverlappingEdges: return "OverlappingEdges";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::RootNotDegreeOne: return "RootNotDegreeOne";
    case ErrorCode::DegeneratePath: return "DegeneratePath";
    case ErrorCode::InvalidPathFamily: return "InvalidPathFamily";
    case ErrorCode::SameTriangle: return "SameTriangle";
    case ErrorCode::UnknownTriangle: return "UnknownTriangle";
    case ErrorCode::PointOutsidePolygon: return "PointOutsidePolygon";
    case ErrorCode::IncompleteTriangulation: return "IncompleteTriangulation";
    case ErrorCode::CrossingDiagonals: return "CrossingDiagonals";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    }
    return "Unknown";
}

}  // namespace grr
