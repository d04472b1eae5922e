#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace grr {

enum class ErrorCode {
    DuplicateVertex,
    ZeroLengthEdge,
    CrossingEdges,
    OverlappingEdges,
    UnknownVertex,
    UnknownEdge,
    NotATree,
    RootNotDegreeOne,
    DegeneratePath,
    InvalidPathFamily,
    SameTriangle,
    UnknownTriangle,
    PointOutsidePolygon,
    IncompleteTriangulation,
    CrossingDiagonals,
    NotSimple,
    BudgetExceeded,
    SyntaxError,
};

const char* to_string(ErrorCode code);

/// The single exception type thrown by the library. `items` carries the
/// offending pair (edge indices, vertex ids, ...) when one exists.
class GrrError : public std::runtime_error {
public:
    GrrError(ErrorCode code, const std::string& message,
             std::optional<std::pair<int, int>> items = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), items_(items)
    {
    }

    ErrorCode code() const { return code_; }
    const std::optional<std::pair<int, int>>& items() const { return items_; }

private:
    ErrorCode code_;
    std::optional<std::pair<int, int>> items_;
};

}  // namespace grr
