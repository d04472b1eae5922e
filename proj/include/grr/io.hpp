#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grr/analysis.hpp"
#include "grr/drawing.hpp"
#include "grr/polygon_decomposition.hpp"
#include "grr/tree_decomposition.hpp"

namespace grr {

/// Polygon document as written on disk: vertex ids kept for reporting.
struct PolygonDocument {
    std::vector<VertexId> ids;  ///< boundary order
    TriangulatedPolygon triangulated;
};

/// Parse failures throw GrrError(SyntaxError) with line and column when the
/// JSON itself is malformed; validation errors propagate unchanged.
Drawing parse_drawing(const std::string& text);
std::string serialize_drawing(const Drawing& d);

PolygonDocument parse_polygon(const std::string& text);
std::string serialize_polygon(const PolygonDocument& doc);
/// Wraps a triangulated polygon with ids 0..n-1.
PolygonDocument make_polygon_document(const TriangulatedPolygon& tp);

/// Components hold plain edge indices, or {"edge", "t0", "t1"} fragments
/// when an origin map is present.
Partition parse_partition(const std::string& text);
std::string serialize_partition(const Partition& p);

std::string serialize_polygon_decomposition(const PolygonDecomposition& dec);
PolygonDecomposition parse_polygon_decomposition(const std::string& text);

/// True when the document has a "boundary" key.
bool is_polygon_document(const std::string& text);

/// Reads "x,y" with rational or decimal coordinates.
Point parse_point(const std::string& text);

struct SvgOverlay {
    const Partition* partition = nullptr;
    const PolygonDecomposition* decomposition = nullptr;
    const GreedyTrace* trace = nullptr;
    std::vector<ConflictWitness> witnesses;
};

std::string render_svg(const Drawing& d, const SvgOverlay& overlay = {});
std::string render_svg(const TriangulatedPolygon& tp, const SvgOverlay& overlay = {});
std::string render_svg(const Polygon& poly, const SvgOverlay& overlay = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace grr
