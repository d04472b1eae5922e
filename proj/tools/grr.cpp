#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grr/analysis.hpp"
#include "grr/error.hpp"
#include "grr/io.hpp"
#include "grr/polygon_decomposition.hpp"
#include "grr/tree_decomposition.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(const grr::Point& p) { return "(" + p.x.to_string() + "," + p.y.to_string() + ")"; }

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
    } else {
        grr::write_file(out_path, text);
    }
}

std::string load(const std::string& path)
{
    try {
        return grr::read_file(path);
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
}

int check_drawing(const std::string& path)
{
    const grr::Drawing d = grr::parse_drawing(load(path));
    if (!grr::is_tree(d)) {
        std::cout << "not a tree\n";
        return kInvalid;
    }
    int conflicts = 0;
    for (int e = 0; e < d.edge_count(); ++e) {
        for (int f = 0; f < d.edge_count(); ++f) {
            const auto w = grr::drawing_edges_conflict(d, e, f);
            if (!w) continue;
            ++conflicts;
            std::cout << "conflict: edge " << d.id(d.edge(e).u) << "-" << d.id(d.edge(e).v) << " with edge "
                      << d.id(d.edge(f).u) << "-" << d.id(d.edge(f).v) << " normal at " << fmt(w->p) << " meets "
                      << fmt(w->hit) << "\n";
        }
    }
    if (conflicts == 0) {
        std::cout << "increasing-chord: yes\n";
        return kOk;
    }
    std::cout << "increasing-chord: no\n";
    return kInvalid;
}

int check_polygon(const std::string& path)
{
    const grr::PolygonDocument doc = grr::parse_polygon(load(path));
    const grr::Polygon& poly = doc.triangulated.polygon;
    const auto w = grr::polygon_is_grr(poly);
    if (!w) {
        std::cout << "grr: yes\n";
        return kOk;
    }
    auto edge_name = [&](int e) { return std::to_string(doc.ids[e]) + "-" + std::to_string(doc.ids[poly.next(e)]); };
    std::cout << "conflict: edge " << edge_name(w->edge_e) << " with edge " << edge_name(w->edge_f) << " normal at "
              << fmt(w->p) << " meets " << fmt(w->hit) << "\n";
    for (const auto& [a, b] : grr::conflicting_triangle_pairs(doc.triangulated)) {
        std::cout << "conflicting triangles: " << a << " " << b << "\n";
    }
    std::cout << "grr: no\n";
    return kInvalid;
}

int decompose_tree(const std::string& path, const std::string& contacts, const std::string& mode, bool allow_splits,
                   const std::string& out)
{
    const grr::ContactMode cm = grr::parse_contact_mode(contacts);
    if (cm == grr::ContactMode::Any) throw UsageError("--contacts must be proper or noncrossing");
    const grr::Drawing d = grr::parse_drawing(load(path));
    grr::Partition p;
    if (mode == "approx2") {
        if (cm != grr::ContactMode::Proper) throw UsageError("approx2 supports proper contacts only");
        if (allow_splits) throw UsageError("--allow-splits requires --mode exact");
        p = grr::approx_gtd_proper(d);
    } else if (allow_splits) {
        p = grr::min_gtd_with_splits(d, cm).partition;
    } else {
        p = grr::min_gtd_exact(d, cm);
    }
    std::cout << "size " << p.size() << "\n";
    emit(grr::serialize_partition(p), out);
    return kOk;
}

int decompose_polygon(const std::string& path, const std::string& mode, const std::string& out)
{
    const grr::PolygonDocument doc = grr::parse_polygon(load(path));
    const grr::PolygonDecomposition dec = mode == "exact-small" ? grr::decompose_polygon_exact_small(doc.triangulated)
                                                                : grr::decompose_polygon_approx(doc.triangulated);
    std::cout << "size " << dec.size() << "\n";
    emit(grr::serialize_polygon_decomposition(dec), out);
    return kOk;
}

int route(const std::string& path, const std::string& from, const std::string& to, const std::string& svg)
{
    const grr::PolygonDocument doc = grr::parse_polygon(load(path));
    const grr::Point s = grr::parse_point(from);
    const grr::Point t = grr::parse_point(to);
    const grr::GreedyTrace trace = grr::trace_greedy_path(doc.triangulated.polygon, s, t);
    for (const grr::Point& p : trace.waypoints) std::cout << "waypoint " << fmt(p) << "\n";
    if (!svg.empty()) {
        grr::SvgOverlay overlay;
        overlay.trace = &trace;
        grr::write_file(svg, grr::render_svg(doc.triangulated, overlay));
    }
    if (trace.reached) {
        std::cout << "reached\n";
        return kOk;
    }
    std::cout << "failure at " << fmt(*trace.failure) << "\n";
    return kInvalid;
}

int subdivide_cmd(const std::string& path, const std::string& out)
{
    const grr::Drawing d = grr::parse_drawing(load(path));
    const grr::SubdividedDrawing s = grr::subdivide(d);
    std::cerr << "vertices " << s.drawing.vertex_count() << ", edges " << s.drawing.edge_count() << "\n";
    emit(grr::serialize_drawing(s.drawing), out);
    return kOk;
}

int render(const std::string& path, const std::string& overlay_path, bool conflicts, const std::string& out)
{
    const std::string text = load(path);
    std::string svg;
    grr::SvgOverlay overlay;
    if (grr::is_polygon_document(text)) {
        const grr::PolygonDocument doc = grr::parse_polygon(text);
        std::optional<grr::PolygonDecomposition> dec;
        if (!overlay_path.empty()) {
            dec = grr::parse_polygon_decomposition(load(overlay_path));
            overlay.decomposition = &*dec;
        }
        if (conflicts) {
            if (auto w = grr::polygon_is_grr(doc.triangulated.polygon)) overlay.witnesses.push_back(*w);
        }
        svg = grr::render_svg(doc.triangulated, overlay);
    } else {
        grr::Drawing d = grr::parse_drawing(text);
        std::optional<grr::Partition> part;
        if (!overlay_path.empty()) {
            part = grr::parse_partition(load(overlay_path));
            if (part->origin) d = grr::subdivide(d).drawing;
            overlay.partition = &*part;
        }
        if (conflicts) {
            for (int e = 0; e < d.edge_count(); ++e) {
                for (int f = 0; f < d.edge_count(); ++f) {
                    if (auto w = grr::drawing_edges_conflict(d, e, f)) overlay.witnesses.push_back(*w);
                }
            }
        }
        svg = grr::render_svg(d, overlay);
    }
    emit(svg, out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Greedy routable region decompositions of tree drawings and polygons"};
    app.require_subcommand(1);
    std::string file;
    std::string out;

    auto* check_d = app.add_subcommand("check-drawing", "Report conflicting edge pairs of a tree drawing");
    check_d->add_option("file", file, "drawing file")->required();

    auto* check_p = app.add_subcommand("check-polygon", "Test whether a polygon is greedily routable");
    check_p->add_option("file", file, "polygon file")->required();

    std::string contacts = "proper";
    std::string tree_mode = "exact";
    bool allow_splits = false;
    auto* dec_t = app.add_subcommand("decompose-tree", "Partition a tree drawing into increasing-chord subtrees");
    dec_t->add_option("file", file, "drawing file")->required();
    dec_t->add_option("--contacts", contacts, "proper or noncrossing")
        ->check(CLI::IsMember({"proper", "noncrossing"}));
    dec_t->add_option("--mode", tree_mode, "exact or approx2")->check(CLI::IsMember({"exact", "approx2"}));
    dec_t->add_flag("--allow-splits", allow_splits, "allow splitting edges at interior points");
    dec_t->add_option("-o,--output", out, "partition file (default: stdout)");

    std::string poly_mode = "approx2";
    auto* dec_p = app.add_subcommand("decompose-polygon", "Split a triangulated polygon into routable pieces");
    dec_p->add_option("file", file, "polygon file")->required();
    dec_p->add_option("--mode", poly_mode, "approx2 or exact-small")
        ->check(CLI::IsMember({"approx2", "exact-small"}));
    dec_p->add_option("-o,--output", out, "decomposition file (default: stdout)");

    std::string from;
    std::string to;
    std::string svg;
    auto* route_c = app.add_subcommand("route", "Trace a greedy path inside a polygon");
    route_c->add_option("file", file, "polygon file")->required();
    route_c->add_option("--from", from, "start point x,y")->required();
    route_c->add_option("--to", to, "target point x,y")->required();
    route_c->add_option("--svg", svg, "write the trace as SVG");

    auto* sub = app.add_subcommand("subdivide", "Split edges where endpoint normals of other edges land");
    sub->add_option("file", file, "drawing file")->required();
    sub->add_option("-o,--output", out, "drawing file (default: stdout)");

    std::string overlay;
    bool conflicts = false;
    auto* rend = app.add_subcommand("render", "Render a drawing or polygon as SVG");
    rend->add_option("file", file, "drawing or polygon file")->required();
    rend->add_option("--partition", overlay, "partition or polygon decomposition file");
    rend->add_flag("--conflicts", conflicts, "draw conflict witnesses");
    rend->add_option("-o,--output", out, "SVG file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*check_d) return check_drawing(file);
        if (*check_p) return check_polygon(file);
        if (*dec_t) return decompose_tree(file, contacts, tree_mode, allow_splits, out);
        if (*dec_p) return decompose_polygon(file, poly_mode, out);
        if (*route_c) return route(file, from, to, svg);
        if (*sub) return subdivide_cmd(file, out);
        if (*rend) return render(file, overlay, conflicts, out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const grr::GrrError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}
