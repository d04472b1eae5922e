#include "grr/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "grr/error.hpp"

namespace grr {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void syntax(const std::string& message) { throw GrrError(ErrorCode::SyntaxError, message); }

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        syntax("line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON");
    }
}

const json& field(const json& obj, const char* name, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(name)) syntax(where + ": missing \"" + name + "\"");
    return obj.at(name);
}

int as_int(const json& v, const std::string& where)
{
    if (!v.is_number_integer()) syntax(where + ": expected an integer");
    return v.get<int>();
}

Rational as_rational(const json& v, const std::string& where)
{
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    } catch (const std::invalid_argument&) {
    }
    syntax(where + ": expected a rational string such as \"1/3\" or \"0.25\"");
}

std::pair<int, int> as_id_pair(const json& v, const std::string& where)
{
    if (!v.is_array() || v.size() != 2) syntax(where + ": expected a pair of vertex ids");
    return {as_int(v[0], where), as_int(v[1], where)};
}

std::vector<RawVertex> parse_vertices(const json& doc)
{
    const json& vs = field(doc, "vertices", "document");
    if (!vs.is_array()) syntax("vertices: expected an array");
    std::vector<RawVertex> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        out.push_back({as_int(field(vs[i], "id", where), where + ".id"),
                       {as_rational(field(vs[i], "x", where), where + ".x"),
                        as_rational(field(vs[i], "y", where), where + ".y")}});
    }
    return out;
}

ordered_json vertex_json(VertexId id, const Point& p)
{
    ordered_json v;
    v["id"] = id;
    v["x"] = p.x.to_string();
    v["y"] = p.y.to_string();
    return v;
}

// One line per array element, compact inside each element.
std::string layout(const ordered_json& doc)
{
    std::ostringstream os;
    os << "{\n";
    std::size_t k = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it, ++k) {
        os << "  " << ordered_json(it.key()).dump() << ": ";
        const ordered_json& v = it.value();
        if (v.is_array() && !v.empty() && v.front().is_structured()) {
            os << "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) os << "    " << v[i].dump() << (i + 1 < v.size() ? ",\n" : "\n");
            os << "  ]";
        } else {
            os << v.dump();
        }
        os << (k + 1 < doc.size() ? ",\n" : "\n");
    }
    os << "}\n";
    return os.str();
}

}  // namespace

Drawing parse_drawing(const std::string& text)
{
    const json doc = parse_json(text);
    RawDrawing raw;
    raw.vertices = parse_vertices(doc);
    const json& es = field(doc, "edges", "document");
    if (!es.is_array()) syntax("edges: expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) raw.edges.push_back(as_id_pair(es[i], "edges[" + std::to_string(i) + "]"));
    return validate_drawing(raw);
}

std::string serialize_drawing(const Drawing& d)
{
    ordered_json doc;
    doc["vertices"] = ordered_json::array();
    for (int v = 0; v < d.vertex_count(); ++v) doc["vertices"].push_back(vertex_json(d.id(v), d.point(v)));
    doc["edges"] = ordered_json::array();
    for (int e = 0; e < d.edge_count(); ++e) doc["edges"].push_back({d.id(d.edge(e).u), d.id(d.edge(e).v)});
    return layout(doc);
}

PolygonDocument parse_polygon(const std::string& text)
{
    const json doc = parse_json(text);
    const std::vector<RawVertex> vertices = parse_vertices(doc);
    std::map<VertexId, Point> by_id;
    for (const RawVertex& v : vertices) {
        if (!by_id.emplace(v.id, v.p).second) throw GrrError(ErrorCode::DuplicateVertex, "vertex id " + std::to_string(v.id));
    }
    const json& bd = field(doc, "boundary", "document");
    if (!bd.is_array()) syntax("boundary: expected an array of vertex ids");
    std::vector<VertexId> ids;
    std::map<VertexId, int> position;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < bd.size(); ++i) {
        const int id = as_int(bd[i], "boundary[" + std::to_string(i) + "]");
        auto it = by_id.find(id);
        if (it == by_id.end()) throw GrrError(ErrorCode::UnknownVertex, "boundary uses unknown id " + std::to_string(id));
        if (!position.emplace(id, static_cast<int>(pts.size())).second) {
            throw GrrError(ErrorCode::NotSimple, "boundary repeats id " + std::to_string(id));
        }
        ids.push_back(id);
        pts.push_back(it->second);
    }
    if (position.size() != by_id.size()) syntax("every vertex must appear on the boundary");
    std::vector<std::pair<int, int>> diagonals;
    if (doc.contains("diagonals")) {
        const json& ds = doc.at("diagonals");
        if (!ds.is_array()) syntax("diagonals: expected an array");
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const auto [a, b] = as_id_pair(ds[i], "diagonals[" + std::to_string(i) + "]");
            if (!position.count(a) || !position.count(b)) {
                throw GrrError(ErrorCode::UnknownVertex, "diagonal uses an unknown id", std::make_pair(a, b));
            }
            diagonals.emplace_back(position[a], position[b]);
        }
    }
    return {std::move(ids), build_dual_tree(Polygon(pts), diagonals)};
}

std::string serialize_polygon(const PolygonDocument& doc)
{
    const TriangulatedPolygon& tp = doc.triangulated;
    ordered_json out;
    out["vertices"] = ordered_json::array();
    for (int i = 0; i < tp.polygon.size(); ++i) out["vertices"].push_back(vertex_json(doc.ids[i], tp.polygon.vertex(i)));
    out["boundary"] = doc.ids;
    out["diagonals"] = ordered_json::array();
    for (const auto& [a, b] : tp.diagonals) out["diagonals"].push_back({doc.ids[a], doc.ids[b]});
    return layout(out);
}

PolygonDocument make_polygon_document(const TriangulatedPolygon& tp)
{
    PolygonDocument doc{{}, tp};
    for (int i = 0; i < tp.polygon.size(); ++i) doc.ids.push_back(i);
    return doc;
}

Partition parse_partition(const std::string& text)
{
    const json doc = parse_json(text);
    Partition p;
    try {
        p.mode = parse_contact_mode(doc.value("contacts", std::string("proper")));
    } catch (const std::invalid_argument& e) {
        syntax(e.what());
    }
    const json& cs = field(doc, "components", "document");
    if (!cs.is_array()) syntax("components: expected an array");
    std::map<int, EdgePiece> pieces;
    for (std::size_t c = 0; c < cs.size(); ++c) {
        const std::string where = "components[" + std::to_string(c) + "]";
        if (!cs[c].is_array()) syntax(where + ": expected an array");
        std::vector<int> comp;
        for (const json& item : cs[c]) {
            if (item.is_object()) {
                const int piece = as_int(field(item, "piece", where), where + ".piece");
                pieces[piece] = {as_int(field(item, "edge", where), where + ".edge"),
                                 as_rational(field(item, "t0", where), where + ".t0"),
                                 as_rational(field(item, "t1", where), where + ".t1")};
                comp.push_back(piece);
            } else {
                comp.push_back(as_int(item, where));
            }
        }
        p.components.push_back(std::move(comp));
    }
    if (!pieces.empty()) {
        std::vector<EdgePiece> origin;
        for (const auto& [k, piece] : pieces) {
            if (k != static_cast<int>(origin.size())) syntax("fragment pieces must be numbered 0..k-1");
            origin.push_back(piece);
        }
        p.origin = std::move(origin);
    }
    return p;
}

std::string serialize_partition(const Partition& p)
{
    ordered_json out;
    out["components"] = ordered_json::array();
    for (const auto& comp : p.components) {
        ordered_json c = ordered_json::array();
        for (int e : comp) {
            if (p.origin) {
                const EdgePiece& piece = p.origin->at(e);
                ordered_json frag;
                frag["piece"] = e;
                frag["edge"] = piece.original_edge;
                frag["t0"] = piece.t0.to_string();
                frag["t1"] = piece.t1.to_string();
                c.push_back(frag);
            } else {
                c.push_back(e);
            }
        }
        out["components"].push_back(c);
    }
    out["contacts"] = to_string(p.mode);
    return layout(out);
}

std::string serialize_polygon_decomposition(const PolygonDecomposition& dec)
{
    ordered_json out;
    out["pieces"] = dec.pieces;
    out["cut_diagonals"] = dec.cut_diagonals;
    return layout(out);
}

PolygonDecomposition parse_polygon_decomposition(const std::string& text)
{
    const json doc = parse_json(text);
    PolygonDecomposition dec;
    const json& ps = field(doc, "pieces", "document");
    if (!ps.is_array()) syntax("pieces: expected an array");
    for (std::size_t k = 0; k < ps.size(); ++k) {
        const std::string where = "pieces[" + std::to_string(k) + "]";
        if (!ps[k].is_array()) syntax(where + ": expected an array");
        std::vector<int> piece;
        for (const json& t : ps[k]) piece.push_back(as_int(t, where));
        dec.pieces.push_back(std::move(piece));
    }
    if (doc.contains("cut_diagonals")) {
        const json& cs = doc.at("cut_diagonals");
        if (!cs.is_array()) syntax("cut_diagonals: expected an array");
        for (const json& c : cs) dec.cut_diagonals.push_back(as_int(c, "cut_diagonals"));
    }
    return dec;
}

bool is_polygon_document(const std::string& text)
{
    const json doc = parse_json(text);
    return doc.is_object() && doc.contains("boundary");
}

Point parse_point(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) syntax("expected a point written as x,y");
    try {
        return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
    } catch (const std::invalid_argument&) {
        syntax("malformed point \"" + text + "\"");
    }
}

namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

class SvgCanvas {
public:
    explicit SvgCanvas(const std::vector<Point>& points)
    {
        double minx = points.front().x.to_double();
        double maxx = minx;
        double miny = -points.front().y.to_double();
        double maxy = miny;
        for (const Point& p : points) {
            minx = std::min(minx, p.x.to_double());
            maxx = std::max(maxx, p.x.to_double());
            miny = std::min(miny, -p.y.to_double());
            maxy = std::max(maxy, -p.y.to_double());
        }
        const double w = std::max(maxx - minx, 1e-9);
        const double h = std::max(maxy - miny, 1e-9);
        const double margin = 0.05 * std::max(w, h);
        x0_ = minx - margin;
        y0_ = miny - margin;
        w_ = w + 2 * margin;
        h_ = h + 2 * margin;
        stroke_ = 0.006 * std::max(w_, h_);
    }

    std::string num(double v) const
    {
        std::ostringstream os;
        os << std::setprecision(6) << (std::abs(v) < 1e-12 ? 0.0 : v);
        return os.str();
    }
    std::string x(const Point& p) const { return num(p.x.to_double()); }
    std::string y(const Point& p) const { return num(-p.y.to_double()); }
    double stroke() const { return stroke_; }

    void line(const Point& a, const Point& b, const std::string& color, double width, bool dashed = false)
    {
        body_ << "  <line x1=\"" << x(a) << "\" y1=\"" << y(a) << "\" x2=\"" << x(b) << "\" y2=\"" << y(b)
              << "\" stroke=\"" << color << "\" stroke-width=\"" << num(width) << "\" stroke-linecap=\"round\"";
        if (dashed) body_ << " stroke-dasharray=\"" << num(3 * stroke_) << "," << num(2 * stroke_) << "\"";
        body_ << "/>\n";
    }

    void polygon(const std::vector<Point>& pts, const std::string& fill, double opacity, const std::string& stroke)
    {
        body_ << "  <polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) body_ << (i ? " " : "") << x(pts[i]) << "," << y(pts[i]);
        body_ << "\" fill=\"" << fill << "\" fill-opacity=\"" << num(opacity) << "\" stroke=\"" << stroke
              << "\" stroke-width=\"" << num(stroke_) << "\"/>\n";
    }

    void dot(const Point& p, const std::string& color, double radius)
    {
        body_ << "  <circle cx=\"" << x(p) << "\" cy=\"" << y(p) << "\" r=\"" << num(radius) << "\" fill=\"" << color
              << "\"/>\n";
    }

    void cross(const Point& p, const std::string& color)
    {
        const double r = 3 * stroke_;
        const double cx = p.x.to_double();
        const double cy = -p.y.to_double();
        body_ << "  <path d=\"M " << num(cx - r) << " " << num(cy - r) << " L " << num(cx + r) << " " << num(cy + r)
              << " M " << num(cx - r) << " " << num(cy + r) << " L " << num(cx + r) << " " << num(cy - r)
              << "\" stroke=\"" << color << "\" stroke-width=\"" << num(stroke_) << "\" class=\"failure\"/>\n";
    }

    void polyline(const std::vector<Point>& pts, const std::string& color)
    {
        body_ << "  <polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) body_ << (i ? " " : "") << x(pts[i]) << "," << y(pts[i]);
        body_ << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << num(stroke_) << "\"/>\n";
    }

    std::string finish() const
    {
        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(x0_) << " " << num(y0_)
           << " " << num(w_) << " " << num(h_) << "\">\n"
           << body_.str() << "</svg>\n";
        return os.str();
    }

private:
    double x0_ = 0, y0_ = 0, w_ = 1, h_ = 1, stroke_ = 0.01;
    std::ostringstream body_;
};

void draw_overlays(SvgCanvas& canvas, const SvgOverlay& overlay)
{
    for (const ConflictWitness& w : overlay.witnesses) {
        canvas.line(w.p, w.hit, "#d62728", canvas.stroke(), true);
        canvas.dot(w.p, "#d62728", 1.5 * canvas.stroke());
    }
    if (overlay.trace != nullptr) {
        canvas.polyline(overlay.trace->waypoints, "#1f77b4");
        canvas.dot(overlay.trace->waypoints.front(), "#2ca02c", 2 * canvas.stroke());
        if (overlay.trace->failure) canvas.cross(*overlay.trace->failure, "#d62728");
    }
}

std::string render_polygon_with(const Polygon& poly, const TriangulatedPolygon* tp, const SvgOverlay& overlay)
{
    std::vector<Point> pts = poly.vertices();
    if (overlay.trace != nullptr) pts.insert(pts.end(), overlay.trace->waypoints.begin(), overlay.trace->waypoints.end());
    SvgCanvas canvas(pts);
    canvas.polygon(poly.vertices(), "#dddddd", 1.0, "#000000");
    if (tp != nullptr && overlay.decomposition != nullptr) {
        for (int k = 0; k < overlay.decomposition->size(); ++k) {
            for (int t : overlay.decomposition->pieces[k]) {
                const Triangle tri = tp->triangle_points(t);
                canvas.polygon({tri[0], tri[1], tri[2]}, kPalette[k % kPalette.size()], 0.45, "none");
            }
        }
    }
    if (tp != nullptr) {
        for (const auto& [a, b] : tp->diagonals) canvas.line(poly.vertex(a), poly.vertex(b), "#888888", 0.5 * canvas.stroke(), true);
    }
    for (int i = 0; i < poly.size(); ++i) canvas.line(poly.vertex(i), poly.vertex(poly.next(i)), "#000000", canvas.stroke());
    draw_overlays(canvas, overlay);
    return canvas.finish();
}

}  // namespace

std::string render_svg(const Drawing& d, const SvgOverlay& overlay)
{
    std::vector<Point> pts;
    for (int v = 0; v < d.vertex_count(); ++v) pts.push_back(d.point(v));
    if (overlay.trace != nullptr) pts.insert(pts.end(), overlay.trace->waypoints.begin(), overlay.trace->waypoints.end());
    SvgCanvas canvas(pts);
    std::vector<int> comp_of(d.edge_count(), -1);
    if (overlay.partition != nullptr) {
        for (int c = 0; c < overlay.partition->size(); ++c) {
            for (int e : overlay.partition->components[c]) {
                if (e >= 0 && e < d.edge_count()) comp_of[e] = c;
            }
        }
    }
    for (int e = 0; e < d.edge_count(); ++e) {
        const std::string color = comp_of[e] < 0 ? "#000000" : kPalette[comp_of[e] % kPalette.size()];
        canvas.line(d.point(d.edge(e).u), d.point(d.edge(e).v), color, 2 * canvas.stroke());
    }
    for (int v = 0; v < d.vertex_count(); ++v) canvas.dot(d.point(v), "#000000", 1.5 * canvas.stroke());
    draw_overlays(canvas, overlay);
    return canvas.finish();
}

std::string render_svg(const TriangulatedPolygon& tp, const SvgOverlay& overlay)
{
    return render_polygon_with(tp.polygon, &tp, overlay);
}

std::string render_svg(const Polygon& poly, const SvgOverlay& overlay) { return render_polygon_with(poly, nullptr, overlay); }

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace grr
