#include "shapemetric/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "shapemetric/forms.hpp"

namespace shapemetric {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw std::invalid_argument("body json: " + where + ": " + what);
}

double get_num(const json& j, const std::string& where) {
    if (!j.is_number()) bad(where, "expected a number");
    return j.get<double>();
}

Vec get_vec(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || int(j.size()) != dim)
        bad(where, "expected an array of " + std::to_string(dim) + " numbers");
    Vec v{0, 0, 0};
    for (int i = 0; i < dim; ++i) v[i] = get_num(j[i], where);
    return v;
}

Mat3 get_mat(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || int(j.size()) != dim)
        bad(where, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    Mat3 m = Mat3::identity();  // unused block stays identity for dim 2
    for (int r = 0; r < dim; ++r) {
        if (!j[r].is_array() || int(j[r].size()) != dim) bad(where, "ragged matrix row");
        for (int c = 0; c < dim; ++c) m.m[3 * r + c] = get_num(j[r][c], where);
    }
    return m;
}

BodyDescriptor parse_node(const json& j, int parent_dim, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");

    int dim = parent_dim;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer()) bad(where + ".dim", "expected an integer");
        dim = j["dim"].get<int>();
    }
    if (dim == 0) bad(where + ".dim", "missing (required at top level)");
    if (dim != 2 && dim != 3) bad(where + ".dim", "must be 2 or 3");
    if (parent_dim != 0 && dim != parent_dim) bad(where + ".dim", "does not match enclosing body");

    if (!j.contains("type") || !j["type"].is_string()) bad(where + ".type", "missing or not a string");
    std::string type = j["type"].get<std::string>();

    auto need = [&](const char* field) -> const json& {
        if (!j.contains(field)) bad(where + "." + field, "missing for type \"" + type + "\"");
        return j.at(field);
    };

    if (type == "point") return make_point(dim, get_vec(need("p"), dim, where + ".p"));

    if (type == "segment")
        return make_segment(dim, get_vec(need("a"), dim, where + ".a"),
                            get_vec(need("b"), dim, where + ".b"));

    if (type == "polytope") {
        const json& vj = need("vertices");
        if (!vj.is_array() || vj.empty()) bad(where + ".vertices", "expected a nonempty array");
        std::vector<Vec> verts;
        for (std::size_t i = 0; i < vj.size(); ++i)
            verts.push_back(get_vec(vj[i], dim, where + ".vertices[" + std::to_string(i) + "]"));
        return make_polytope(dim, std::move(verts));
    }

    if (type == "ball") {
        double r = get_num(need("radius"), where + ".radius");
        if (r < 0) bad(where + ".radius", "must be >= 0");
        return make_ball(dim, get_vec(need("center"), dim, where + ".center"), r);
    }

    if (type == "ellipsoid")
        return make_ellipsoid(dim, get_vec(need("center"), dim, where + ".center"),
                              get_mat(need("shape"), dim, where + ".shape"));

    if (type == "combination") {
        const json& tj = need("terms");
        if (!tj.is_array() || tj.empty()) bad(where + ".terms", "expected a nonempty array");
        std::vector<double> weights;
        std::vector<BodyDescriptor> parts;
        for (std::size_t i = 0; i < tj.size(); ++i) {
            std::string tw = where + ".terms[" + std::to_string(i) + "]";
            if (!tj[i].is_object() || !tj[i].contains("weight") || !tj[i].contains("body"))
                bad(tw, "expected {\"weight\": w, \"body\": {...}}");
            double w = get_num(tj[i]["weight"], tw + ".weight");
            if (w < 0) bad(tw + ".weight", "must be >= 0");
            weights.push_back(w);
            parts.push_back(parse_node(tj[i]["body"], dim, tw + ".body"));
        }
        return make_combination(std::move(weights), std::move(parts));
    }

    if (type == "moved") {
        BodyDescriptor inner = parse_node(need("inner"), dim, where + ".inner");
        Mat3 rot = get_mat(need("rotation"), dim, where + ".rotation");
        Vec trans = get_vec(need("translation"), dim, where + ".translation");
        double scale = 1.0;
        if (j.contains("scale")) {
            scale = get_num(j["scale"], where + ".scale");
            if (scale < 0) bad(where + ".scale", "must be >= 0");
        }
        try {
            return transform(inner, rot, trans, scale);
        } catch (const std::exception& e) {
            bad(where + ".rotation", e.what());
        }
    }

    if (type == "builtin") {
        const json& bj = need("builtin");
        if (!bj.is_string()) bad(where + ".builtin", "expected a string");
        try {
            return builtin_body(bj.get<std::string>());
        } catch (const std::exception& e) {
            bad(where + ".builtin", e.what());
        }
    }

    bad(where + ".type", "unknown type \"" + type + "\"");
}

void put(std::ostream& os, const char* fmt, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, x);
    os << buf;
}

json mat_to_json(const Mat3& m) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r)
        rows.push_back(json::array({m.m[3 * r], m.m[3 * r + 1], m.m[3 * r + 2]}));
    return rows;
}

// local minima of a circular objective trace, best first, at most 8;
// keeps serialized reports small while retaining every candidate basin
json compress_trace(const std::vector<std::pair<double, double>>& tr) {
    json out = json::array();
    std::size_t n = tr.size();
    std::vector<std::size_t> mins;
    for (std::size_t i = 0; i < n; ++i) {
        double prev = tr[(i + n - 1) % n].second, next = tr[(i + 1) % n].second;
        if (tr[i].second <= prev && tr[i].second <= next) mins.push_back(i);
    }
    std::sort(mins.begin(), mins.end(), [&](std::size_t a, std::size_t b) {
        if (tr[a].second != tr[b].second) return tr[a].second < tr[b].second;
        return a < b;
    });
    if (mins.size() > 8) mins.resize(8);
    for (std::size_t i : mins) out.push_back({tr[i].first, tr[i].second});
    return out;
}

}  // namespace

BodyDescriptor parse_body_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("body json: ") + e.what());
    }
    return parse_node(j, 0, "body");
}

BodyDescriptor load_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open body file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_body_json(ss.str());
}

void write_field_csv(const SupportField& f, std::ostream& os) {
    const SphereGrid& g = *f.grid;
    if (g.n == 2) {
        os << "theta,value,grad\n";
        const std::size_t n = g.nodes.size();
        for (std::size_t i = 0; i < n; ++i) {
            double d;
            if (f.has_gradients) {
                d = -std::sin(g.theta[i]) * f.gradients[i][0] + std::cos(g.theta[i]) * f.gradients[i][1];
            } else {
                double dt = g.theta[(i + 1) % n] - g.theta[i];
                if (dt <= 0) dt += 2 * 3.14159265358979323846;
                d = (f.values[(i + 1) % n] - f.values[(i + n - 1) % n]) / (2 * dt);
            }
            put(os, "%.17g", g.theta[i]);
            os << ',';
            put(os, "%.17g", f.values[i]);
            os << ',';
            put(os, "%.17g", d);
            os << '\n';
        }
    } else {
        os << "polar,azimuth,weight,value,gradx,grady,gradz\n";
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            std::size_t row = i / std::size_t(g.n_azimuth), col = i % std::size_t(g.n_azimuth);
            put(os, "%.17g", g.polar[row]);
            os << ',';
            put(os, "%.17g", g.azimuth[col]);
            os << ',';
            put(os, "%.17g", g.weights[i]);
            os << ',';
            put(os, "%.17g", f.values[i]);
            for (int k = 0; k < 3; ++k) {
                os << ',';
                put(os, "%.17g", f.has_gradients ? f.gradients[i][k] : 0.0);
            }
            os << '\n';
        }
    }
}

void write_frame_svg(const SupportField& f, std::ostream& os) {
    if (f.grid->n != 2) throw std::invalid_argument("svg frames are 2D only");
    SupportField c = center_field(f);
    double v2v = v2_form(c);
    double s = interior_shape(c) ? 1.0 / std::sqrt(v2v) : 1.0;

    const SphereGrid& g = *c.grid;
    const std::size_t n = g.nodes.size();
    const std::size_t step = n > 512 ? n / 512 : 1;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
          "viewBox=\"-2 -2 4 4\">\n<path fill=\"none\" stroke=\"black\" stroke-width=\"0.012\" d=\"";
    bool first = true;
    for (std::size_t i = 0; i < n; i += step) {
        double th = g.theta[i];
        double h = s * c.values[i];
        double hp;
        if (c.has_gradients) {
            hp = s * (-std::sin(th) * c.gradients[i][0] + std::cos(th) * c.gradients[i][1]);
        } else {
            double dt = 2 * 3.14159265358979323846 / double(n);
            hp = s * (c.values[(i + 1) % n] - c.values[(i + n - 1) % n]) / (2 * dt);
        }
        double x = h * std::cos(th) - hp * std::sin(th);
        double y = h * std::sin(th) + hp * std::cos(th);
        os << (first ? 'M' : 'L');
        put(os, "%.5f", x);
        os << ' ';
        put(os, "%.5f", -y);  // svg y axis points down
        first = false;
    }
    os << "Z\"/>\n</svg>\n";
}

std::string report_to_json(const ShapeDistanceReport& r) {
    json j;
    j["distance"] = r.distance;
    j["rotation"] = mat_to_json(r.optimal_rotation);
    j["reflected"] = r.reflected;
    j["method"] = r.diagnostics.method;
    // fft traces are dense over the angle grid; keep the candidate minima.
    // so3-grid traces are already the top-scored rotations, keep as is.
    j["trace"] = r.diagnostics.method == "fft" ? compress_trace(r.objective_trace)
                                               : json(r.objective_trace);
    j["certificate_ok"] = r.diagnostics.certificate_ok;
    j["heuristic"] = r.diagnostics.heuristic;
    return j.dump(2);
}

std::string validity_to_json(const ValidityVerdict& v) {
    json j;
    j["valid"] = v.valid;
    j["worst_violation"] = v.worst_violation;
    j["witness"] = {v.witness[0], v.witness[1], v.witness[2]};
    j["witness_index"] = v.witness_index;
    j["tol_used"] = v.tol_used;
    return j.dump(2);
}

std::string terminal_to_json(const TerminalInterval& t) {
    json j;
    j["t_min"] = t.t_min;
    j["t_max"] = t.t_max;
    j["capped_min"] = t.capped_min;
    j["capped_max"] = t.capped_max;
    j["probes"] = json::array();
    for (const auto& [tt, ok] : t.probes) j["probes"].push_back({{"t", tt}, {"valid", ok}});
    return j.dump(2);
}

}  // namespace shapemetric
