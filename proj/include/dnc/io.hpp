#ifndef DNC_IO_HPP
#define DNC_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dnc/geometry.hpp"
#include "dnc/instance.hpp"
#include "dnc/solver.hpp"

namespace dnc {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    return j;
}

inline void require_version(const Json& j, const std::string& format) {
    if (!j.contains("format") || j["format"] != format)
        throw Error(ErrorCode::ParseError, "not a " + format + " file");
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"] != 1)
        throw Error(ErrorCode::SchemaVersionMismatch, format + " version must be 1");
}

inline Int json_scaled(const Json& j, const std::string& field, const Int& scale) {
    if (!j.contains(field))
        throw Error(ErrorCode::ParseError, "missing field '" + field + "'");
    const Json& v = j[field];
    if (v.is_number_integer()) return Int(v.get<long long>()) * scale;
    if (v.is_string()) return parse_scaled_decimal(v.get<std::string>(), scale);
    throw Error(ErrorCode::ParseError, "field '" + field + "' must be a decimal string");
}

inline Rat json_rat(const Json& v, const std::string& context) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (!v.is_string())
        throw Error(ErrorCode::ParseError, context + " must be a decimal string");
    std::string text = v.get<std::string>();
    std::size_t dot = text.find('.');
    int frac_digits = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
    Int den = 1;
    for (int i = 0; i < frac_digits; ++i) den *= 10;
    Int num = parse_scaled_decimal(text, den);
    return Rat(num, den);
}

inline std::string rat_decimal(const Rat& r) {
    Int num = Int(boost::multiprecision::numerator(r));
    Int den = Int(boost::multiprecision::denominator(r));
    bool neg = num < 0;
    if (neg) num = -num;
    Int whole = num / den, rem = num % den;
    std::string out = (neg ? "-" : "") + whole.str();
    if (rem != 0) {
        std::string digits;
        for (int i = 0; i < 64 && rem != 0; ++i) {
            rem *= 10;
            digits.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
            rem %= den;
        }
        if (rem != 0)
            throw Error(ErrorCode::ParseError, "coordinate lacks a finite decimal form");
        out += "." + digits;
    }
    return out;
}

}  // namespace detail

// ── Instance files ───────────────────────────────────────────────

inline Instance parse_instance(const Json& j) {
    detail::require_version(j, "dnc-instance");
    Instance inst;
    try {
        if (j.contains("scale"))
            inst.scale = j["scale"].is_string() ? Int(j["scale"].get<std::string>())
                                                : Int(j["scale"].get<long long>());
        const Json& graph = j.at("graph");
        inst.vertex_count = graph.at("vertices").get<int>();
        for (const auto& rot : graph.at("rotations"))
            inst.rotations.push_back(rot.get<std::vector<int>>());
        for (const auto& e : graph.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw Error(ErrorCode::ParseError, "graph.edges entries are [u, v, weight]");
            WeightedEdgeInput we;
            we.u = e[0].get<int>();
            we.v = e[1].get<int>();
            we.w = e[2].is_string() ? parse_scaled_decimal(e[2].get<std::string>(), inst.scale)
                                    : Int(e[2].get<long long>()) * inst.scale;
            inst.edges.push_back(we);
        }
        for (const auto& o : j.value("objects", Json::array())) {
            ObjectSpec os;
            os.loc = o.at("loc").get<std::vector<int>>();
            os.cost = detail::json_scaled(o, "cost", inst.scale);
            os.radius = detail::json_scaled(o, "radius", inst.scale);
            inst.objects.push_back(os);
        }
        for (const auto& c : j.value("clients", Json::array())) {
            ClientSpec cs;
            cs.placement = c.at("at").get<int>();
            cs.sensitivity = detail::json_scaled(c, "sensitivity", inst.scale);
            cs.prize = detail::json_scaled(c, "prize", inst.scale);
            inst.clients.push_back(cs);
        }
        inst.k = j.at("k").get<int>();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    validate_instance(inst);
    return inst;
}

inline Instance load_instance(const std::string& path) {
    return parse_instance(detail::load_json_file(path));
}

inline Json instance_to_json(const Instance& inst) {
    Json j;
    j["format"] = "dnc-instance";
    j["version"] = 1;
    j["scale"] = inst.scale.str();
    Json graph;
    graph["vertices"] = inst.vertex_count;
    graph["rotations"] = inst.rotations;
    Json edges = Json::array();
    for (const auto& e : inst.edges)
        edges.push_back({e.u, e.v, format_scaled_decimal(e.w, inst.scale)});
    graph["edges"] = edges;
    j["graph"] = graph;
    Json objects = Json::array();
    for (const auto& o : inst.objects) {
        Json jo;
        jo["loc"] = o.loc;
        jo["cost"] = format_scaled_decimal(o.cost, inst.scale);
        jo["radius"] = format_scaled_decimal(o.radius, inst.scale);
        objects.push_back(jo);
    }
    j["objects"] = objects;
    Json clients = Json::array();
    for (const auto& c : inst.clients) {
        Json jc;
        jc["at"] = c.placement;
        jc["sensitivity"] = format_scaled_decimal(c.sensitivity, inst.scale);
        jc["prize"] = format_scaled_decimal(c.prize, inst.scale);
        clients.push_back(jc);
    }
    j["clients"] = clients;
    j["k"] = inst.k;
    return j;
}

inline void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << instance_to_json(inst).dump(1) << "\n";
}

// ── Scene files ──────────────────────────────────────────────────

inline PlaneScene parse_scene(const Json& j) {
    detail::require_version(j, "dnc-scene");
    PlaneScene scene;
    try {
        std::string norm = j.value("norm", "l2");
        if (norm == "l2") scene.norm = Norm::L2;
        else if (norm == "linf") scene.norm = Norm::Linf;
        else throw Error(ErrorCode::ParseError, "norm must be 'l2' or 'linf'");
        scene.precision_bits = j.value("precision_bits", 64);
        if (scene.precision_bits < 8 || scene.precision_bits > 512)
            throw Error(ErrorCode::ParseError, "precision_bits out of range");
        for (const auto& b : j.value("balls", Json::array())) {
            Ball ball;
            ball.center = {detail::json_rat(b.at("x"), "ball.x"),
                           detail::json_rat(b.at("y"), "ball.y")};
            ball.radius = detail::json_rat(b.at("r"), "ball.r");
            scene.balls.push_back(ball);
        }
        for (const auto& poly : j.value("polygons", Json::array())) {
            Polygon p;
            for (const auto& pt : poly)
                p.push_back({detail::json_rat(pt.at(0), "polygon.x"),
                             detail::json_rat(pt.at(1), "polygon.y")});
            scene.polygons.push_back(p);
        }
        for (const auto& pt : j.value("points", Json::array()))
            scene.points.push_back({detail::json_rat(pt.at(0), "point.x"),
                                    detail::json_rat(pt.at(1), "point.y")});
        scene.k = j.value("k", 1);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return scene;
}

inline PlaneScene load_scene(const std::string& path) {
    return parse_scene(detail::load_json_file(path));
}

inline Json scene_to_json(const PlaneScene& scene) {
    Json j;
    j["format"] = "dnc-scene";
    j["version"] = 1;
    j["norm"] = scene.norm == Norm::L2 ? "l2" : "linf";
    j["precision_bits"] = scene.precision_bits;
    Json balls = Json::array();
    for (const auto& b : scene.balls) {
        Json jb;
        jb["x"] = detail::rat_decimal(b.center.first);
        jb["y"] = detail::rat_decimal(b.center.second);
        jb["r"] = detail::rat_decimal(b.radius);
        balls.push_back(jb);
    }
    j["balls"] = balls;
    Json polys = Json::array();
    for (const auto& p : scene.polygons) {
        Json jp = Json::array();
        for (const auto& pt : p)
            jp.push_back({detail::rat_decimal(pt.first), detail::rat_decimal(pt.second)});
        polys.push_back(jp);
    }
    j["polygons"] = polys;
    Json pts = Json::array();
    for (const auto& p : scene.points)
        pts.push_back({detail::rat_decimal(p.first), detail::rat_decimal(p.second)});
    j["points"] = pts;
    j["k"] = scene.k;
    return j;
}

inline void save_scene(const PlaneScene& scene, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << scene_to_json(scene).dump(1) << "\n";
}

// ── Result records ───────────────────────────────────────────────

/// The byte-stable stdout record: status, exact decimal value, witness ids.
/// Run statistics intentionally live outside this record (stderr), so that
/// rerunning with different thread counts or cache settings is comparable.
inline Json result_record(const SolveResult& result, const Int& scale) {
    Json j;
    j["status"] = status_name(result.status);
    j["value"] = result.value.finite() ? format_scaled_decimal(*result.value.v, scale)
                                       : "-inf";
    j["witness"] = result.witness;
    return j;
}

inline std::string stats_line(const SolveStats& s) {
    std::ostringstream os;
    os << "separators=" << s.separators_enumerated << " cache_hits=" << s.cache_hits
       << " calls=" << s.recursive_calls << " max_depth=" << s.max_depth
       << " tripped=" << (s.tripped ? "yes" : "no");
    return os.str();
}

}  // namespace dnc

#endif
