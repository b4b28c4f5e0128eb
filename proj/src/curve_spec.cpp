#include "frontal/curve_spec.hpp"

#include "frontal/error.hpp"

#include <fstream>

namespace frontal {

using nlohmann::json;

namespace {

std::vector<double> number_array(const json& doc, const char* key) {
    if (!doc.contains(key)) return {};
    const json& arr = doc.at(key);
    if (!arr.is_array()) throw Error(ErrorKind::spec, std::string("'") + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : arr) {
        if (!v.is_number()) throw Error(ErrorKind::spec, std::string("'") + key + "' must be an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

Vector vector_from_json(const json& doc, int n, const char* what) {
    if (!doc.is_array() || static_cast<int>(doc.size()) != n) {
        throw Error(ErrorKind::spec, std::string(what) + " must be an array of " + std::to_string(n) + " numbers");
    }
    Vector v(n);
    for (int i = 0; i < n; ++i) {
        if (!doc[static_cast<std::size_t>(i)].is_number()) throw Error(ErrorKind::spec, std::string(what) + " must be numeric");
        v[i] = doc[static_cast<std::size_t>(i)].get<double>();
    }
    return v;
}

json vector_to_json(const Vector& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

int read_dimension(const json& doc) {
    if (!doc.contains("dimension") || !doc.at("dimension").is_number_integer()) {
        throw Error(ErrorKind::spec, "curve spec needs an integer 'dimension'");
    }
    const int n = doc.at("dimension").get<int>();
    if (n < 2) throw Error(ErrorKind::spec, "curve dimension must be at least 2");
    return n;
}

}  // namespace

json trig_poly_to_json(const TrigPoly& p) {
    json doc{{"constant", p.constant()}, {"cos", p.cos_coeffs()}, {"sin", p.sin_coeffs()}};
    if (p.antiperiodic()) doc["antiperiodic"] = true;
    return doc;
}

TrigPoly trig_poly_from_json(const json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::spec, "trigonometric polynomial must be an object");
    double constant = 0.0;
    if (doc.contains("constant")) {
        if (!doc.at("constant").is_number()) throw Error(ErrorKind::spec, "'constant' must be a number");
        constant = doc.at("constant").get<double>();
    }
    const bool anti = doc.value("antiperiodic", false);
    return TrigPoly(constant, number_array(doc, "cos"), number_array(doc, "sin"), anti);
}

ClosedCurve curve_from_json(const json& doc) {
    try {
        if (!doc.is_object()) throw Error(ErrorKind::spec, "curve spec must be a JSON object");
        const int n = read_dimension(doc);
        const std::string backend = doc.value("backend", "");
        if (backend == "family") {
            if (!doc.contains("name") || !doc.at("name").is_string()) {
                throw Error(ErrorKind::spec, "family spec needs a string 'name'");
            }
            Params params;
            if (doc.contains("params")) {
                if (!doc.at("params").is_object()) throw Error(ErrorKind::spec, "'params' must be an object");
                for (const auto& [key, value] : doc.at("params").items()) {
                    if (!value.is_number()) throw Error(ErrorKind::spec, "parameter '" + key + "' must be a number");
                    params[key] = value.get<double>();
                }
            }
            return make_family(doc.at("name").get<std::string>(), params, n);
        }
        if (backend == "fourier") {
            if (!doc.contains("coords") || !doc.at("coords").is_array() || doc.at("coords").empty()) {
                throw Error(ErrorKind::spec, "fourier spec needs a non-empty 'coords' array");
            }
            std::vector<TrigPoly> coords;
            for (const auto& c : doc.at("coords")) coords.push_back(trig_poly_from_json(c));
            if (static_cast<int>(coords.size()) != n) {
                throw Error(ErrorKind::spec, "fourier spec needs one coordinate per dimension");
            }
            return make_fourier(std::move(coords));
        }
        if (backend == "generated") {
            GeneratedBackend parts;
            if (!doc.contains("rho")) throw Error(ErrorKind::spec, "generated spec needs 'rho'");
            parts.rho = trig_poly_from_json(doc.at("rho"));
            parts.base = doc.contains("base") ? vector_from_json(doc.at("base"), n, "'base'") : Vector::Zero(n);
            if (doc.contains("theta")) {
                const json& th = doc.at("theta");
                GeneratedBackend::Angle angle;
                if (!th.contains("slope") || !th.at("slope").is_number()) {
                    throw Error(ErrorKind::spec, "'theta' needs a numeric 'slope'");
                }
                angle.slope = th.at("slope").get<double>();
                angle.periodic = trig_poly_from_json(th);
                if (doc.contains("plane")) {
                    const json& pl = doc.at("plane");
                    if (!pl.is_array() || pl.size() != 2) throw Error(ErrorKind::spec, "'plane' must hold two vectors");
                    angle.plane.resize(n, 2);
                    angle.plane.col(0) = vector_from_json(pl[0], n, "'plane' vector");
                    angle.plane.col(1) = vector_from_json(pl[1], n, "'plane' vector");
                } else if (n != 2) {
                    throw Error(ErrorKind::spec, "'theta' in dimension > 2 needs a 'plane'");
                }
                parts.angle = std::move(angle);
            } else if (doc.contains("direction")) {
                if (!doc.at("direction").is_array()) throw Error(ErrorKind::spec, "'direction' must be an array");
                for (const auto& d : doc.at("direction")) parts.direction.push_back(trig_poly_from_json(d));
            } else {
                throw Error(ErrorKind::spec, "generated spec needs 'theta' or 'direction'");
            }
            return make_generated(std::move(parts));
        }
        throw Error(ErrorKind::spec, "unknown backend '" + backend + "'");
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::spec, std::string("malformed curve spec: ") + ex.what());
    }
}

json curve_to_json(const ClosedCurve& curve) {
    json doc{{"dimension", curve.dimension()}};
    if (const auto* fam = curve.family()) {
        doc["backend"] = "family";
        doc["name"] = std::string(family_name(fam->family));
        json params = json::object();
        for (const auto& [k, v] : fam->params) params[k] = v;
        doc["params"] = params;
        return doc;
    }
    if (const auto* f = curve.fourier()) {
        doc["backend"] = "fourier";
        json coords = json::array();
        for (const auto& c : f->coords) coords.push_back(trig_poly_to_json(c));
        doc["coords"] = coords;
        return doc;
    }
    const GeneratedBackend& g = *curve.generated();
    doc["backend"] = "generated";
    doc["rho"] = trig_poly_to_json(g.rho);
    doc["base"] = vector_to_json(g.base);
    if (g.angle) {
        json th = trig_poly_to_json(g.angle->periodic);
        th["slope"] = g.angle->slope;
        doc["theta"] = th;
        if (curve.dimension() != 2) {
            doc["plane"] = json::array({vector_to_json(g.angle->plane.col(0)), vector_to_json(g.angle->plane.col(1))});
        }
    } else {
        json dir = json::array();
        for (const auto& d : g.direction) dir.push_back(trig_poly_to_json(d));
        doc["direction"] = dir;
    }
    return doc;
}

ClosedCurve load_curve(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io, "cannot open curve spec '" + path.string() + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::spec, "curve spec '" + path.string() + "' is not valid JSON: " + ex.what());
    }
    return curve_from_json(doc);
}

}  // namespace frontal
