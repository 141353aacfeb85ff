#include "gptcones/json_io.hpp"

#include <fstream>

namespace gptcones {

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rational strings");
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(parse_rat(e.get<std::string>()));
    return v;
}

Json mat_to_json(const Mat& m) {
    Json a = Json::array();
    for (const Vec& row : m) a.push_back(vec_to_json(row));
    return a;
}

Mat mat_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
    Mat m;
    m.reserve(j.size());
    for (const auto& row : j) m.push_back(vec_from_json(row));
    return m;
}

Json cone_to_json(const ConeRep& c) {
    Json j;
    j["dim"] = cone_dim(c);
    if (const auto* v = std::get_if<PolyV>(&c)) {
        j["kind"] = "poly_v";
        j["vectors"] = mat_to_json(v->generators);
    } else if (const auto* h = std::get_if<PolyH>(&c)) {
        j["kind"] = "poly_h";
        j["vectors"] = mat_to_json(h->facets);
    } else {
        j["kind"] = "lorentz";
    }
    return j;
}

ConeRep cone_from_json(const Json& j) {
    const int dim = j.at("dim").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "lorentz") {
        if (dim < 2) throw std::invalid_argument("lorentz cone needs dim >= 2");
        return LorentzCone{dim};
    }
    Mat vectors = mat_from_json(j.at("vectors"));
    for (const Vec& v : vectors) {
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("cone vector dimension differs from dim");
        if (is_zero_vec(v)) throw std::invalid_argument("cone vectors must be nonzero");
    }
    if (kind == "poly_v") return PolyV{dim, std::move(vectors)};
    if (kind == "poly_h") return PolyH{dim, std::move(vectors)};
    throw std::invalid_argument("unknown cone kind '" + kind + "'");
}

Json system_to_json(const GptSystem& s) {
    Json j = cone_to_json(s.cone);
    j["unit"] = vec_to_json(s.unit);
    return j;
}

GptSystem system_from_json(const Json& j) {
    ConeRep cone = cone_from_json(j);
    Vec unit = j.contains("unit") ? vec_from_json(j.at("unit")) : default_unit(cone);
    return make_system(std::move(cone), std::move(unit));
}

Json tensor_to_json(const TensorElement& t) {
    Json j;
    j["dims"] = Json::array({t.dim1, t.dim2});
    Json rows = Json::array();
    for (int i = 0; i < t.dim1; ++i) {
        Json row = Json::array();
        for (int k = 0; k < t.dim2; ++k) row.push_back(rat_str(t.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

TensorElement tensor_from_json(const Json& j) {
    const auto& dims = j.at("dims");
    TensorElement t(dims.at(0).get<int>(), dims.at(1).get<int>());
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != t.dim1)
        throw std::invalid_argument("tensor entries row count differs from dims");
    for (int i = 0; i < t.dim1; ++i) {
        const auto& row = rows.at(i);
        if (static_cast<int>(row.size()) != t.dim2)
            throw std::invalid_argument("tensor entries column count differs from dims");
        for (int k = 0; k < t.dim2; ++k) t.at(i, k) = parse_rat(row.at(k).get<std::string>());
    }
    return t;
}

Json sandwich_to_json(const KiteSandwich& s) {
    Json j;
    Json alpha = Json::array();
    for (const Rat& a : s.kite.alpha) alpha.push_back(rat_str(a));
    j["alpha"] = std::move(alpha);
    j["psi"] = mat_to_json(s.psi);
    j["phi"] = mat_to_json(s.phi);
    return j;
}

KiteSandwich sandwich_from_json(const Json& j) {
    const auto& alpha = j.at("alpha");
    if (alpha.size() != 4) throw std::invalid_argument("sandwich alpha needs 4 entries");
    KiteSandwich s;
    for (int i = 0; i < 4; ++i) s.kite.alpha[i] = parse_rat(alpha.at(i).get<std::string>());
    s.psi = mat_from_json(j.at("psi"));
    s.phi = mat_from_json(j.at("phi"));
    return s;
}

Json witness_to_json(const IncompatibilityWitness& w) {
    Json j;
    j["x0"] = vec_to_json(w.x0);
    j["x1"] = vec_to_json(w.x1);
    j["xp"] = vec_to_json(w.xp);
    j["xm"] = vec_to_json(w.xm);
    j["f0"] = vec_to_json(w.f0);
    j["f1"] = vec_to_json(w.f1);
    j["fp"] = vec_to_json(w.fp);
    j["fm"] = vec_to_json(w.fm);
    return j;
}

IncompatibilityWitness witness_from_json(const Json& j) {
    IncompatibilityWitness w;
    w.x0 = vec_from_json(j.at("x0"));
    w.x1 = vec_from_json(j.at("x1"));
    w.xp = vec_from_json(j.at("xp"));
    w.xm = vec_from_json(j.at("xm"));
    w.f0 = vec_from_json(j.at("f0"));
    w.f1 = vec_from_json(j.at("f1"));
    w.fp = vec_from_json(j.at("fp"));
    w.fm = vec_from_json(j.at("fm"));
    return w;
}

void add_rat_field(Json& j, const std::string& key, const Rat& value) {
    j[key] = rat_str(value);
    j[key + "_float"] = float12(rat_double(value));
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace gptcones
