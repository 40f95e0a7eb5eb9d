#include "latk/json_io.hpp"

namespace latk {

using nlohmann::json;

json rat_to_json(const Rat& r) {
    if (is_integer(r)) {
        Int n = num(r);
        if (n.fits_slong_p()) return json(n.get_si());
        return json(n.get_str());
    }
    return json(r.get_str());  // "a/b"
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) {
        Rat r;
        if (r.set_str(j.get<std::string>(), 10) != 0)
            throw error("rat_from_json: cannot parse '" + j.get<std::string>() + "'");
        r.canonicalize();
        return r;
    }
    throw error("rat_from_json: expected integer or string");
}

json ratvec_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

RatVec ratvec_from_json(const json& j) {
    if (!j.is_array()) throw error("ratvec_from_json: expected array");
    RatVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

json lattice_to_json(const Lattice& l) {
    json g = json::array();
    for (int i = 0; i < l.rank; ++i) g.push_back(ratvec_to_json(l.gram.row(i)));
    return json{{"rank", l.rank}, {"gram", g}};
}

Lattice lattice_from_json(const json& j) {
    if (!j.contains("rank") || !j.contains("gram"))
        throw error("lattice_from_json: need rank and gram");
    int n = j.at("rank").get<int>();
    const json& g = j.at("gram");
    if (!g.is_array() || static_cast<int>(g.size()) != n)
        throw error("lattice_from_json: gram has wrong number of rows");
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) {
        RatVec row = ratvec_from_json(g[i]);
        if (static_cast<int>(row.size()) != n) throw error("lattice_from_json: ragged gram row");
        for (int k = 0; k < n; ++k) m(i, k) = row[k];
    }
    return make_lattice(std::move(m));
}

json model_to_json(const SurfaceLatticeModel& m, const ChamberSpec* chamber) {
    json j;
    j["lattice"] = lattice_to_json(m.lattice);
    json cls = json::object();
    for (const auto& name : m.class_order) cls[name] = ratvec_to_json(m.classes.at(name));
    j["classes"] = cls;
    j["class_order"] = m.class_order;
    if (chamber) {
        json d = json::array();
        for (const auto& v : chamber->delta) d.push_back(ratvec_to_json(v));
        j["delta"] = d;
        j["base"] = ratvec_to_json(chamber->base);
    }
    return j;
}

json chamber_to_json(const ChamberSpec& c) {
    json d = json::array();
    for (const auto& v : c.delta) d.push_back(ratvec_to_json(v));
    return json{{"lattice", lattice_to_json(c.ambient)}, {"delta", d},
                {"base", ratvec_to_json(c.base)}};
}

ChamberSpec chamber_from_json(const json& j) {
    if (!j.contains("lattice") || !j.contains("delta") || !j.contains("base"))
        throw error("chamber_from_json: need lattice, delta, base");
    Lattice amb = lattice_from_json(j.at("lattice"));
    std::vector<RatVec> delta;
    for (const auto& v : j.at("delta")) delta.push_back(ratvec_from_json(v));
    RatVec base = ratvec_from_json(j.at("base"));
    return make_chamber(std::move(amb), std::move(delta), std::move(base));
}

json niemeier_to_json(const NiemeierLattice& n) {
    json glue = json::array();
    // reconstruct glue vectors from the stored words
    json j;
    j["name"] = n.spec.name;
    j["root_sum"] = lattice_to_json(n.root_sum);
    // the overlattice basis rows, as rational coordinates in the root basis,
    // serve as a loadable glue array (they generate N over the root sum)
    for (int i = 0; i < n.basis_in_roots.rows; ++i)
        glue.push_back(ratvec_to_json(n.basis_in_roots.row(i)));
    j["glue"] = glue;
    return j;
}

Lattice niemeier_from_json(const json& j) {
    Lattice root_sum = lattice_from_json(j.at("root_sum"));
    std::vector<RatVec> glue;
    for (const auto& v : j.at("glue")) glue.push_back(ratvec_from_json(v));
    return overlattice_from_glue(root_sum, glue);
}

}  // namespace latk
