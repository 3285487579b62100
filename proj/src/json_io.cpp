#include "kpn/json_io.hpp"

#include <fstream>

#include "kpn/errors.hpp"

namespace kpn {

using nlohmann::json;

BaseComplex parse_base_complex(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("simplices"))
        throw FormatError("base complex needs {\"vertices\", \"simplices\"}");
    if (!j["vertices"].is_number_integer())
        throw FormatError("\"vertices\" must be an integer");
    int n = j["vertices"].get<int>();
    if (!j["simplices"].is_array()) throw FormatError("\"simplices\" must be an array");
    std::vector<std::vector<int>> simps;
    size_t idx = 0;
    for (const auto& s : j["simplices"]) {
        if (!s.is_array() || s.empty())
            throw FormatError("simplex #" + std::to_string(idx) + " must be a nonempty array");
        std::vector<int> verts;
        for (const auto& v : s) {
            if (!v.is_number_integer())
                throw FormatError("simplex #" + std::to_string(idx) + " has a non-integer vertex");
            verts.push_back(v.get<int>());
        }
        for (size_t i = 0; i + 1 < verts.size(); ++i)
            if (verts[i] >= verts[i + 1])
                throw FormatError("simplex #" + std::to_string(idx) +
                                  " is not strictly increasing");
        if (verts.front() < 0 || verts.back() >= n)
            throw FormatError("simplex #" + std::to_string(idx) + " has a vertex out of range");
        simps.push_back(std::move(verts));
        ++idx;
    }
    return BaseComplex::from_simplices(n, simps);
}

json emit_base_complex(const BaseComplex& K) {
    json simps = json::array();
    for (int d = 0; d <= K.dim(); ++d)
        for (int id = 0; id < K.count(d); ++id) simps.push_back(K.simplex(d, id));
    return json{{"vertices", K.vertex_count()}, {"simplices", simps}};
}

BaseCochain parse_cochain(const json& j, const BaseComplex& K) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("values"))
        throw FormatError("cochain needs {\"degree\", \"modulus\", \"values\"}");
    int deg = j["degree"].get<int>();
    CoeffGroup g = CoeffGroup::integers();
    if (j.contains("modulus") && !j["modulus"].is_null())
        g = CoeffGroup::mod(j["modulus"].get<long long>());
    BaseCochain c(deg, g);
    size_t idx = 0;
    for (const auto& pair : j["values"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_array())
            throw FormatError("cochain value #" + std::to_string(idx) +
                              " must be [[v0, ...], g]");
        std::vector<int> verts;
        for (const auto& v : pair[0]) verts.push_back(v.get<int>());
        if (static_cast<int>(verts.size()) != deg + 1)
            throw FormatError("cochain value #" + std::to_string(idx) +
                              " has the wrong simplex dimension");
        int id = K.index(verts);
        if (id < 0)
            throw FormatError("cochain value #" + std::to_string(idx) +
                              " names a simplex outside the complex");
        c.add(id, pair[1].get<long long>());
        ++idx;
    }
    return c;
}

json emit_cochain(const BaseCochain& c, const BaseComplex& K) {
    json values = json::array();
    for (auto [id, v] : c.values) values.push_back(json::array({K.simplex(c.degree, id), v}));
    json moduli;
    if (c.group.is_modular())
        moduli = c.group.modulus;
    else
        moduli = nullptr;
    return json{{"degree", c.degree}, {"modulus", moduli}, {"values", values}};
}

bool Report::operator==(const Report& o) const {
    if (schema != o.schema || job != o.job || !(groups == o.groups) ||
        normalized_ranks != o.normalized_ranks ||
        cocycle_is_coboundary != o.cocycle_is_coboundary || total_seconds != o.total_seconds)
        return false;
    if (checks.size() != o.checks.size()) return false;
    for (size_t i = 0; i < checks.size(); ++i)
        if (checks[i].name != o.checks[i].name || checks[i].pass != o.checks[i].pass ||
            checks[i].cases != o.checks[i].cases ||
            checks[i].counterexample != o.checks[i].counterexample ||
            checks[i].seconds != o.checks[i].seconds)
            return false;
    return true;
}

json emit_report(const Report& r) {
    json groups = json::array();
    for (const auto& g : r.groups)
        groups.push_back(json{{"degree", g.degree}, {"betti", g.betti}, {"torsion", g.torsion}});
    json out{{"schema", r.schema},
             {"job", r.job},
             {"groups", groups},
             {"timings", json{{"total_seconds", r.total_seconds}}}};
    if (!r.normalized_ranks.empty()) out["normalized_ranks"] = r.normalized_ranks;
    if (r.cocycle_is_coboundary) out["cocycle_is_coboundary"] = *r.cocycle_is_coboundary;
    if (!r.checks.empty()) {
        json checks = json::array();
        for (const auto& c : r.checks) {
            json jc{{"name", c.name},
                    {"pass", c.pass},
                    {"cases", c.cases},
                    {"seconds", c.seconds}};
            if (!c.counterexample.empty()) jc["counterexample"] = c.counterexample;
            checks.push_back(jc);
        }
        out["checks"] = checks;
    }
    return out;
}

Report parse_report(const json& j) {
    Report r;
    r.schema = j.at("schema").get<std::string>();
    r.job = j.at("job");
    for (const auto& g : j.at("groups")) {
        HomologyGroup h;
        h.degree = g.at("degree").get<int>();
        h.betti = g.at("betti").get<long long>();
        h.torsion = g.at("torsion").get<std::vector<long long>>();
        r.groups.push_back(h);
    }
    if (j.contains("normalized_ranks"))
        r.normalized_ranks = j["normalized_ranks"].get<std::vector<long long>>();
    if (j.contains("cocycle_is_coboundary"))
        r.cocycle_is_coboundary = j["cocycle_is_coboundary"].get<bool>();
    if (j.contains("checks"))
        for (const auto& c : j["checks"]) {
            CheckResult cr;
            cr.name = c.at("name").get<std::string>();
            cr.pass = c.at("pass").get<bool>();
            cr.cases = c.at("cases").get<long long>();
            cr.seconds = c.at("seconds").get<double>();
            if (c.contains("counterexample"))
                cr.counterexample = c["counterexample"].get<std::string>();
            r.checks.push_back(cr);
        }
    r.total_seconds = j.at("timings").at("total_seconds").get<double>();
    return r;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace kpn
