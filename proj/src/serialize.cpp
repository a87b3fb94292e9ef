#include "hopfchrom/serialize.hpp"

#include <algorithm>

namespace hopfchrom {

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [i, j] : g.edges()) edges.push_back(Json::array({i, j}));
    return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j, int vertex_cap) {
    if (vertex_cap <= 0) vertex_cap = global_caps().vertex_cap;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw parse_error("graph json: missing integer field 'n'");
    int n = j["n"].get<int>();
    if (n < 0 || n > vertex_cap)
        throw parse_error("graph json: vertex count out of range");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw parse_error("graph json: 'edges' must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw parse_error("graph json: each edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const consistency_error& err) {
        throw parse_error(std::string("graph json: ") + err.what());
    }
}

Json perm_to_json(const Perm& p) { return Json(p.images()); }

Perm perm_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("permutation json must be an image array");
    std::vector<int> img;
    for (const auto& v : j) img.push_back(v.get<int>());
    try {
        return Perm(std::move(img));
    } catch (const consistency_error& err) {
        throw parse_error(std::string("permutation json: ") + err.what());
    }
}

Json rational_to_json(const Rational& r) {
    if (r.is_integer()) return Json(r.num());
    return Json(r.str());
}

Json cyclotomic_to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& v : c.coeffs()) coeffs.push_back(rational_to_json(v));
    return Json{{"conductor", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

Json symfunc_to_json(const SymFunc& f) {
    std::vector<IntPartition> keys;
    for (const auto& [p, c] : f.terms()) keys.push_back(p);
    std::sort(keys.begin(), keys.end(), [](const IntPartition& a, const IntPartition& b) {
        int wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        return a > b;
    });
    Json out = Json::array();
    for (const auto& p : keys)
        out.push_back(Json{{"partition", p}, {"coeff", f.coeff(p)}});
    return out;
}

Json polynomial_to_json(const IntPolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational_to_json(c));
    return out;
}

Json character_table_to_json(const CharacterTable& t) {
    const auto& cls = t.G->classes;
    Json classes = Json::array();
    const auto* pg = dynamic_cast<const PermGroup*>(t.G->group.get());
    for (int c = 0; c < cls.count(); ++c) {
        Json rep;
        if (pg)
            rep = pg->element(cls.reps[c]).cycle_str();
        else
            rep = cls.reps[c];
        classes.push_back(Json{{"representative", std::move(rep)},
                               {"size", cls.sizes[c]},
                               {"element_order", cls.rep_order[c]}});
    }
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json vals = Json::array();
        for (const auto& v : row.values) vals.push_back(cyclotomic_to_json(v));
        rows.push_back(std::move(vals));
    }
    return Json{{"order", t.G->group->order()},
                {"classes", std::move(classes)},
                {"degrees", t.degrees},
                {"rows", std::move(rows)}};
}

Json function_to_json(const HopfInstance& inst, const FunctionF& f) {
    Json labels = Json::array();
    for (const auto& [p, lab] : f.labels)
        labels.push_back(Json{{"point", p}, {"label", lab}});
    return Json{{"young", inst.young().name()},
                {"H", inst.H().str()},
                {"n", f.n},
                {"labels", std::move(labels)}};
}

FunctionF function_from_json(const HopfInstance& inst, const Json& j) {
    if (!j.contains("n")) throw parse_error("function json: missing 'n'");
    if (j.contains("young") && j["young"].get<std::string>() != inst.young().name())
        throw parse_error("function json: young set does not match the instance");
    if (j.contains("H") && j["H"].get<std::string>() != inst.H().str())
        throw parse_error("function json: auxiliary group does not match the instance");
    std::map<YPoint, int> labels;
    if (j.contains("labels"))
        for (const auto& e : j["labels"]) {
            YPoint p;
            for (const auto& v : e["point"]) p.push_back(v.get<int>());
            int lab = e.contains("label") ? e["label"].get<int>() : 1;
            if (!labels.emplace(std::move(p), lab).second)
                throw parse_error("function json: duplicate point");
        }
    try {
        return inst.make_function(j["n"].get<int>(), std::move(labels));
    } catch (const consistency_error& err) {
        throw parse_error(std::string("function json: ") + err.what());
    }
}

Json hopf_element_to_json(const HopfInstance& inst, const HopfElement& a) {
    Json out = Json::array();
    for (const auto& [k, c] : a)
        out.push_back(Json{{"F", function_to_json(inst, inst.function_of(k.f_id))},
                           {"irrep", k.irrep},
                           {"coeff", c}});
    return out;
}

HopfElement hopf_element_from_json(const HopfInstance& inst, const Json& j) {
    if (!j.is_array()) throw parse_error("hopf element json must be an array of terms");
    HopfElement out;
    for (const auto& term : j) {
        if (!term.contains("F")) throw parse_error("hopf element term: missing 'F'");
        FunctionF f = function_from_json(inst, term["F"]);
        auto [id, w] = inst.canonicalize(f);
        (void)w;
        int irrep = term.contains("irrep") ? term["irrep"].get<int>() : 0;
        if (irrep < 0 || irrep >= inst.table_of(id).count())
            throw parse_error("hopf element term: irrep index out of range");
        long long coeff = term.contains("coeff") ? term["coeff"].get<long long>() : 1;
        out[MBasisKey{id, irrep}] += coeff;
        if (out[MBasisKey{id, irrep}] == 0) out.erase(MBasisKey{id, irrep});
    }
    return out;
}

Json tensor_element_to_json(const HopfInstance& inst, const TensorElement& a) {
    Json out = Json::array();
    for (const auto& [k, c] : a) {
        Json left{{"F", function_to_json(inst, inst.function_of(k.first.f_id))},
                  {"irrep", k.first.irrep}};
        Json right{{"F", function_to_json(inst, inst.function_of(k.second.f_id))},
                   {"irrep", k.second.irrep}};
        out.push_back(Json{{"left", std::move(left)}, {"right", std::move(right)}, {"coeff", c}});
    }
    return out;
}

std::pair<YoungSetPtr, AbelianGroup> parse_instance_selector(const std::string& text) {
    YoungSetPtr young;
    AbelianGroup h = AbelianGroup::trivial();
    bool have_young = false, have_h = false;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw parse_error("instance selector: expected key=value in '" + part + "'");
        std::string key = part.substr(0, eq), value = part.substr(eq + 1);
        if (key == "young" || key == "Y") {
            young = builtin_young_set(value);
            have_young = true;
        } else if (key == "H" || key == "h") {
            h = AbelianGroup::parse(value);
            have_h = true;
        } else {
            throw parse_error("instance selector: unknown key '" + key + "'");
        }
    }
    if (!have_young) throw parse_error("instance selector: missing young=<name>");
    if (!have_h) throw parse_error("instance selector: missing H=<group>");
    return {young, h};
}

}  // namespace hopfchrom
