#include "sumset/json_io.hpp"

namespace sumset {

namespace {

const json& require_field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw BadInput(where + " must be a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw BadInput(where + " is missing field '" + key + "'");
    return *it;
}

long int_field(const json& j, const char* key, const std::string& where) {
    const json& f = require_field(j, key, where);
    if (!f.is_number_integer()) throw BadInput("field '" + std::string(key) + "' must be an integer");
    return f.get<long>();
}

}  // namespace

json to_json(const Rat& r) {
    if (r.is_integer() && r.num().fits_slong_p()) return json(r.num().get_si());
    return json(r.str());
}

Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rat(mpz_class(std::to_string(j.get<std::uint64_t>())));
        return Rat(mpz_class(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const BadInput& e) {
            throw BadInput(where + ": " + e.what());
        }
    }
    throw BadInput(where + " must be an integer or a 'p/q' string");
}

json to_json(const RatVec& v) {
    json arr = json::array();
    for (int i = 0; i < v.dim(); ++i) arr.push_back(to_json(v[i]));
    return arr;
}

RatVec ratvec_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw BadInput(where + " must be a nonempty array");
    std::vector<Rat> coords;
    coords.reserve(j.size());
    for (size_t k = 0; k < j.size(); ++k)
        coords.push_back(rat_from_json(j[k], where + "[" + std::to_string(k) + "]"));
    return RatVec(std::move(coords));
}

json to_json(const std::set<RatVec>& s) {
    json arr = json::array();
    for (const auto& v : s) arr.push_back(to_json(v));
    return arr;
}

json to_json(const Color& c) { return to_json(c.rep()); }

json to_json(const std::set<Color>& s) {
    json arr = json::array();
    for (const auto& c : s) arr.push_back(to_json(c));
    return arr;
}

json to_json(const F2Vec& v) { return json(v.str()); }

json to_json(const std::set<F2Vec>& s) {
    json arr = json::array();
    for (const auto& v : s) arr.push_back(to_json(v));
    return arr;
}

json to_json(const Instance& inst) {
    json basis = json::array();
    for (const auto& s : inst.basis) basis.push_back(to_json(s));
    return json{{"n", inst.n},
                {"t", inst.t},
                {"S", std::move(basis)},
                {"A", to_json(inst.a)},
                {"B", to_json(inst.b)}};
}

Instance instance_from_json(const json& j) {
    Instance inst;
    inst.n = static_cast<int>(int_field(j, "n", "instance"));
    inst.t = static_cast<int>(int_field(j, "t", "instance"));
    if (inst.n < 1) throw BadInput("field 'n' must be >= 1");

    const json& basis = require_field(j, "S", "instance");
    if (!basis.is_array() || basis.size() != static_cast<size_t>(inst.n))
        throw BadInput("field 'S' must be an array of exactly n vectors");
    for (size_t k = 0; k < basis.size(); ++k)
        inst.basis.push_back(ratvec_from_json(basis[k], "S[" + std::to_string(k) + "]"));

    const auto read_set = [&](const char* key, std::set<RatVec>& out) {
        const json& arr = require_field(j, key, "instance");
        if (!arr.is_array()) throw BadInput("field '" + std::string(key) + "' must be an array");
        for (size_t k = 0; k < arr.size(); ++k)
            out.insert(ratvec_from_json(arr[k], std::string(key) + "[" + std::to_string(k) + "]"));
    };
    read_set("A", inst.a);
    read_set("B", inst.b);

    for (const auto& v : inst.basis)
        if (v.dim() != inst.n) throw BadInput("field 'S' contains a vector of wrong dimension");
    for (const auto& v : inst.a)
        if (v.dim() != inst.n) throw BadInput("field 'A' contains a vector of wrong dimension");
    for (const auto& v : inst.b)
        if (v.dim() != inst.n) throw BadInput("field 'B' contains a vector of wrong dimension");
    return inst;
}

json to_json(const CoverReport& report) {
    json missing = json::array();
    for (const auto& [i, j] : report.missing) missing.push_back(json::array({i, j}));
    return json{{"covered", report.covered}, {"missing", std::move(missing)}};
}

json to_json(const FoldedInstance& folded) {
    json anchors = json::array();
    for (const auto& [key, anchor] : folded.anchors)
        anchors.push_back(json{{"coset", to_json(key)}, {"anchor", to_json(anchor)}});
    return json{{"n", folded.n},
                {"u", folded.u},
                {"Xp", to_json(folded.xp)},
                {"Cp", to_json(folded.cp)},
                {"anchors", std::move(anchors)}};
}

json to_json(const LemmaReport& report) {
    return json{{"m", report.m},
                {"dimW", report.dim_w},
                {"s", report.s},
                {"rhoD_nonzero", report.rho_d_nonzero},
                {"bound", report.bound},
                {"cSize", report.c_size},
                {"pass", report.pass}};
}

json to_json(const Certificate& cert) {
    json steps{{"cover", cert.flags.cover},
               {"forest", cert.flags.forest},
               {"contraction_count", cert.flags.contraction_count},
               {"color_well_defined", cert.flags.color_well_defined},
               {"x_size", cert.flags.x_size},
               {"color_cover", cert.flags.color_cover},
               {"lemma", cert.flags.lemma},
               {"final_chain", cert.flags.final_chain}};
    return json{{"n", cert.n},
                {"t", cert.t},
                {"p", cert.p},
                {"q", cert.q},
                {"vH", cert.v_h},
                {"sizeA", cert.size_a},
                {"sizeB", cert.size_b},
                {"colorsX", to_json(cert.colors_x)},
                {"colorsC", to_json(cert.colors_c)},
                {"folded", cert.folded ? to_json(*cert.folded) : json(nullptr)},
                {"lemma", cert.lemma ? to_json(*cert.lemma) : json(nullptr)},
                {"lemma_bound_value", cert.lemma_bound_value},
                {"final_bound", cert.final_bound},
                {"step_flags", std::move(steps)},
                {"proved", cert.proved()}};
}

json to_json(const LemmaCounterexample& ce) {
    return json{{"n", ce.n},
                {"u", ce.u},
                {"X", to_json(ce.x)},
                {"C", to_json(ce.c)},
                {"cSize", ce.c_size},
                {"required", ce.required}};
}

json search_result_to_json(const SearchResult& result, const std::string& objective_key) {
    json out{{"feasible", result.feasible},
             {"witnessA", to_json(result.witness_a)},
             {"witnessB", to_json(result.witness_b)},
             {"nodesExplored", result.nodes_explored}};
    out[objective_key] = result.feasible ? json(result.best) : json(nullptr);
    return out;
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw BadInput("malformed JSON document");
    return j;
}

}  // namespace sumset
