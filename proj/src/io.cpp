#include "loc/io.hpp"
#include "loc/builders.hpp"

#include <fstream>
#include <set>
#include <string>

namespace loc {

namespace {

void check_keys(const Json& j, const std::set<std::string>& allowed, const char* what) {
    if (!j.is_object()) throw SpecError(std::string(what) + " must be a JSON object");
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            throw SpecError("unknown field \"" + item.key() + "\" in " + what);
}

std::string get_string(const Json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_string())
        throw SpecError(std::string(what) + " needs a string field \"" + key + "\"");
    return j[key].get<std::string>();
}

long long get_int(const Json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw SpecError(std::string(what) + " needs an integer field \"" + key + "\"");
    return j[key].get<long long>();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw SpecError(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const Json& e : j) {
        if (!e.is_string()) throw SpecError(std::string(what) + " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<int> element_list(const Json& j, const FiniteGroup& g, const char* what) {
    std::vector<int> out;
    for (const std::string& s : string_list(j, what)) out.push_back(element_by_label(g, s));
    return out;
}

Mat parse_matrix(const Json& j, const char* what) {
    if (!j.is_array()) throw SpecError(std::string(what) + " must be an array of integer rows");
    int rows = (int)j.size();
    int cols = rows > 0 && j[0].is_array() ? (int)j[0].size() : 0;
    Mat m(rows, cols);
    for (int r = 0; r < rows; r++) {
        if (!j[r].is_array() || (int)j[r].size() != cols)
            throw SpecError(std::string(what) + " rows must all have the same length");
        for (int c = 0; c < cols; c++) {
            if (!j[r][c].is_number_integer())
                throw SpecError(std::string(what) + " entries must be integers");
            m.at(r, c) = j[r][c].get<long long>();
        }
    }
    return m;
}

} // namespace

GroupPtr parse_group_spec(const Json& j) {
    if (j.is_string()) return builtin_group(j.get<std::string>());
    check_keys(j, {"name", "kind", "n", "generators"}, "group spec");
    std::string kind = get_string(j, "kind", "group spec");
    if (kind == "permutation") {
        std::string name = j.contains("name") ? get_string(j, "name", "group spec") : "G";
        int degree = (int)get_int(j, "n", "group spec");
        if (!j.contains("generators"))
            throw SpecError("group spec of kind \"permutation\" needs generators");
        auto gens = string_list(j["generators"], "group generators");
        if (gens.empty()) throw SpecError("group spec needs at least one generator");
        return perm_group(name, degree, gens);
    }
    if (j.contains("generators"))
        throw SpecError("only group specs of kind \"permutation\" take generators");
    long long n = get_int(j, "n", "group spec");
    if (n < 1 || n > kMaxGroupOrder) throw SpecError("group spec parameter n is out of range");
    if (kind == "symmetric") return symmetric_group((int)n);
    if (kind == "cyclic") return cyclic_group((int)n);
    if (kind == "dihedral") return dihedral_group((int)n);
    throw SpecError("unknown group kind \"" + kind + "\"");
}

DeltaSpec parse_delta_spec(const Json& j, const FiniteGroup& g) {
    DeltaSpec spec;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "all") return spec;
        if (s == "nontrivial") {
            spec.kind = DeltaSpec::Kind::Nontrivial;
            return spec;
        }
        throw SpecError("delta spec string must be \"all\" or \"nontrivial\"");
    }
    check_keys(j, {"overgroups_of", "explicit"}, "delta spec");
    if (j.contains("overgroups_of") == j.contains("explicit"))
        throw SpecError("delta spec needs exactly one of \"overgroups_of\" or \"explicit\"");
    if (j.contains("overgroups_of")) {
        spec.kind = DeltaSpec::Kind::OvergroupsOf;
        spec.seeds.push_back(element_list(j["overgroups_of"], g, "delta seed generators"));
        return spec;
    }
    spec.kind = DeltaSpec::Kind::Explicit;
    if (!j["explicit"].is_array()) throw SpecError("explicit delta must be an array of subgroups");
    for (const Json& sub : j["explicit"])
        spec.seeds.push_back(element_list(sub, g, "delta seed generators"));
    return spec;
}

Locality parse_locality_spec(const Json& j, std::optional<int> p_override,
                             const std::optional<Json>& delta_override) {
    check_keys(j, {"group", "p", "S", "delta"}, "locality spec");
    if (!j.contains("group")) throw SpecError("locality spec needs a group");
    GroupPtr g = parse_group_spec(j["group"]);
    int p = 0;
    if (p_override)
        p = *p_override;
    else
        p = (int)get_int(j, "p", "locality spec");
    DeltaSpec delta;
    if (delta_override)
        delta = parse_delta_spec(*delta_override, *g);
    else if (j.contains("delta"))
        delta = parse_delta_spec(j["delta"], *g);
    std::optional<std::vector<int>> s_gens;
    if (j.contains("S")) s_gens = element_list(j["S"], *g, "Sylow generators");
    return build_group_locality(std::move(g), p, delta, s_gens);
}

Certificate parse_certificate(const Json& j, const Locality& loc) {
    check_keys(j, {"target", "factors"}, "certificate");
    Certificate cert;
    cert.target = element_by_label(*loc.ambient, get_string(j, "target", "certificate"));
    if (!j.contains("factors") || !j["factors"].is_array())
        throw SpecError("certificate needs an array field \"factors\"");
    for (const Json& f : j["factors"]) {
        check_keys(f, {"Q", "x"}, "certificate factor");
        if (!f.contains("Q")) throw SpecError("certificate factor needs a field \"Q\"");
        CertFactor cf;
        cf.q = generated_subgroup(loc.ambient, element_list(f["Q"], *loc.ambient, "factor Q"));
        cf.x = element_by_label(*loc.ambient, get_string(f, "x", "certificate factor"));
        cert.factors.push_back(std::move(cf));
    }
    return cert;
}

Json generator_labels(const Subgroup& h) {
    Json out = Json::array();
    for (int g : subgroup_generators(h)) out.push_back(h.parent->label_of(g));
    return out;
}

Json certificate_to_json(const Locality& loc, const Certificate& cert) {
    Json out;
    out["target"] = loc.ambient->label_of(cert.target);
    out["factors"] = Json::array();
    for (const CertFactor& f : cert.factors) {
        Json jf;
        jf["Q"] = generator_labels(f.q);
        jf["x"] = loc.ambient->label_of(f.x);
        out["factors"].push_back(std::move(jf));
    }
    return out;
}

GModule parse_module(const Json& j, GroupPtr g, long long p) {
    check_keys(j, {"orders", "action"}, "module spec");
    if (!j.contains("orders") || !j["orders"].is_array())
        throw SpecError("module spec needs an array field \"orders\"");
    AbPres ab;
    for (const Json& o : j["orders"]) {
        if (!o.is_number_integer()) throw SpecError("module orders must be integers");
        ab.orders.push_back(o.get<long long>());
    }
    int k = (int)ab.orders.size();
    if (!j.contains("action") || !j["action"].is_object())
        throw SpecError("module spec needs an object field \"action\"");
    std::vector<Mat> action(g->n, Mat(0, 0));
    std::vector<bool> known(g->n, false);
    action[0] = Mat::identity(k);
    known[0] = true;
    std::vector<int> gens;
    for (const auto& item : j["action"].items()) {
        int x = element_by_label(*g, item.key());
        Mat m = parse_matrix(item.value(), "module action matrix");
        if (m.rows != k || m.cols != k)
            throw SpecError("module action matrix has the wrong shape");
        gens.push_back(x);
        if (known[x]) {
            if (m.a != action[x].a) throw SpecError("module action repeats an element");
        } else {
            action[x] = std::move(m);
            known[x] = true;
        }
    }
    // multiplicative closure over the generated elements; any conflict with a
    // stated matrix surfaces in the final validation
    for (bool grew = true; grew;) {
        grew = false;
        for (int a = 0; a < g->n; a++) {
            if (!known[a]) continue;
            for (int s : gens) {
                int as = g->mul(a, s);
                if (known[as]) continue;
                Mat m = mat_mul(action[a], action[s]);
                for (int r = 0; r < k; r++)
                    for (int c = 0; c < k; c++) {
                        long long v = m.at(r, c) % ab.orders[r];
                        m.at(r, c) = v < 0 ? v + ab.orders[r] : v;
                    }
                action[as] = std::move(m);
                known[as] = true;
                grew = true;
            }
        }
    }
    for (int a = 0; a < g->n; a++)
        if (!known[a]) throw SpecError("module action generators do not generate the group");
    return make_gmodule(std::move(g), std::move(ab), std::move(action), p);
}

FunctorPres parse_functor(const Json& j, const TransporterCat& t) {
    check_keys(j, {"values", "maps"}, "functor spec");
    if (!j.contains("values") || !j["values"].is_object())
        throw SpecError("functor spec needs an object field \"values\"");
    int n = (int)t.objects.size();
    FunctorPres f;
    f.cat = t;
    f.values.assign((size_t)n, AbPres{});
    std::vector<bool> seen((size_t)n, false);
    for (const auto& item : j["values"].items()) {
        size_t pos = 0;
        int idx = -1;
        try {
            idx = std::stoi(item.key(), &pos);
        } catch (const std::exception&) {
            throw SpecError("functor value keys must be object ids");
        }
        if (pos != item.key().size() || idx < 0 || idx >= n)
            throw SpecError("unknown object id \"" + item.key() + "\" in functor values");
        if (!item.value().is_array()) throw SpecError("functor values must be arrays of orders");
        AbPres a;
        for (const Json& o : item.value()) {
            if (!o.is_number_integer()) throw SpecError("functor value orders must be integers");
            a.orders.push_back(o.get<long long>());
        }
        f.values[(size_t)idx] = std::move(a);
        seen[(size_t)idx] = true;
    }
    for (int i = 0; i < n; i++)
        if (!seen[(size_t)i]) throw SpecError("functor values must cover every object");
    if (j.contains("maps")) {
        if (!j["maps"].is_object())
            throw SpecError("functor spec field \"maps\" must be an object");
        for (const auto& item : j["maps"].items()) {
            const std::string& key = item.key();
            size_t arrow = key.find("->");
            size_t colon = key.find(':', arrow == std::string::npos ? 0 : arrow + 2);
            if (arrow == std::string::npos || colon == std::string::npos)
                throw SpecError("functor map keys must look like \"<i>-><j>:<element>\"");
            int i = -1, jj = -1;
            try {
                size_t p1 = 0, p2 = 0;
                i = std::stoi(key.substr(0, arrow), &p1);
                jj = std::stoi(key.substr(arrow + 2, colon - arrow - 2), &p2);
                if (p1 != arrow || p2 != colon - arrow - 2) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw SpecError("functor map keys must look like \"<i>-><j>:<element>\"");
            }
            if (i < 0 || i >= n || jj < 0 || jj >= n)
                throw SpecError("unknown object id in functor map key \"" + key + "\"");
            int g = element_by_label(*t.ambient, key.substr(colon + 1));
            if (!t.is_morphism(i, jj, g))
                throw SpecError("functor map key \"" + key + "\" is not a morphism");
            f.maps.emplace(std::tuple{i, jj, g}, parse_matrix(item.value(), "functor map matrix"));
        }
    }
    return f;
}

Json orders_to_json(const AbPres& a) {
    Json out = Json::array();
    for (long long o : a.orders) out.push_back(o);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot read input path \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SpecError("input \"" + path + "\" is not valid JSON: " + e.what());
    }
}

} // namespace loc
