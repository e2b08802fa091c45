#include "loc/builders.hpp"
#include "loc/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace loc {

namespace {

struct Opts {
    std::vector<std::string> in;
    std::string out;
    std::string delta;
    int p = 0;
    int degree = -1;
    int maxlen = 0;
    bool essential_only = false;
    std::string element;
    std::string functor_name;
};

void add_common(CLI::App* sub, Opts& o) {
    // one value per --in instance; repeat the flag for a second input
    sub->add_option("--in", o.in, "input file path or built-in group name (repeatable)")
        ->type_size(1)
        ->allow_extra_args(false);
    sub->add_option("--out", o.out, "write the result here instead of standard output");
    sub->add_option("--delta", o.delta, "object-set seed: all | nontrivial")
        ->check(CLI::IsMember({"all", "nontrivial"}));
    sub->add_option("--p", o.p, "the prime");
    sub->add_option("--degree", o.degree, "cohomological degree");
    sub->add_option("--maxlen", o.maxlen, "maximum word length for axiom checking");
}

// resolves --in entry 0 to a group: built-in name, group spec file, or the
// ambient group of a locality spec file
Json primary_input(const Opts& o) {
    if (o.in.empty()) throw SpecError("an --in group or locality is required");
    const std::string& src = o.in.front();
    try {
        builtin_group(src);
        return Json(src);
    } catch (const SpecError&) {
        // not a built-in name (or too large to build): treat as a file path
        return load_json_file(src);
    }
}

Locality locality_from(const Opts& o) {
    Json j = primary_input(o);
    std::optional<int> p;
    if (o.p > 0) p = o.p;
    std::optional<Json> delta;
    if (!o.delta.empty()) delta = Json(o.delta);
    if (j.is_object() && j.contains("group")) return parse_locality_spec(j, p, delta);
    // bare group: --p is the only source for the prime
    Json wrap;
    wrap["group"] = j;
    if (!p) throw SpecError("a bare group input needs --p");
    return parse_locality_spec(wrap, p, delta);
}

GModule module_from(const Opts& o, size_t slot, GroupPtr g, long long p) {
    if (o.in.size() > slot) return parse_module(load_json_file(o.in[slot]), g, p);
    AbPres ab;
    ab.orders = {p};
    return trivial_module(std::move(g), ab, p);
}

int emit(const Json& j, const Opts& o, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out);
        if (!f) throw SpecError("cannot open output path \"" + o.out + "\"");
        f << text;
    }
    return 0;
}

int cmd_group_info(const Opts& o, std::ostream& out) {
    Json src = primary_input(o);
    GroupPtr g =
        src.is_object() && src.contains("group") ? parse_group_spec(src["group"]) : parse_group_spec(src);
    Json j;
    j["name"] = g->name;
    j["order"] = g->n;
    j["abelian"] = g->is_abelian();
    Json labels = Json::array();
    for (int i = 0; i < g->n; i++) labels.push_back(g->label_of(i));
    j["elements"] = std::move(labels);
    return emit(j, o, out);
}

int cmd_locality_build(const Opts& o, std::ostream& out) {
    Locality loc = locality_from(o);
    Json j;
    j["group"] = loc.ambient->name;
    j["group_order"] = loc.ambient->n;
    j["p"] = loc.p;
    j["S"] = generator_labels(loc.S);
    j["S_order"] = loc.S.order;
    j["delta_size"] = (long long)loc.delta.size();
    j["element_count"] = loc.element_count();
    return emit(j, o, out);
}

int cmd_locality_verify(const Opts& o, std::ostream& out) {
    Locality loc = locality_from(o);
    AxiomReport rep = verify_axioms(loc, o.maxlen > 0 ? o.maxlen : 4);
    Json j;
    j["pass"] = rep.pass;
    j["words_checked"] = rep.words_checked;
    Json v = Json::array();
    for (const AxiomViolation& x : rep.violations) {
        Json e;
        e["check"] = x.check;
        e["witness"] = x.witness;
        e["detail"] = x.detail;
        v.push_back(std::move(e));
    }
    j["violations"] = std::move(v);
    return emit(j, o, out);
}

int cmd_essentials(const Opts& o, std::ostream& out) {
    Locality loc = locality_from(o);
    Json j = Json::array();
    for (const Subgroup& e : essentials(loc)) j.push_back(generator_labels(e));
    return emit(j, o, out);
}

int cmd_decompose(const Opts& o, std::ostream& out) {
    Locality loc = locality_from(o);
    int g = element_by_label(*loc.ambient, o.element);
    if (!loc.in_locality(g)) throw DomainError("element is outside the locality");
    Decomposer dec(loc);
    Certificate cert = dec.decompose(g);
    CertReport rep = verify_certificate(dec.locality(), cert, dec.essential_list());
    if (!rep.pass) throw InternalError("decomposition produced a certificate that fails checks");
    return emit(certificate_to_json(loc, cert), o, out);
}

int cmd_verify_cert(const Opts& o, std::ostream& out) {
    if (o.in.size() < 2) throw SpecError("verify-cert needs --in locality and --in certificate");
    Locality loc = locality_from(o);
    Certificate cert = parse_certificate(load_json_file(o.in[1]), loc);
    CertReport rep = verify_certificate(loc, cert, essentials(loc));
    Json j;
    j["pass"] = rep.pass;
    Json f = Json::array();
    for (const std::string& s : rep.failures) f.push_back(s);
    j["failures"] = std::move(f);
    return emit(j, o, out);
}

int cmd_transporter_info(const Opts& o, std::ostream& out) {
    Locality loc = locality_from(o);
    TransporterCat t = build_transporter(loc);
    TransporterCat te = t_essential_subcategory(t);
    Json j;
    Json objs = Json::array();
    for (int i = 0; i < (int)t.objects.size(); i++) {
        Json e;
        e["id"] = i;
        e["order"] = t.objects[i].order;
        e["generators"] = generator_labels(t.objects[i]);
        objs.push_back(std::move(e));
    }
    j["objects"] = std::move(objs);
    long long count = 0;
    for (const auto& row : t.hom)
        for (const Bits& b : row) count += b.count();
    j["morphism_count"] = count;
    Json ess = Json::array();
    for (const Subgroup& p : te.objects) ess.push_back(t.object_index(p.members));
    j["essential_object_ids"] = std::move(ess);
    return emit(j, o, out);
}

int cmd_limit(const Opts& o, std::ostream& out) {
    Locality loc = locality_from(o);
    TransporterCat t = build_transporter(loc);
    FunctorPres f;
    if (o.functor_name.empty()) {
        if (o.in.size() < 2)
            throw SpecError("limit needs a built-in functor name or an --in functor file");
        f = parse_functor(load_json_file(o.in[1]), t);
        validate_functor(f);
    } else if (o.functor_name == "fixed-points") {
        f = fixed_point_functor(t, module_from(o, 1, t.ambient, loc.p));
    } else if (o.functor_name == "h0" || o.functor_name == "h1" || o.functor_name == "h2") {
        int n = o.functor_name[1] - '0';
        f = cohomology_functor(t, module_from(o, 1, t.ambient, loc.p), n);
    } else {
        throw SpecError("unknown functor name \"" + o.functor_name +
                        "\" (built-ins: fixed-points, h0, h1, h2)");
    }
    FunctorPres fe = restrict_functor(f, t_essential_subcategory(t));
    AbPres lim_te = inverse_limit(fe);
    Json j;
    if (o.essential_only) {
        j["invariant_factors"] = orders_to_json(lim_te);
        return emit(j, o, out);
    }
    AbPres lim_t = inverse_limit(f);
    j["lim_T"] = orders_to_json(lim_t);
    j["lim_Te"] = orders_to_json(lim_te);
    j["equal"] = lim_t.orders == lim_te.orders;
    return emit(j, o, out);
}

int cmd_cohomology(const Opts& o, std::ostream& out) {
    Locality loc = locality_from(o);
    if (o.degree < 0) throw SpecError("cohomology needs --degree");
    GModule m = module_from(o, 1, loc.ambient, loc.p);
    CEReport r = check_cartan_eilenberg(loc.ambient, loc.p, m, o.degree);
    Json j;
    j["H"] = orders_to_json(r.h);
    j["lim_T"] = orders_to_json(r.lim_t);
    j["lim_Te"] = orders_to_json(r.lim_te);
    j["equal"] = r.equal;
    return emit(j, o, out);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite locality toolkit"};
    app.require_subcommand(1);
    Opts o;
    int rc = 0;

    CLI::App* grp = app.add_subcommand("group", "group inspection");
    grp->require_subcommand(1);
    CLI::App* grp_info = grp->add_subcommand("info", "print order, labels, and basic facts");
    add_common(grp_info, o);
    grp_info->callback([&] { rc = cmd_group_info(o, out); });

    CLI::App* locsub = app.add_subcommand("locality", "build or verify a locality");
    locsub->require_subcommand(1);
    CLI::App* loc_build = locsub->add_subcommand("build", "build and summarize");
    add_common(loc_build, o);
    loc_build->callback([&] { rc = cmd_locality_build(o, out); });
    CLI::App* loc_verify = locsub->add_subcommand("verify", "re-check the axioms from the table");
    add_common(loc_verify, o);
    loc_verify->callback([&] { rc = cmd_locality_verify(o, out); });

    CLI::App* ess = app.add_subcommand("essentials", "list the essential subgroups");
    add_common(ess, o);
    ess->callback([&] { rc = cmd_essentials(o, out); });

    CLI::App* dec = app.add_subcommand("decompose", "certify an element through essential normalizers");
    add_common(dec, o);
    dec->add_option("element", o.element, "element label, e.g. \"(1 2 3)\"")->required();
    dec->callback([&] { rc = cmd_decompose(o, out); });

    CLI::App* vc = app.add_subcommand("verify-cert", "re-check a decomposition certificate");
    add_common(vc, o);
    vc->callback([&] { rc = cmd_verify_cert(o, out); });

    CLI::App* tr = app.add_subcommand("transporter", "transporter category inspection");
    tr->require_subcommand(1);
    CLI::App* tr_info = tr->add_subcommand("info", "objects, morphism count, essential objects");
    add_common(tr_info, o);
    tr_info->callback([&] { rc = cmd_transporter_info(o, out); });

    CLI::App* lim = app.add_subcommand("limit", "inverse limit of a functor on the transporter category");
    add_common(lim, o);
    lim->add_option("functor", o.functor_name, "fixed-points | h0 | h1 | h2 (omit with an --in functor file)");
    lim->add_flag("--essential-only", o.essential_only, "compute only the essential-subcategory limit");
    lim->callback([&] { rc = cmd_limit(o, out); });

    CLI::App* coh = app.add_subcommand("cohomology", "compare group cohomology with both limits");
    add_common(coh, o);
    coh->callback([&] { rc = cmd_cohomology(o, out); });

    std::vector<const char*> argv;
    argv.push_back("loctool");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
        return rc;
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        Json j;
        j["error"] = 2;
        j["detail"] = std::string("usage: ") + e.what();
        err << j.dump(2) << "\n";
        return 2;
    } catch (const Error& e) {
        Json j;
        j["error"] = e.exit_code;
        j["detail"] = e.what();
        err << j.dump(2) << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = 1;
        j["detail"] = e.what();
        err << j.dump(2) << "\n";
        return 1;
    }
}

} // namespace loc
