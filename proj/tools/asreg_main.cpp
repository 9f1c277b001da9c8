#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asreg/json_io.hpp"

using namespace asreg;

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    return parts;
}

ProjPoint parse_point(const std::string& csv) {
    std::vector<std::string> parts = split_commas(csv);
    if (parts.size() != 3) {
        throw InvalidParameters("a point needs exactly 3 comma-separated coordinates");
    }
    return ProjPoint(FieldElem::parse(parts[0]), FieldElem::parse(parts[1]),
                     FieldElem::parse(parts[2]));
}

// Inputs for one descriptor, either inline flags or a JSON blob.
struct DescriptorFlags {
    std::string descriptor;
    std::string type;
    std::string params;
    std::string point;
    long i = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--descriptor", descriptor, "full JSON descriptor");
        cmd->add_option("--type", type, "table row tag (S1, Tp, ...) or EC");
        cmd->add_option("--params", params, "comma-separated row parameters");
        cmd->add_option("--point", point, "comma-separated EC point coordinates");
        cmd->add_option("--i", i, "EC twisting exponent");
    }

    Descriptor build() const {
        if (!descriptor.empty()) return parse_descriptor(descriptor);
        if (type.empty()) throw InvalidParameters("provide --type or --descriptor");
        if (type == "EC") {
            if (point.empty()) throw InvalidParameters("type EC needs --point a,b,c");
            return EcDescriptor(parse_point(point), i);
        }
        TypedAlgebra t{tag_from_string(type), {}};
        if (!params.empty()) {
            for (const std::string& s : split_commas(params)) {
                t.params.push_back(FieldElem::parse(s));
            }
        }
        t.validate();
        return t;
    }
};

RelationSet relations_of(const Descriptor& d) {
    if (const TypedAlgebra* t = std::get_if<TypedAlgebra>(&d)) return construct(*t);
    return construct_ec(std::get<EcDescriptor>(d));
}

GeometricPair pair_of(const Descriptor& d) {
    if (const TypedAlgebra* t = std::get_if<TypedAlgebra>(&d)) return pair_for_row(*t);
    return pair_for_ec(std::get<EcDescriptor>(d));
}

// Every descriptor JSON the CLI parses for iso/morita; mixed table/EC pairs
// are decided without computation (an EC point scheme is a whole cubic curve,
// never one of the table supports).
Json run_iso(const Descriptor& a, const Descriptor& b) {
    Json out = Json::object();
    if (const TypedAlgebra* ta = std::get_if<TypedAlgebra>(&a)) {
        const TypedAlgebra* tb = std::get_if<TypedAlgebra>(&b);
        out["isomorphic"] = tb != nullptr && iso_decide(*ta, *tb);
        return out;
    }
    const EcDescriptor* eb = std::get_if<EcDescriptor>(&b);
    if (eb == nullptr) {
        out["isomorphic"] = false;
        return out;
    }
    std::optional<IsoWitness> w = iso_ec(std::get<EcDescriptor>(a), *eb);
    out["isomorphic"] = w.has_value();
    if (w) out["witness"] = Json{{"l", w->l}, {"r", point_to_json(w->r)}};
    return out;
}

Json run_morita(const Descriptor& a, const Descriptor& b) {
    bool eq = false;
    if (const TypedAlgebra* ta = std::get_if<TypedAlgebra>(&a)) {
        const TypedAlgebra* tb = std::get_if<TypedAlgebra>(&b);
        eq = tb != nullptr && morita_decide(*ta, *tb);
    } else if (const EcDescriptor* eb = std::get_if<EcDescriptor>(&b)) {
        eq = morita_ec(std::get<EcDescriptor>(a), *eb);
    }
    return Json{{"equivalent", eq}};
}

// Points with all coordinates nonzero determine their curve; torsion points
// lie on every E_lambda, so a torsion-only call without --lambda uses the
// canonical representative lambda = 0.
HesseCurve resolve_curve(const std::string& lambda_text,
                         const std::vector<ProjPoint>& points) {
    if (!lambda_text.empty()) return HesseCurve(FieldElem::parse(lambda_text));
    std::optional<FieldElem> derived;
    for (const ProjPoint& p : points) {
        if (p[0].is_zero() || p[1].is_zero() || p[2].is_zero()) continue;
        FieldElem lam = lambda_of(p);
        if (derived && *derived != lam) {
            throw CurveMismatch("points lie on different curves; pass --lambda to pick one");
        }
        derived = lam;
    }
    return HesseCurve(derived ? *derived : FieldElem(0));
}

Json matrix_to_json(const Mat3& m) {
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of 3-dimensional quadratic AS-regular algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output_mode = "json";
    app.add_option("--output", output_mode, "json (compact, default) or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    CLI::App* cmd_construct = app.add_subcommand("construct", "emit a relation set");
    DescriptorFlags construct_flags;
    construct_flags.attach(cmd_construct);

    CLI::App* cmd_iso = app.add_subcommand("iso", "graded-isomorphism test");
    CLI::App* cmd_morita = app.add_subcommand("morita", "graded Morita equivalence test");
    std::string a_text, b_text;
    for (CLI::App* cmd : {cmd_iso, cmd_morita}) {
        cmd->add_option("--a", a_text, "first descriptor (JSON)")->required();
        cmd->add_option("--b", b_text, "second descriptor (JSON)")->required();
    }

    CLI::App* cmd_nf = app.add_subcommand("normal-form", "Morita normal form of a table row");
    CLI::App* cmd_ps = app.add_subcommand("point-scheme", "determinant cubic of the relations");
    CLI::App* cmd_g2 = app.add_subcommand("verify-g2", "recompute relations from the point scheme");
    CLI::App* cmd_g1 = app.add_subcommand("verify-g1", "pointwise graph/rank report");
    DescriptorFlags nf_flags, ps_flags, g2_flags, g1_flags;
    nf_flags.attach(cmd_nf);
    ps_flags.attach(cmd_ps);
    g2_flags.attach(cmd_g2);
    g1_flags.attach(cmd_g1);
    int sample_count = 12;
    for (CLI::App* cmd : {cmd_g2, cmd_g1}) {
        cmd->add_option("--n", sample_count, "number of sampled points");
    }

    CLI::App* cmd_curve = app.add_subcommand("curve", "Hesse-curve group computations");
    cmd_curve->require_subcommand(1);
    std::string p_text, q_text, lambda_text;
    long scalar_n = 0;
    int fset_i = 0;
    bool orbit_morita = false;
    std::string orbit_text;
    CLI::App* cv_add = cmd_curve->add_subcommand("add", "p + q");
    CLI::App* cv_neg = cmd_curve->add_subcommand("neg", "-p");
    CLI::App* cv_smul = cmd_curve->add_subcommand("smul", "n * p");
    CLI::App* cv_j = cmd_curve->add_subcommand("j", "j-invariant");
    CLI::App* cv_t3 = cmd_curve->add_subcommand("torsion3", "the nine 3-torsion points");
    CLI::App* cv_ist3 = cmd_curve->add_subcommand("is-torsion3", "3-torsion membership");
    CLI::App* cv_tau = cmd_curve->add_subcommand("tau", "generator matrix and group order");
    CLI::App* cv_fset = cmd_curve->add_subcommand("f-set", "translation set F_{lambda,i}");
    CLI::App* cv_orbit = cmd_curve->add_subcommand("orbit", "iso/Morita orbit of a descriptor");
    for (CLI::App* cmd : {cv_add, cv_neg, cv_smul, cv_j, cv_ist3}) {
        cmd->add_option("--p", p_text, "point a,b,c");
    }
    cv_add->get_option("--p")->required();
    cv_neg->get_option("--p")->required();
    cv_smul->get_option("--p")->required();
    cv_ist3->get_option("--p")->required();
    cv_add->add_option("--q", q_text, "point a,b,c")->required();
    cv_smul->add_option("--n", scalar_n, "integer multiplier")->required();
    for (CLI::App* cmd : {cv_add, cv_neg, cv_smul, cv_j, cv_ist3, cv_tau, cv_fset}) {
        cmd->add_option("--lambda", lambda_text, "curve parameter (field element)");
    }
    cv_tau->get_option("--lambda")->required();
    cv_fset->get_option("--lambda")->required();
    cv_fset->add_option("--i", fset_i, "generator exponent");
    cv_orbit->add_option("--a", orbit_text, "EC descriptor (JSON)")->required();
    cv_orbit->add_flag("--morita", orbit_morita, "use the full E[3] translation set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        InvalidParameters err(e.what());
        std::cout << error_json(err).dump() << "\n";
        return 1;
    }

    auto emit = [&](const Json& j) {
        std::cout << (output_mode == "pretty" ? j.dump(2) : j.dump()) << "\n";
    };

    try {
        Json out;
        if (app.got_subcommand(cmd_construct)) {
            out = relations_to_json(relations_of(construct_flags.build()));
        } else if (app.got_subcommand(cmd_iso)) {
            out = run_iso(parse_descriptor(a_text), parse_descriptor(b_text));
        } else if (app.got_subcommand(cmd_morita)) {
            out = run_morita(parse_descriptor(a_text), parse_descriptor(b_text));
        } else if (app.got_subcommand(cmd_nf)) {
            Descriptor d = nf_flags.build();
            const TypedAlgebra* t = std::get_if<TypedAlgebra>(&d);
            if (t == nullptr) {
                throw InvalidParameters("EC descriptors have no table normal form");
            }
            out = descriptor_to_json(morita_normal_form(*t));
        } else if (app.got_subcommand(cmd_ps)) {
            out = cubic_to_json(point_scheme_det(relations_of(ps_flags.build())));
        } else if (app.got_subcommand(cmd_g2)) {
            Descriptor d = g2_flags.build();
            RelationSet got = g2_relations(pair_of(d), sample_count);
            out = Json{{"match", relations_equal(got, relations_of(d))},
                       {"relations", relations_to_json(got)}};
        } else if (app.got_subcommand(cmd_g1)) {
            Descriptor d = g1_flags.build();
            out = g1_report_to_json(g1_check(relations_of(d), pair_of(d), sample_count));
        } else if (app.got_subcommand(cmd_curve)) {
            if (cmd_curve->got_subcommand(cv_add)) {
                ProjPoint p = parse_point(p_text), q = parse_point(q_text);
                HesseCurve c = resolve_curve(lambda_text, {p, q});
                out = point_to_json(add(CurvePoint(c, p), CurvePoint(c, q)).point());
            } else if (cmd_curve->got_subcommand(cv_neg)) {
                ProjPoint p = parse_point(p_text);
                HesseCurve c = resolve_curve(lambda_text, {p});
                out = point_to_json(neg(CurvePoint(c, p)).point());
            } else if (cmd_curve->got_subcommand(cv_smul)) {
                ProjPoint p = parse_point(p_text);
                HesseCurve c = resolve_curve(lambda_text, {p});
                out = point_to_json(smul(scalar_n, CurvePoint(c, p)).point());
            } else if (cmd_curve->got_subcommand(cv_j)) {
                FieldElem lam;
                if (!lambda_text.empty()) {
                    lam = FieldElem::parse(lambda_text);
                } else if (!p_text.empty()) {
                    lam = lambda_of(parse_point(p_text));
                } else {
                    throw InvalidParameters("j needs --lambda or --p");
                }
                out = Json{{"lambda", lam.str()}, {"j", j_invariant(lam).str()}};
            } else if (cmd_curve->got_subcommand(cv_t3)) {
                out = Json::array();
                for (const ProjPoint& p : torsion3()) out.push_back(point_to_json(p));
            } else if (cmd_curve->got_subcommand(cv_ist3)) {
                ProjPoint p = parse_point(p_text);
                HesseCurve c = resolve_curve(lambda_text, {p});
                out = Json{{"is_torsion3", is_torsion3(CurvePoint(c, p))}};
            } else if (cmd_curve->got_subcommand(cv_tau)) {
                HesseCurve c(FieldElem::parse(lambda_text));
                out = Json{{"order", c.d()}, {"matrix", matrix_to_json(c.tau())}};
            } else if (cmd_curve->got_subcommand(cv_fset)) {
                out = Json::array();
                for (const ProjPoint& p : f_set(FieldElem::parse(lambda_text), fset_i)) {
                    out.push_back(point_to_json(p));
                }
            } else {
                Descriptor d = parse_descriptor(orbit_text);
                const EcDescriptor* e = std::get_if<EcDescriptor>(&d);
                if (e == nullptr) throw InvalidParameters("orbit needs an EC descriptor");
                out = Json::array();
                for (const ProjPoint& p : ec_orbit(*e, orbit_morita)) {
                    out.push_back(point_to_json(p));
                }
            }
        }
        emit(out);
        return 0;
    } catch (const Error& e) {
        emit(error_json(e));
        return 1;
    } catch (const std::exception& e) {
        emit(Json{{"error", {{"code", "Internal"}, {"message", e.what()}}}});
        return 2;
    }
}
