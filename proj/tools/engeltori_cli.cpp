// Command-line front end: knot invariants, stabilizations, homology, torus
// classes, scenario verification, SVG rendering. Output is human text by
// default and machine JSON with --json; exit codes are 0 (success),
// 1 (validation error), 2 (hypothesis violation).
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "engeltori/catalog.hpp"
#include "engeltori/chain_complex.hpp"
#include "engeltori/errors.hpp"
#include "engeltori/invariants.hpp"
#include "engeltori/json_io.hpp"
#include "engeltori/svg_render.hpp"
#include "engeltori/torus.hpp"
#include "json.hpp"

namespace et = engeltori;
using et::homology::ChainComplex;
using et::homology::FgAbGroup;
using et::homology::GradedGroup;
using nlohmann::json;

namespace {

std::string group_text(const FgAbGroup& g) {
    std::vector<std::string> parts;
    if (g.free_rank == 1)
        parts.push_back("Z");
    else if (g.free_rank > 1)
        parts.push_back("Z^" + std::to_string(g.free_rank));
    for (const auto& d : g.invariant_factors) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

GradedGroup sphere3_homology() {
    GradedGroup g;
    g.groups = {FgAbGroup::free_group(1), {}, {}, FgAbGroup::free_group(1)};
    return g;
}

// Operand of the homology commands: a chain complex (file or catalog:<id>) or
// an already-computed graded group (file). The graded group is always filled.
struct HomologyOperand {
    std::optional<ChainComplex> complex;
    GradedGroup groups;
    std::string label;
};

HomologyOperand load_operand(const std::string& arg) {
    HomologyOperand op;
    op.label = arg;
    if (arg.rfind("catalog:", 0) == 0) {
        op.complex = et::catalog::get(arg.substr(8)).complex;
        op.groups = et::homology::homology(*op.complex);
        return op;
    }
    std::string text = et::io::read_file(arg);
    try {
        op.complex = et::io::parse_chain_complex(text);
        op.groups = et::homology::homology(*op.complex);
        return op;
    } catch (const et::InvalidInputError&) {
    }
    try {
        op.groups = et::io::parse_graded_group(text);
        return op;
    } catch (const et::InvalidInputError&) {
    }
    throw et::InvalidInputError(arg + ": neither a chain complex nor a graded group");
}

void print_graded(const GradedGroup& g, const std::string& symbol) {
    for (std::size_t k = 0; k < g.groups.size(); ++k)
        std::cout << symbol << "_" << k << " = " << group_text(g.groups[k]) << "\n";
}

et::io::ScenarioManifest load_manifest(const std::string& path, const std::string& kind) {
    et::io::ScenarioManifest m = et::io::parse_manifest(et::io::read_file(path));
    if (!kind.empty() && m.kind != kind)
        throw et::InvalidInputError(path + ": manifest kind is '" + m.kind +
                                    "', this command needs '" + kind + "'");
    return m;
}

struct TorusClass {
    et::tori::HomClass cls;
    long long invariant = 0;  // sl or tb
    const char* invariant_name = "sl";
};

TorusClass class_of_manifest(const et::io::ScenarioManifest& m) {
    TorusClass out;
    if (m.kind == "transverse") {
        if (!m.braid)
            throw et::InvalidInputError("a transverse manifest needs a braid profile");
        auto t = et::tori::build_product_torus("core", *m.braid);
        t = et::tori::stabilize_torus(std::move(t), m.stabilizations);
        out.cls = et::tori::self_linking_class(t);
        out.invariant = et::knots::sl_of_braid(t.profile);
        out.invariant_name = "sl";
    } else {
        if (!m.front)
            throw et::InvalidInputError("a legendrian manifest needs a front profile");
        et::knots::FrontWord f = *m.front;
        for (int i = 0; i < m.stabilizations; ++i)
            f = et::knots::legendrian_stabilize(f, -1);
        et::tori::LegendrianTorusModel l{f, m.ambient ? *m.ambient : sphere3_homology(),
                                         m.nullhomologous, m.stabilizations};
        out.cls = et::tori::tb_class(l);
        out.invariant = et::knots::tb_of_front(f);
        out.invariant_name = "tb";
    }
    return out;
}

std::string class_text(const et::tori::HomClass& c) {
    if (c.basis == et::tori::BasisKind::AlphaBeta)
        return c.coords[0].str() + "*alpha + " + c.coords[1].str() + "*beta";
    return c.coords[0].str() + "*mu";
}

void print_family(const et::tori::TheoremFamilyReport& r) {
    const char* inv = r.kind == "transverse" ? "sl" : "tb";
    std::cout << r.kind << " family, " << r.members.size() << " members\n\n";
    std::cout << std::setw(4) << "n" << std::setw(8) << inv << std::setw(14)
              << "divisibility" << "  class\n";
    for (const auto& m : r.members)
        std::cout << std::setw(4) << m.index << std::setw(8) << m.knot_invariant
                  << std::setw(14) << m.divisibility.str() << "  " << class_text(m.cls)
                  << "\n";
    std::cout << "\npairwise verdicts:\n";
    for (const auto& p : r.pairs) {
        std::cout << "  (" << p.i << "," << p.j << "): ";
        if (p.verdict.outcome == et::tori::Outcome::Distinct)
            std::cout << "Distinct";
        else
            std::cout << "Inconclusive";
        if (p.verdict.divisibilities)
            std::cout << "  (divisibilities " << p.verdict.divisibilities->first.str()
                      << " vs " << p.verdict.divisibilities->second.str() << ")";
        std::cout << "\n";
    }
    std::cout << "\nall pairs distinct: " << (r.all_distinct ? "yes" : "no")
              << "\nsmoothly isotopic:  " << (r.smoothly_isotopic ? "yes" : "no")
              << "\ninvariant ladder:   ";
    for (std::size_t i = 0; i < r.implemented_ladder.size(); ++i)
        std::cout << (i ? ", " : "") << r.implemented_ladder[i];
    std::cout << "\nunit-step ladder:   ";
    for (std::size_t i = 0; i < r.unit_step_ladder.size(); ++i)
        std::cout << (i ? ", " : "") << r.unit_step_ladder[i];
    std::cout << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"transverse/Legendrian torus invariant calculus"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON instead of text");
    int exit_code = 0;

    // ---- knot ----
    auto* knot = app.add_subcommand("knot", "classical invariants of knot presentations");
    knot->require_subcommand(1);

    std::string inv_file;
    auto* inv = knot->add_subcommand("invariants",
                                     "sl of a braid closure / tb, rot of a front");
    inv->add_option("file", inv_file, "knot JSON (braid or front)")->required();
    inv->callback([&] {
        et::io::KnotInput in = et::io::parse_knot(et::io::read_file(inv_file));
        if (in.braid) {
            auto ci = et::knots::braid_invariants(*in.braid);
            if (as_json)
                std::cout << json{{"kind", "braid"},
                                  {"sl", ci.sl},
                                  {"components", ci.components}}
                                 .dump()
                          << "\n";
            else
                std::cout << "sl = " << ci.sl << "\n";
        } else {
            auto ci = et::knots::front_invariants(*in.front);
            long long slp = et::knots::transverse_pushoff(ci.tb, ci.rot, 1);
            long long slm = et::knots::transverse_pushoff(ci.tb, ci.rot, -1);
            if (as_json)
                std::cout << json{{"kind", "front"},
                                  {"tb", ci.tb},
                                  {"rot", ci.rot},
                                  {"sl_positive_pushoff", slp},
                                  {"sl_negative_pushoff", slm}}
                                 .dump()
                          << "\n";
            else
                std::cout << "tb  = " << ci.tb << "\nrot = " << ci.rot
                          << "\nsl(K+) = " << slp << "\nsl(K-) = " << slm << "\n";
        }
    });

    std::string stab_file;
    int stab_sign = -1, stab_count = 1;
    auto* stab = knot->add_subcommand("stabilize", "stabilize a braid (Markov) or front (zigzag)");
    stab->add_option("file", stab_file, "knot JSON (braid or front)")->required();
    stab->add_option("--sign", stab_sign, "stabilization sign (default -1)")
        ->check(CLI::IsMember({-1, 1}));
    stab->add_option("--count", stab_count, "how many stabilizations (default 1)")
        ->check(CLI::NonNegativeNumber);
    stab->callback([&] {
        et::io::KnotInput in = et::io::parse_knot(et::io::read_file(stab_file));
        if (in.braid) {
            auto b = *in.braid;
            long long before = et::knots::sl_of_braid(b);
            for (int i = 0; i < stab_count; ++i) b = et::knots::markov_stabilize(b, stab_sign);
            if (as_json)
                std::cout << et::io::braid_to_json(b) << "\n";
            else
                std::cout << "sl: " << before << " -> " << et::knots::sl_of_braid(b) << "\n"
                          << et::io::braid_to_json(b) << "\n";
        } else {
            auto f = *in.front;
            long long tb0 = et::knots::tb_of_front(f), rot0 = et::knots::rot_of_front(f);
            for (int i = 0; i < stab_count; ++i) f = et::knots::legendrian_stabilize(f, stab_sign);
            if (as_json)
                std::cout << et::io::front_to_json(f) << "\n";
            else
                std::cout << "tb:  " << tb0 << " -> " << et::knots::tb_of_front(f) << "\n"
                          << "rot: " << rot0 << " -> " << et::knots::rot_of_front(f) << "\n"
                          << et::io::front_to_json(f) << "\n";
        }
    });

    // ---- homology ----
    auto* hom = app.add_subcommand("homology",
                                   "integral homology of chain complexes (file or catalog:<id>)");
    std::string hom_input;
    hom->add_option("input", hom_input, "chain-complex JSON file or catalog:<id>");

    std::string kun_a, kun_b;
    auto* kun = hom->add_subcommand("kunneth", "predicted homology of a product");
    kun->add_option("a", kun_a, "complex file, graded-group file, or catalog:<id>")->required();
    kun->add_option("b", kun_b, "complex file, graded-group file, or catalog:<id>")->required();
    kun->callback([&] {
        HomologyOperand a = load_operand(kun_a), b = load_operand(kun_b);
        GradedGroup predicted = et::homology::kunneth_predict(a.groups, b.groups);
        std::optional<GradedGroup> actual;
        if (a.complex && b.complex)
            actual = et::homology::homology(et::homology::tensor_product(*a.complex, *b.complex));
        if (as_json) {
            json out{{"predicted", json::parse(et::io::graded_group_to_json(predicted))}};
            out["tensor_homology"] =
                actual ? json::parse(et::io::graded_group_to_json(*actual)) : json(nullptr);
            out["matches"] = actual ? json(predicted == *actual) : json(nullptr);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "predicted product homology:\n";
            print_graded(predicted, "H");
            if (actual) {
                std::cout << "tensor-complex homology:\n";
                print_graded(*actual, "H");
                std::cout << "matches: " << (predicted == *actual ? "yes" : "no") << "\n";
            }
        }
        if (actual && !(predicted == *actual)) exit_code = 1;
    });

    std::string alex_input;
    int sphere_dim = 3;
    auto* alex = hom->add_subcommand("alexander", "reduced homology of a sphere complement");
    alex->add_option("input", alex_input, "graded-group file, complex file, or catalog:<id>")
        ->required();
    alex->add_option("--sphere-dim", sphere_dim, "dimension n of the ambient sphere (default 3)")
        ->check(CLI::PositiveNumber);
    alex->callback([&] {
        HomologyOperand k = load_operand(alex_input);
        GradedGroup c = et::homology::alexander_duality(sphere_dim, k.groups);
        if (as_json)
            std::cout << et::io::graded_group_to_json(c) << "\n";
        else {
            std::cout << "reduced homology of S^" << sphere_dim << " minus " << k.label << ":\n";
            print_graded(c, "H~");
        }
    });

    hom->callback([&] {
        if (!hom->get_subcommands().empty()) return;
        if (hom_input.empty())
            throw et::InvalidInputError("homology: an input (file or catalog:<id>) is required");
        HomologyOperand op = load_operand(hom_input);
        if (as_json)
            std::cout << et::io::graded_group_to_json(op.groups) << "\n";
        else
            print_graded(op.groups, "H");
    });

    // ---- torus ----
    auto* torus = app.add_subcommand("torus", "complement classes of product tori");
    torus->require_subcommand(1);

    std::string slc_file;
    auto* slc = torus->add_subcommand("sl-class", "self-linking class of a transverse torus");
    slc->add_option("manifest", slc_file, "transverse scenario manifest JSON")->required();
    slc->callback([&] {
        auto m = load_manifest(slc_file, "transverse");
        TorusClass tc = class_of_manifest(m);
        if (as_json)
            std::cout << json{{"class", json::parse(et::io::hom_class_to_json(tc.cls))},
                              {"sl", tc.invariant},
                              {"divisibility",
                               json(et::tori::class_divisibility(tc.cls).str())}}
                             .dump()
                      << "\n";
        else
            std::cout << "class = " << class_text(tc.cls) << "\nsl = " << tc.invariant
                      << "\ndivisibility = "
                      << et::tori::class_divisibility(tc.cls).str() << "\n";
    });

    std::string tbc_file;
    auto* tbc = torus->add_subcommand("tb-class", "Thurston-Bennequin class of a Legendrian torus");
    tbc->add_option("manifest", tbc_file, "legendrian scenario manifest JSON")->required();
    tbc->callback([&] {
        auto m = load_manifest(tbc_file, "legendrian");
        TorusClass tc = class_of_manifest(m);
        if (as_json)
            std::cout << json{{"class", json::parse(et::io::hom_class_to_json(tc.cls))},
                              {"tb", tc.invariant},
                              {"divisibility",
                               json(et::tori::class_divisibility(tc.cls).str())}}
                             .dump()
                      << "\n";
        else
            std::cout << "class = " << class_text(tc.cls) << "\ntb = " << tc.invariant
                      << "\ndivisibility = "
                      << et::tori::class_divisibility(tc.cls).str() << "\n";
    });

    std::string dist_a, dist_b;
    auto* dist = torus->add_subcommand("distinguish", "compare two torus scenarios");
    dist->add_option("m1", dist_a, "first scenario manifest")->required();
    dist->add_option("m2", dist_b, "second scenario manifest")->required();
    dist->callback([&] {
        auto m1 = et::io::parse_manifest(et::io::read_file(dist_a));
        auto m2 = et::io::parse_manifest(et::io::read_file(dist_b));
        if (m1.kind != m2.kind)
            throw et::BasisMismatchError("cannot compare a " + m1.kind + " torus with a " +
                                         m2.kind + " torus");
        TorusClass c1 = class_of_manifest(m1), c2 = class_of_manifest(m2);
        et::tori::Verdict v = et::tori::distinguish(c1.cls, c2.cls);
        if (as_json)
            std::cout << et::io::verdict_to_json(v) << "\n";
        else {
            std::cout << (v.outcome == et::tori::Outcome::Distinct
                              ? "Distinct: the tori are not isotopic"
                              : "Inconclusive: the divisibility invariant does not separate them")
                      << "\n";
            if (v.divisibilities)
                std::cout << "divisibilities: " << v.divisibilities->first.str() << " vs "
                          << v.divisibilities->second.str() << "\n";
        }
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a named verification scenario");
    std::string which;
    int verify_count = 5;
    std::string verify_profile;
    verify->add_option("scenario", which, "thm11 | thm12 | lemma42")
        ->required()
        ->check(CLI::IsMember({"thm11", "thm12", "lemma42"}));
    verify->add_option("--count", verify_count, "stabilizations beyond the base (default 5)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--profile", verify_profile,
                       "knot JSON overriding the default unknot base profile");
    verify->callback([&] {
        if (which == "thm11") {
            et::knots::BraidWord base{1, {}};
            if (!verify_profile.empty()) {
                auto in = et::io::parse_knot(et::io::read_file(verify_profile));
                if (!in.braid)
                    throw et::InvalidInputError("thm11 needs a braid profile");
                base = *in.braid;
            }
            auto rep = et::tori::theorem_family(base, verify_count);
            if (as_json)
                std::cout << et::io::family_report_to_json(rep) << "\n";
            else
                print_family(rep);
            if (!rep.all_distinct) exit_code = 1;
        } else if (which == "thm12") {
            et::knots::FrontWord base{{{et::knots::EventKind::LeftCusp, 0},
                                       {et::knots::EventKind::RightCusp, 0}}};
            if (!verify_profile.empty()) {
                auto in = et::io::parse_knot(et::io::read_file(verify_profile));
                if (!in.front)
                    throw et::InvalidInputError("thm12 needs a front profile");
                base = *in.front;
            }
            auto rep = et::tori::theorem_family(base, sphere3_homology(), verify_count, true);
            if (as_json)
                std::cout << et::io::family_report_to_json(rep) << "\n";
            else
                print_family(rep);
            if (!rep.all_distinct) exit_code = 1;
        } else {  // lemma42: product-complement degree-2 homology checks
            struct Case {
                std::string ambient, knot;
                GradedGroup ambient_h;
                ChainComplex complement;
            };
            ChainComplex circle = et::catalog::get("circle").complex;
            std::vector<Case> cases;
            cases.push_back({"S^3", "unknot", sphere3_homology(),
                             et::catalog::wirtinger_spine({1, {}})});
            cases.push_back({"S^3", "trefoil", sphere3_homology(),
                             et::catalog::wirtinger_spine({2, {1, 1, 1}})});
            cases.push_back({"S^3", "cinquefoil", sphere3_homology(),
                             et::catalog::wirtinger_spine({2, {1, 1, 1, 1, 1}})});
            cases.push_back({"S^1 x S^2", "local unknot",
                             et::homology::homology(et::catalog::get("s1xs2").complex),
                             et::catalog::get("s1xs2_unknot_complement").complex});
            bool all_match = true;
            json jcases = json::array();
            if (!as_json)
                std::cout << std::setw(12) << "ambient" << std::setw(14) << "knot"
                          << std::setw(12) << "predicted" << std::setw(12) << "computed"
                          << "  match\n";
            for (const Case& c : cases) {
                FgAbGroup predicted = et::tori::complement_h2_product(c.ambient_h).group;
                FgAbGroup computed =
                    et::homology::homology(et::homology::tensor_product(circle, c.complement))
                        .at(2);
                bool match = predicted == computed;
                all_match = all_match && match;
                if (as_json)
                    jcases.push_back(
                        {{"ambient", c.ambient},
                         {"knot", c.knot},
                         {"predicted", json::parse(et::io::fg_ab_group_to_json(predicted))},
                         {"computed", json::parse(et::io::fg_ab_group_to_json(computed))},
                         {"match", match}});
                else
                    std::cout << std::setw(12) << c.ambient << std::setw(14) << c.knot
                              << std::setw(12) << group_text(predicted) << std::setw(12)
                              << group_text(computed) << "  " << (match ? "yes" : "NO")
                              << "\n";
            }
            if (as_json)
                std::cout << json{{"scenario", "lemma42"},
                                  {"cases", jcases},
                                  {"all_match", all_match}}
                                 .dump()
                          << "\n";
            else
                std::cout << "all match: " << (all_match ? "yes" : "no") << "\n";
            if (!all_match) exit_code = 1;
        }
    });

    // ---- render ----
    auto* render = app.add_subcommand("render", "draw diagrams");
    render->require_subcommand(1);
    std::string render_file, svg_out;
    auto* rfront = render->add_subcommand("front", "render a front word as SVG");
    rfront->add_option("file", render_file, "front JSON")->required();
    rfront->add_option("--svg", svg_out, "output path (stdout when omitted)");
    rfront->callback([&] {
        et::io::KnotInput in = et::io::parse_knot(et::io::read_file(render_file));
        if (!in.front) throw et::InvalidInputError("render front needs a front, not a braid");
        std::string svg = et::io::render_front_svg(*in.front);
        if (svg_out.empty()) {
            std::cout << svg;
        } else {
            et::io::write_file(svg_out, svg);
            if (as_json)
                std::cout << json{{"svg_path", svg_out}, {"bytes", svg.size()}}.dump() << "\n";
            else
                std::cout << "wrote " << svg_out << " (" << svg.size() << " bytes)\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const et::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == et::ErrorKind::Hypothesis ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
