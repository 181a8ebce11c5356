#pragma once

#include <optional>
#include <string>

#include "engeltori/braid.hpp"
#include "engeltori/chain_complex.hpp"
#include "engeltori/front.hpp"
#include "engeltori/torus.hpp"

// JSON interchange. Parsers take JSON text and throw InvalidInputError with a
// message naming the offending field; serializers emit the same formats, so
// every emitted object can be fed back in. Formats:
//
//   braid         {"strands": n, "word": [1, -1, 2, ...]}
//   front         {"events": [{"kind": "L"|"R"|"X", "pos": p}, ...]}
//   chain complex {"dims": [n0, ...], "boundaries": [[[...], ...], ...]}
//                 boundaries[i] = matrix of d_{i+1} with dims[i] rows
//   graded group  {"groups": [{"free_rank": r, "torsion": [d1, ...]}, ...]}
//   class         {"basis": "alpha_beta"|"s1_mu_k", "coords": [...]}
//
// Integers are JSON numbers whenever they fit in 64 bits and decimal strings
// otherwise; parsers accept both spellings.
namespace engeltori::io {

knots::BraidWord parse_braid(const std::string& text);
std::string braid_to_json(const knots::BraidWord& b);

knots::FrontWord parse_front(const std::string& text);
std::string front_to_json(const knots::FrontWord& f);

// Either a braid or a front, detected by the top-level key.
struct KnotInput {
    std::optional<knots::BraidWord> braid;
    std::optional<knots::FrontWord> front;
};
KnotInput parse_knot(const std::string& text);

homology::ChainComplex parse_chain_complex(const std::string& text);
std::string chain_complex_to_json(const homology::ChainComplex& c);

homology::GradedGroup parse_graded_group(const std::string& text);
std::string graded_group_to_json(const homology::GradedGroup& g);
std::string fg_ab_group_to_json(const homology::FgAbGroup& g);

std::string hom_class_to_json(const tori::HomClass& c);
std::string verdict_to_json(const tori::Verdict& v);
std::string complement_group_to_json(const tori::ComplementGroup& g);
std::string family_report_to_json(const tori::TheoremFamilyReport& r);

// Scenario manifest consumed by the torus-level commands:
//   {"kind": "transverse"|"legendrian", "profile": <braid|front>,
//    "ambient": {"N": <graded group>}, "stabilizations": m,
//    "nullhomologous": bool}
// ambient is only meaningful (and defaults to the 3-sphere) for legendrian
// scenarios; stabilizations defaults to 0, nullhomologous to true.
struct ScenarioManifest {
    std::string kind;
    std::optional<knots::BraidWord> braid;
    std::optional<knots::FrontWord> front;
    std::optional<homology::GradedGroup> ambient;
    int stabilizations = 0;
    bool nullhomologous = true;
};
ScenarioManifest parse_manifest(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace engeltori::io
