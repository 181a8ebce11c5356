#include "engeltori/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "engeltori/errors.hpp"
#include "json.hpp"

namespace engeltori::io {

using homology::Int;
using nlohmann::json;

namespace {

json int_to_json(const Int& a) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (a >= lo && a <= hi) return json(static_cast<long long>(a));
    return json(a.str());
}

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw InvalidInputError(where + ": '" + j.get<std::string>() +
                                    "' is not a decimal integer");
        }
    }
    throw InvalidInputError(where + ": expected an integer or a decimal string");
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInputError("input is not valid JSON");
    return j;
}

const json& field(const json& j, const std::string& name, const std::string& what) {
    if (!j.is_object()) throw InvalidInputError(what + ": expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw InvalidInputError(what + ": missing field '" + name + "'");
    return *it;
}

int int_field(const json& j, const std::string& name, const std::string& what) {
    const json& v = field(j, name, what);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw InvalidInputError(what + ": field '" + name + "' must be an integer");
    return v.get<int>();
}

knots::BraidWord braid_from(const json& j, const std::string& what) {
    knots::BraidWord b;
    b.strands = int_field(j, "strands", what);
    const json& w = field(j, "word", what);
    if (!w.is_array())
        throw InvalidInputError(what + ": field 'word' must be an array of integers");
    for (const json& g : w) {
        if (!g.is_number_integer() && !g.is_number_unsigned())
            throw InvalidInputError(what + ": field 'word' must be an array of integers");
        b.word.push_back(g.get<int>());
    }
    return b;
}

knots::FrontWord front_from(const json& j, const std::string& what) {
    const json& ev = field(j, "events", what);
    if (!ev.is_array())
        throw InvalidInputError(what + ": field 'events' must be an array");
    knots::FrontWord f;
    for (const json& e : ev) {
        const json& k = field(e, "kind", what + ".events");
        if (!k.is_string())
            throw InvalidInputError(what + ": event 'kind' must be \"L\", \"R\" or \"X\"");
        std::string s = k.get<std::string>();
        knots::EventKind kind;
        if (s == "L")
            kind = knots::EventKind::LeftCusp;
        else if (s == "R")
            kind = knots::EventKind::RightCusp;
        else if (s == "X")
            kind = knots::EventKind::Crossing;
        else
            throw InvalidInputError(what + ": event 'kind' must be \"L\", \"R\" or \"X\", got \"" +
                                    s + "\"");
        f.events.push_back({kind, int_field(e, "pos", what + ".events")});
    }
    return f;
}

json braid_json(const knots::BraidWord& b) {
    return json{{"strands", b.strands}, {"word", b.word}};
}

json front_json(const knots::FrontWord& f) {
    json events = json::array();
    for (const knots::FrontEvent& e : f.events) {
        const char* kind = e.kind == knots::EventKind::LeftCusp    ? "L"
                           : e.kind == knots::EventKind::RightCusp ? "R"
                                                                   : "X";
        events.push_back(json{{"kind", kind}, {"pos", e.pos}});
    }
    return json{{"events", events}};
}

homology::FgAbGroup group_from(const json& j, const std::string& what) {
    int free_rank = int_field(j, "free_rank", what);
    if (free_rank < 0) throw InvalidInputError(what + ": 'free_rank' must be nonnegative");
    std::vector<Int> orders;
    if (j.contains("torsion")) {
        const json& t = j["torsion"];
        if (!t.is_array())
            throw InvalidInputError(what + ": field 'torsion' must be an array");
        for (const json& d : t) orders.push_back(int_from_json(d, what + ".torsion"));
    }
    return homology::canonical_form(free_rank, std::move(orders));
}

json group_json(const homology::FgAbGroup& g) {
    json torsion = json::array();
    for (const Int& d : g.invariant_factors) torsion.push_back(int_to_json(d));
    return json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

homology::GradedGroup graded_from(const json& j, const std::string& what) {
    const json& gs = field(j, "groups", what);
    if (!gs.is_array())
        throw InvalidInputError(what + ": field 'groups' must be an array");
    homology::GradedGroup out;
    int k = 0;
    for (const json& g : gs)
        out.groups.push_back(group_from(g, what + ".groups[" + std::to_string(k++) + "]"));
    return out;
}

json graded_json(const homology::GradedGroup& g) {
    json groups = json::array();
    for (const homology::FgAbGroup& gg : g.groups) groups.push_back(group_json(gg));
    return json{{"groups", groups}};
}

const char* basis_name(tori::BasisKind b) {
    return b == tori::BasisKind::AlphaBeta ? "alpha_beta" : "s1_mu_k";
}

json hom_class_json(const tori::HomClass& c) {
    json coords = json::array();
    for (const Int& x : c.coords) coords.push_back(int_to_json(x));
    return json{{"basis", basis_name(c.basis)}, {"coords", coords}};
}

json verdict_json(const tori::Verdict& v) {
    json out{{"outcome", v.outcome == tori::Outcome::Distinct ? "distinct" : "inconclusive"}};
    if (v.divisibilities) {
        out["divisibilities"] =
            json::array({int_to_json(v.divisibilities->first), int_to_json(v.divisibilities->second)});
    } else {
        out["divisibilities"] = nullptr;
    }
    return out;
}

}  // namespace

knots::BraidWord parse_braid(const std::string& text) {
    return braid_from(parse_text(text), "braid");
}

std::string braid_to_json(const knots::BraidWord& b) { return braid_json(b).dump(); }

knots::FrontWord parse_front(const std::string& text) {
    return front_from(parse_text(text), "front");
}

std::string front_to_json(const knots::FrontWord& f) { return front_json(f).dump(); }

KnotInput parse_knot(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw InvalidInputError("knot: expected a JSON object");
    KnotInput in;
    if (j.contains("events"))
        in.front = front_from(j, "front");
    else if (j.contains("strands") || j.contains("word"))
        in.braid = braid_from(j, "braid");
    else
        throw InvalidInputError(
            "knot: expected a braid ('strands', 'word') or a front ('events')");
    return in;
}

homology::ChainComplex parse_chain_complex(const std::string& text) {
    json j = parse_text(text);
    homology::ChainComplex c;
    const json& dims = field(j, "dims", "complex");
    if (!dims.is_array() || dims.empty())
        throw InvalidInputError("complex: field 'dims' must be a nonempty array");
    for (const json& d : dims) {
        if (!d.is_number_integer() && !d.is_number_unsigned())
            throw InvalidInputError("complex: field 'dims' must hold integers");
        int n = d.get<int>();
        if (n < 0) throw InvalidInputError("complex: dimensions must be nonnegative");
        c.dims.push_back(n);
    }
    const json& bs = field(j, "boundaries", "complex");
    if (!bs.is_array())
        throw InvalidInputError("complex: field 'boundaries' must be an array");
    if (bs.size() + 1 != c.dims.size())
        throw InvalidInputError("complex: got " + std::to_string(bs.size()) +
                                " boundary matrices for " + std::to_string(c.dims.size()) +
                                " degrees; expected one per degree above 0");
    for (std::size_t i = 0; i < bs.size(); ++i) {
        std::string what = "complex.boundaries[" + std::to_string(i) + "]";
        int rows = c.dims[i];
        int cols = c.dims[i + 1];
        const json& m = bs[i];
        if (!m.is_array())
            throw InvalidInputError(what + ": expected an array of rows");
        if (static_cast<int>(m.size()) != rows)
            throw InvalidInputError(what + ": expected " + std::to_string(rows) +
                                    " rows, got " + std::to_string(m.size()));
        homology::IntMatrix mat(rows, cols);
        for (int r = 0; r < rows; ++r) {
            const json& row = m[r];
            if (!row.is_array() || static_cast<int>(row.size()) != cols)
                throw InvalidInputError(what + ": row " + std::to_string(r) + " must hold " +
                                        std::to_string(cols) + " entries");
            for (int cc = 0; cc < cols; ++cc)
                mat.at(r, cc) = int_from_json(row[cc], what);
        }
        c.boundaries.push_back(std::move(mat));
    }
    return c;
}

std::string chain_complex_to_json(const homology::ChainComplex& c) {
    json bs = json::array();
    for (const homology::IntMatrix& m : c.boundaries) {
        json rows = json::array();
        for (int r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (int cc = 0; cc < m.cols(); ++cc) row.push_back(int_to_json(m.at(r, cc)));
            rows.push_back(std::move(row));
        }
        bs.push_back(std::move(rows));
    }
    return json{{"dims", c.dims}, {"boundaries", bs}}.dump();
}

homology::GradedGroup parse_graded_group(const std::string& text) {
    return graded_from(parse_text(text), "graded group");
}

std::string graded_group_to_json(const homology::GradedGroup& g) {
    return graded_json(g).dump();
}

std::string fg_ab_group_to_json(const homology::FgAbGroup& g) {
    return group_json(g).dump();
}

tori::HomClass parse_hom_class(const std::string& text) {
    json j = parse_text(text);
    const json& b = field(j, "basis", "class");
    if (!b.is_string())
        throw InvalidInputError("class: field 'basis' must be \"alpha_beta\" or \"s1_mu_k\"");
    std::string s = b.get<std::string>();
    tori::HomClass c;
    if (s == "alpha_beta")
        c.basis = tori::BasisKind::AlphaBeta;
    else if (s == "s1_mu_k")
        c.basis = tori::BasisKind::S1MuK;
    else
        throw InvalidInputError(
            "class: field 'basis' must be \"alpha_beta\" or \"s1_mu_k\", got \"" + s + "\"");
    const json& coords = field(j, "coords", "class");
    if (!coords.is_array())
        throw InvalidInputError("class: field 'coords' must be an array");
    for (const json& x : coords) c.coords.push_back(int_from_json(x, "class.coords"));
    return c;
}

std::string hom_class_to_json(const tori::HomClass& c) { return hom_class_json(c).dump(); }

std::string verdict_to_json(const tori::Verdict& v) { return verdict_json(v).dump(); }

std::string complement_group_to_json(const tori::ComplementGroup& g) {
    return json{{"group", group_json(g.group)}, {"basis", basis_name(g.basis)}}.dump();
}

std::string family_report_to_json(const tori::TheoremFamilyReport& r) {
    json members = json::array();
    for (const tori::FamilyMember& m : r.members) {
        members.push_back(json{{"index", m.index},
                               {"knot_invariant", m.knot_invariant},
                               {"class", hom_class_json(m.cls)},
                               {"divisibility", int_to_json(m.divisibility)}});
    }
    json pairs = json::array();
    for (const tori::PairVerdict& p : r.pairs)
        pairs.push_back(json{{"i", p.i}, {"j", p.j}, {"verdict", verdict_json(p.verdict)}});
    return json{{"kind", r.kind},
                {"members", members},
                {"pairs", pairs},
                {"all_distinct", r.all_distinct},
                {"smoothly_isotopic", r.smoothly_isotopic},
                {"implemented_ladder", r.implemented_ladder},
                {"unit_step_ladder", r.unit_step_ladder}}
        .dump();
}

ScenarioManifest parse_manifest(const std::string& text) {
    json j = parse_text(text);
    ScenarioManifest m;
    const json& kind = field(j, "kind", "manifest");
    if (!kind.is_string() ||
        (kind.get<std::string>() != "transverse" && kind.get<std::string>() != "legendrian"))
        throw InvalidInputError(
            "manifest: field 'kind' must be \"transverse\" or \"legendrian\"");
    m.kind = kind.get<std::string>();
    const json& profile = field(j, "profile", "manifest");
    if (profile.contains("events"))
        m.front = front_from(profile, "manifest.profile");
    else
        m.braid = braid_from(profile, "manifest.profile");
    if (j.contains("ambient"))
        m.ambient = graded_from(field(j["ambient"], "N", "manifest.ambient"),
                                "manifest.ambient.N");
    if (j.contains("stabilizations")) {
        if (!j["stabilizations"].is_number_integer() && !j["stabilizations"].is_number_unsigned())
            throw InvalidInputError("manifest: field 'stabilizations' must be an integer");
        m.stabilizations = j["stabilizations"].get<int>();
        if (m.stabilizations < 0)
            throw InvalidInputError("manifest: field 'stabilizations' must be nonnegative");
    }
    if (j.contains("nullhomologous")) {
        if (!j["nullhomologous"].is_boolean())
            throw InvalidInputError("manifest: field 'nullhomologous' must be a boolean");
        m.nullhomologous = j["nullhomologous"].get<bool>();
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write file: " + path);
    out << content;
}

}  // namespace engeltori::io
