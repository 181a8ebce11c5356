#include "engeltori/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <map>
#include <numeric>

#include "engeltori/errors.hpp"
#include "engeltori/json_io.hpp"

namespace engeltori::catalog {

using homology::ChainComplex;
using homology::Int;
using homology::IntMatrix;

namespace {

IntMatrix mat(int rows, int cols, std::vector<Int> entries) {
    return IntMatrix(rows, cols, std::move(entries));
}

std::map<std::string, CatalogEntry> build_entries() {
    std::map<std::string, CatalogEntry> m;
    auto add = [&m](std::string id, ChainComplex c, std::string note) {
        m[id] = CatalogEntry{id, std::move(c), std::move(note)};
    };

    ChainComplex point{{1}, {}};
    ChainComplex circle{{1, 1}, {mat(1, 1, {0})}};
    ChainComplex sphere2{{1, 0, 1}, {IntMatrix(1, 0), IntMatrix(0, 1)}};

    add("point", point, "one 0-cell");
    add("circle", circle, "one 0-cell, one 1-cell glued into a loop");
    add("disk", ChainComplex{{1, 1, 1}, {mat(1, 1, {0}), mat(1, 1, {1})}},
        "2-cell attached once along the loop; contractible");
    add("sphere2", sphere2, "one 0-cell, one 2-cell");
    add("sphere3",
        ChainComplex{{1, 0, 0, 1}, {IntMatrix(1, 0), IntMatrix(0, 0), IntMatrix(0, 1)}},
        "one 0-cell, one 3-cell");
    add("torus2",
        ChainComplex{{1, 2, 1}, {mat(1, 2, {0, 0}), mat(2, 1, {0, 0})}},
        "standard square cell structure; commutator boundary abelianizes to zero");
    add("solid_torus", ChainComplex{{1, 1, 0}, {mat(1, 1, {0}), IntMatrix(1, 0)}},
        "spine circle of S^1 x D^2, padded with an empty 2-skeleton");
    add("s1xs2", homology::tensor_product(circle, sphere2),
        "product cell structure of the circle with the 2-sphere");
    add("unknot_complement",
        ChainComplex{{1, 1, 0}, {mat(1, 1, {0}), IntMatrix(1, 0)}},
        "the unknot's complement in the 3-sphere is a solid torus");
    add("trefoil_spine",
        ChainComplex{{1, 2, 1}, {mat(1, 2, {0, 0}), mat(2, 1, {1, -1})}},
        "two-generator one-relator spine; the relator xyxy^-1x^-1y^-1 "
        "abelianizes to x - y");
    add("moore_z2", ChainComplex{{1, 1, 1}, {mat(1, 1, {0}), mat(1, 1, {2})}},
        "disk attached to the circle by a degree-2 map");
    add("s1xs2_unknot_complement",
        ChainComplex{{1, 2, 1}, {mat(1, 2, {0, 0}), mat(2, 1, {0, 0})}},
        "complement of a local unknot in S^1 x S^2; cells pinned by the "
        "ball-decomposition Mayer-Vietoris computation in the test suite");

    return m;
}

const std::map<std::string, CatalogEntry>& entries() {
    static const std::map<std::string, CatalogEntry> m = build_entries();
    return m;
}

}  // namespace

const std::vector<std::string>& ids() {
    static const std::vector<std::string> v = [] {
        std::vector<std::string> out;
        for (const auto& [id, entry] : entries()) out.push_back(id);
        return out;
    }();
    return v;
}

CatalogEntry get(const std::string& id) {
    if (const char* dir = std::getenv("ENGELTORI_CATALOG_DIR")) {
        std::filesystem::path p = std::filesystem::path(dir) / (id + ".json");
        if (std::filesystem::exists(p)) {
            ChainComplex c = io::parse_chain_complex(io::read_file(p.string()));
            c.check_shapes();
            if (!c.is_complex())
                throw InvalidInputError("catalog override " + p.string() +
                                        " is not a chain complex");
            return CatalogEntry{id, std::move(c),
                                "user override from ENGELTORI_CATALOG_DIR"};
        }
    }
    auto it = entries().find(id);
    if (it == entries().end()) {
        std::string known;
        for (const std::string& s : ids()) known += (known.empty() ? "" : ", ") + s;
        throw UnknownIdError("unknown catalog id '" + id + "'; known ids: " + known);
    }
    return it->second;
}

ChainComplex wirtinger_spine(const knots::BraidWord& b) {
    knots::ValidationReport rep = knots::validate_braid(b);
    if (!rep.valid)
        throw InvalidInputError("wirtinger_spine: invalid braid word: " +
                                rep.violations.front());
    if (rep.components != 1)
        throw MultiComponentError("wirtinger_spine: closure has " +
                                  std::to_string(rep.components) +
                                  " components; a knot diagram is required");

    const int n = b.strands;
    const int m = static_cast<int>(b.word.size());

    // Arc labels: 0..n-1 for the strands entering at the top, n+t for the arc
    // that starts where crossing t cuts its under-strand. The closure then
    // merges the bottom of each position with its top.
    std::vector<int> parent(n + m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b2) { parent[find(a)] = find(b2); };

    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    std::vector<std::pair<int, int>> relations;  // (out arc, in arc) per crossing
    for (int t = 0; t < m; ++t) {
        int g = b.word[t];
        int i = (g > 0 ? g : -g) - 1;
        // Positive letters run the position-i strand over the position-(i+1)
        // strand; negative letters the other way.
        int over_pos = (g > 0) ? i : i + 1;
        int under_pos = (g > 0) ? i + 1 : i;
        int in_arc = cur[under_pos];
        int out_arc = n + t;
        relations.emplace_back(out_arc, in_arc);
        int over_arc = cur[over_pos];
        cur[i] = (g > 0) ? out_arc : over_arc;
        cur[i + 1] = (g > 0) ? over_arc : out_arc;
    }
    for (int p = 0; p < n; ++p) unite(cur[p], p);

    std::vector<int> row_of(n + m, -1);
    int arcs = 0;
    for (int a = 0; a < n + m; ++a) {
        int r = find(a);
        if (row_of[r] < 0) row_of[r] = arcs++;
    }

    // One relator per crossing minus the redundant last one: around a knot
    // every arc appears once as "out" and once as "in", so the abelianized
    // columns sum to zero and any single one may be dropped.
    int rel_count = m > 0 ? m - 1 : 0;
    IntMatrix d2(arcs, rel_count);
    for (int t = 0; t < rel_count; ++t) {
        auto [out_arc, in_arc] = relations[t];
        d2.at(row_of[find(out_arc)], t) += 1;
        d2.at(row_of[find(in_arc)], t) -= 1;
    }

    ChainComplex c;
    c.dims = {1, arcs, rel_count};
    c.boundaries = {IntMatrix(1, arcs), std::move(d2)};
    return c;
}

}  // namespace engeltori::catalog
