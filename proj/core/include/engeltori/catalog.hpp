#pragma once

#include <string>
#include <vector>

#include "engeltori/braid.hpp"
#include "engeltori/chain_complex.hpp"

namespace engeltori::catalog {

struct CatalogEntry {
    std::string id;
    homology::ChainComplex complex;
    std::string note;  // where the cell structure comes from
};

// Built-in ids:
//   point, circle, disk, sphere2, sphere3, torus2, solid_torus, s1xs2,
//   unknot_complement, trefoil_spine, moore_z2, s1xs2_unknot_complement
//
// When the ENGELTORI_CATALOG_DIR environment variable is set, <dir>/<id>.json
// (chain-complex JSON) overrides the built-in entry of that id and also makes
// new ids resolvable. Unknown ids throw UnknownIdError.
const std::vector<std::string>& ids();
CatalogEntry get(const std::string& id);

// Presentation 2-complex of the braid closure's complement, abelianized: one
// 0-cell, one 1-cell per arc of the closure diagram, one 2-cell per crossing
// minus one redundant relator. Boundary entries are the exponent sums of the
// abelianized relators, so each column is e_out - e_in. For any knot closure
// the homology is (Z, Z, 0). MultiComponentError for link closures.
homology::ChainComplex wirtinger_spine(const knots::BraidWord& b);

}  // namespace engeltori::catalog
