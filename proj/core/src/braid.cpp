#include "engeltori/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "engeltori/errors.hpp"

namespace engeltori::knots {

int BraidWord::exponent_sum() const {
    int e = 0;
    for (int g : word) e += (g > 0) ? 1 : -1;
    return e;
}

ValidationReport validate_braid(const BraidWord& b) {
    ValidationReport r;
    if (b.strands < 1) {
        r.violations.push_back("strand count must be at least 1, got " +
                               std::to_string(b.strands));
        return r;
    }
    for (size_t k = 0; k < b.word.size(); ++k) {
        int g = b.word[k];
        int i = std::abs(g);
        if (g == 0 || i > b.strands - 1) {
            r.violations.push_back("letter " + std::to_string(k) + " (" +
                                   std::to_string(g) + ") outside the generator range [1, " +
                                   std::to_string(b.strands - 1) + "]");
        }
    }
    if (!r.violations.empty()) return r;

    // Closure permutation: p[j] = strand currently at position j. Every letter
    // acts as the transposition of adjacent positions regardless of sign.
    std::vector<int> p(b.strands);
    std::iota(p.begin(), p.end(), 0);
    for (int g : b.word) {
        int i = std::abs(g) - 1;
        std::swap(p[i], p[i + 1]);
    }

    std::vector<char> seen(b.strands, 0);
    int cycles = 0;
    for (int s = 0; s < b.strands; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int t = s; !seen[t]; t = p[t]) seen[t] = 1;
    }

    r.valid = true;
    r.components = cycles;
    r.closure_permutation = std::move(p);
    return r;
}

long long sl_of_braid(const BraidWord& b) {
    ValidationReport r = validate_braid(b);
    if (!r.valid)
        throw InvalidInputError("invalid braid word: " + r.violations.front());
    if (r.components != 1)
        throw MultiComponentError(
            "self-linking number needs a knot closure; this braid closes to " +
            std::to_string(r.components) + " components");
    return static_cast<long long>(b.exponent_sum()) - b.strands;
}

BraidWord markov_stabilize(const BraidWord& b, int sign) {
    if (sign != 1 && sign != -1)
        throw InvalidInputError("stabilization sign must be +1 or -1");
    ValidationReport r = validate_braid(b);
    if (!r.valid)
        throw InvalidInputError("invalid braid word: " + r.violations.front());
    BraidWord out = b;
    out.strands = b.strands + 1;
    out.word.push_back(sign * b.strands);  // sigma_n^{sign} on n+1 strands
    return out;
}

}  // namespace engeltori::knots
