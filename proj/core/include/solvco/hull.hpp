#ifndef SOLVCO_HULL_HPP
#define SOLVCO_HULL_HPP

#include <optional>
#include <utility>

#include "solvco/lie.hpp"

namespace solvco {

// Lie algebra of the unipotent hull, realized on the underlying vector
// space of g with the corrected bracket
//   mu(X, Y) = [X, Y] - ad_s(X)(Y) + ad_s(Y)(X).
struct HullAlgebra {
    LieAlgebra underlying;
    // Embedding witness X |-> X - ad_s(X), kept as documentation metadata.
    std::string embedding_note = "X -> X - ad_s(X)";
};

// Builds the hull and verifies Jacobi, nilpotency, and that ad_s kills
// every corrected bracket.  Throws HullBracketInvalid on inconsistency.
HullAlgebra unipotent_hull(const LieAlgebra& g, const AdSData& ads);

struct AbelianVerdict {
    bool abelian = false;
    // A nonvanishing bracket pair when not abelian.
    std::optional<std::pair<size_t, size_t>> witness;
};

AbelianVerdict is_abelian(const HullAlgebra& u);

// Decomposition data when the hull is abelian: g = R^k semidirect R^m with
// a semisimple action, read off from the lower-central limit.
struct SplittingShape {
    size_t quotient_dim = 0;
    size_t ideal_dim = 0;
    std::vector<WeightVector> action_weights; // with multiplicity, on the ideal
};

std::optional<SplittingShape> splitting_shape(const LieAlgebra& g, const AdSData& ads);

} // namespace solvco

#endif
