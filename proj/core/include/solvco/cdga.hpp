#ifndef SOLVCO_CDGA_HPP
#define SOLVCO_CDGA_HPP

#include <optional>
#include <string>
#include <vector>

#include "solvco/forms.hpp"
#include "solvco/hull.hpp"

namespace solvco {

// One weight slice of the twisted invariant complex: the full exterior
// algebra with differential d + lambda_flat ^ (.).
struct DGASlice {
    WeightVector weight;
    size_t n = 0;
    std::vector<SparseMatrix> d; // d[p]: degree p -> p+1, p = 0..n
};

DGASlice ce_differential(const LieAlgebra& g);
DGASlice twisted_slice(const LieAlgebra& g, const AdSData& ads, const WeightVector& lambda);

struct DegreeCohomology {
    size_t dim = 0;
    std::vector<Vec> representatives; // closed forms, monomial coordinates
    std::vector<Vec> image_basis;     // reduced basis of im d^{p-1}
    // Coordinates of a cocycle's class in the representative basis.
    Vec project(const Vec& cocycle) const;
    // One elimination for a batch of cocycles.
    std::vector<Vec> project_many(const std::vector<Vec>& cocycles) const;
};

struct CohomologyBasis {
    WeightVector weight;
    std::vector<DegreeCohomology> by_degree; // 0..n
    std::vector<size_t> dims() const;
};

CohomologyBasis cohomology(const DGASlice& slice);

struct SubsetWeight {
    WeightVector weight;
    std::vector<size_t> subset; // first index subset of the diagonal basis realizing it
};

// All distinct subset sums of the diagonal weights, zero included.
std::vector<SubsetWeight> subset_weights(const AdSData& ads);

// Lazily computed slices and cohomology bases per weight, with a
// deterministic weight order shared by every consumer.
class SliceCache {
public:
    SliceCache(LieAlgebra g, AdSData ads);

    const LieAlgebra& algebra() const { return g_; }
    const AdSData& ads() const { return ads_; }
    const ExteriorBasis& exterior() const { return ext_; }
    size_t dim() const { return g_.dim(); }

    const std::vector<SubsetWeight>& weights();
    const DGASlice& slice(const WeightVector& w);
    const CohomologyBasis& coh(const WeightVector& w);

private:
    size_t find_or_insert(const WeightVector& w);

    LieAlgebra g_;
    AdSData ads_;
    ExteriorBasis ext_;
    std::optional<std::vector<SubsetWeight>> subset_;
    std::vector<WeightVector> known_;
    std::vector<std::optional<DGASlice>> slices_;
    std::vector<std::optional<CohomologyBasis>> cohs_;
};

struct TotalCohomology {
    std::vector<std::pair<WeightVector, std::vector<size_t>>> per_weight;
    std::vector<size_t> total; // per-degree sums over all weights
};

TotalCohomology total_cohomology(SliceCache& cache);

// ---- classes and products -----------------------------------------------------

struct CohClass {
    WeightVector weight;
    size_t degree = 0;
    Vec coords; // in the representative basis of (weight, degree)
    bool is_zero() const { return vec_is_zero(coords); }
};

FormTerms class_representative(SliceCache& cache, const CohClass& c);
CohClass project_form(SliceCache& cache, const WeightedForm& wf);
CohClass cup_product(SliceCache& cache, const CohClass& a, const CohClass& b);

struct MasseyResult {
    WeightVector weight;
    size_t degree = 0;
    CohClass value;                 // one element of the defining set
    std::vector<Vec> indeterminacy; // class-coordinate basis of a H + H c
    bool nonzero_mod_indeterminacy = false;
};

// <a, b, c> with a b = b c = 0; representative choices are solved
// against the slice differentials.  Throws NotComposable.
MasseyResult massey_triple(SliceCache& cache, const CohClass& a, const CohClass& b,
                           const CohClass& c);

// Recomputes the triple with explicitly perturbed defining-system choices
// (adds the given coboundary-generating cochains); used by well-definedness
// checks.
MasseyResult massey_triple_perturbed(SliceCache& cache, const CohClass& a, const CohClass& b,
                                     const CohClass& c, const Vec& x_shift, const Vec& y_shift);

// ---- minimal model --------------------------------------------------------------

struct MinimalModelPresentation {
    std::vector<std::string> generator_names; // degree-1 generators y_k
    LieAlgebra dual_algebra;                  // the hull in diagonal coordinates
    std::vector<WeightVector> generator_weights;
    std::vector<FormTerms> dy;   // differential of each generator (quadratic)
    Matrix morphism_rows;        // row k: the 1-form image of y_k in original duals
};

MinimalModelPresentation invariant_subdga(const LieAlgebra& g, const AdSData& ads);

struct QuasiIsoReport {
    bool ok = false;
    std::vector<size_t> model_dims;
    std::vector<size_t> total_dims;
    std::vector<bool> degree_iso;
};

// Full class-level comparison of H(minimal model) with the direct sum of the
// weight slices.  Throws QuasiIsoFails when `throw_on_fail` and not ok.
QuasiIsoReport verify_quasi_iso(SliceCache& cache, bool throw_on_fail = true);

// ---- verdicts -------------------------------------------------------------------

struct MasseyWitness {
    std::string description;
    MasseyResult result;
};

struct FormalityReport {
    bool formal = false;
    std::string criterion; // machine tag of the equivalence used
    std::optional<std::pair<size_t, size_t>> hull_witness;
    std::optional<MasseyWitness> massey;
};

FormalityReport formality_verdict(SliceCache& cache, const HullAlgebra& hull,
                                  bool search_witness = true, size_t witness_budget = 400);

struct LefschetzFailure {
    size_t degree = 0;
    WeightVector weight;
    std::string kernel_class;
};

struct LefschetzReport {
    size_t half_dim = 0;
    std::vector<bool> iso_by_degree; // index i = 0..half_dim
    std::vector<LefschetzFailure> failures;
    bool all_iso() const;
};

// Throws OddDimension / NotSymplectic on an unusable omega.
LefschetzReport hard_lefschetz(SliceCache& cache, const FormTerms& omega);

// Deterministic surrogate evaluation used to bucket weights before exact
// comparison (never a substitute for exact equality).
std::string weight_hash_key(const WeightVector& w);

} // namespace solvco

#endif
