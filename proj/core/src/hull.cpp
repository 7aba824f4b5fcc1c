#include "solvco/hull.hpp"

#include "solvco/errors.hpp"

namespace solvco {

HullAlgebra unipotent_hull(const LieAlgebra& g, const AdSData& ads) {
    size_t n = g.dim();
    LieAlgebra u(n, g.basis_names(), g.params());
    for (size_t i = 0; i < n; ++i) {
        Matrix Si = ads.ads_of_basis(i);
        for (size_t j = i + 1; j < n; ++j) {
            Matrix Sj = ads.ads_of_basis(j);
            Vec ei(n), ej(n);
            ei[i] = ScalarValue(1);
            ej[j] = ScalarValue(1);
            Vec mu = vec_add(vec_sub(g.bracket_basis(i, j), Si.apply(ej)), Sj.apply(ei));
            // The corrected bracket must land in the nilradical, where ad_s
            // vanishes; otherwise the upstream ad_s data is inconsistent.
            if (!ads.ads_of(mu).is_zero())
                throw MathError(ErrorCode::HullBracketInvalid,
                                "ad_s does not vanish on the hull bracket of (" +
                                    g.basis_names()[i] + ", " + g.basis_names()[j] + ")");
            for (size_t k = 0; k < n; ++k)
                if (!mu[k].is_zero()) u.set_bracket(i, j, k, mu[k]);
        }
    }
    ValidationReport rep = validate(u);
    if (!rep.jacobi_ok)
        throw MathError(ErrorCode::HullBracketInvalid, "hull bracket violates the Jacobi identity");
    if (!rep.nilpotent)
        throw MathError(ErrorCode::HullBracketInvalid, "hull algebra is not nilpotent");
    return HullAlgebra{std::move(u)};
}

AbelianVerdict is_abelian(const HullAlgebra& u) {
    size_t n = u.underlying.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!vec_is_zero(u.underlying.bracket_basis(i, j)))
                return AbelianVerdict{false, std::make_pair(i, j)};
    return AbelianVerdict{true, std::nullopt};
}

std::optional<SplittingShape> splitting_shape(const LieAlgebra& g, const AdSData& ads) {
    AbelianVerdict verdict = is_abelian(unipotent_hull(g, ads));
    if (!verdict.abelian) return std::nullopt;

    // Lower-central limit n' gives g = (g/n') semidirect n' with the action
    // of the abelian quotient semisimple on the abelian ideal.
    auto lcs = lower_central_series(g);
    const Subspace& ideal = lcs.back();
    size_t n = g.dim();

    SplittingShape shape;
    shape.quotient_dim = n - ideal.dim();
    shape.ideal_dim = ideal.dim();
    if (ideal.dim() > 0) {
        // Weights of the ad_s action on the ideal.
        std::vector<Matrix> restricted;
        Matrix W = Matrix::from_columns(ideal.basis, n);
        for (const auto& S : ads.sm_on_V) {
            auto R = solve_many(W, S * W);
            if (!R)
                throw MathError(ErrorCode::HullBracketInvalid,
                                "ad_s does not preserve the lower-central limit");
            restricted.push_back(std::move(*R));
        }
        if (restricted.empty()) {
            shape.action_weights.assign(ideal.dim(), WeightVector::zero(n));
        } else {
            for (const auto& ws : simultaneous_weights(restricted)) {
                WeightVector w;
                w.values.assign(n, ScalarValue());
                for (size_t j = 0; j < n; ++j) {
                    ScalarValue acc;
                    for (size_t a = 0; a < ads.V.dim(); ++a)
                        if (!ws.eigenvalues[a].is_zero() && !ads.v_coords.at(a, j).is_zero())
                            acc += ws.eigenvalues[a] * ads.v_coords.at(a, j);
                    w.values[j] = acc;
                }
                w.kind = w.is_zero() ? WeightVector::Kind::Zero : WeightVector::Kind::Basic;
                for (size_t c = 0; c < ws.basis.size(); ++c) shape.action_weights.push_back(w);
            }
        }
    }
    return shape;
}

} // namespace solvco
