#include "solvco/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "solvco/errors.hpp"

namespace solvco {

LieAlgebra assemble_algebra(const SolvmanifoldSpec& spec) {
    size_t n = spec.abelian_dim, m = spec.fiber_dim;
    if (spec.derivations.size() != n)
        throw ParseError("expected one action derivation per abelian direction");
    for (const auto& D : spec.derivations)
        if (D.rows() != m || D.cols() != m)
            throw ParseError("action derivations must be m x m");
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            if (spec.derivations[a] * spec.derivations[b] !=
                spec.derivations[b] * spec.derivations[a])
                throw MathError(ErrorCode::NonCommutingAction,
                                "action derivations " + std::to_string(a) + " and " +
                                    std::to_string(b) + " do not commute");

    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i)
        names.push_back(i < spec.base_names.size() ? spec.base_names[i]
                                                   : "t" + std::to_string(i + 1));
    for (size_t j = 0; j < m; ++j)
        names.push_back(j < spec.fiber_names.size() ? spec.fiber_names[j]
                                                    : "x" + std::to_string(j + 1));
    LieAlgebra g(n + m, names, spec.params);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                const ScalarValue& c = spec.derivations[i].at(k, j);
                if (!c.is_zero()) g.set_bracket(i, n + j, n + k, c);
            }
    return g;
}

namespace {

bool has_pi(const ScalarValue& v) { return v.parameters().count("pi") > 0; }

struct GeneratorSplit {
    ScalarValue re;
    ScalarValue im; // full imaginary part (not yet divided by pi)
};

GeneratorSplit generator_value(const WeightVector& lambda, const SolvmanifoldSpec& spec,
                               const Vec& generator) {
    ScalarValue v;
    for (size_t i = 0; i < spec.abelian_dim; ++i)
        if (!generator[i].is_zero() && !lambda.values[i].is_zero())
            v += generator[i] * lambda.values[i];
    auto [re, im] = v.split_real_imag();
    return {std::move(re), std::move(im)};
}

} // namespace

CharacterValue character_on_lattice(const WeightVector& lambda, const SolvmanifoldSpec& spec) {
    CharacterValue cv;
    for (const auto& gen : spec.lattice_generators) {
        GeneratorSplit gs = generator_value(lambda, spec, gen);
        if (has_pi(gs.re))
            throw MathError(ErrorCode::UnsupportedTranscendence,
                            "character value mixes pi into the real part: " + gs.re.to_string());
        ScalarValue pi_coeff;
        if (!gs.im.is_zero()) {
            pi_coeff = gs.im / ScalarValue::pi();
            if (has_pi(pi_coeff))
                throw MathError(ErrorCode::UnsupportedTranscendence,
                                "imaginary part is not a pi-multiple: " + gs.im.to_string());
        }
        cv.on_generators.push_back({std::move(gs.re), std::move(pi_coeff)});
    }
    return cv;
}

bool is_trivial_on_lattice(const CharacterValue& cv) {
    // A decidably nontrivial generator settles the answer before any
    // undecidable one is consulted.
    std::vector<const CharacterValue::PerGenerator*> pending;
    for (const auto& g : cv.on_generators) {
        if (!g.re.is_zero()) return false;
        auto c = g.pi_coeff.as_constant();
        if (!c) {
            pending.push_back(&g);
            continue;
        }
        if (c->im != 0)
            throw MathError(ErrorCode::UnsupportedTranscendence,
                            "pi coefficient is not real: " + g.pi_coeff.to_string());
        if (!is_even_integer(c->re)) return false;
    }
    if (!pending.empty())
        throw MathError(ErrorCode::UndecidableWithParameters,
                        "pi coefficient has free parameters: " + pending[0]->pi_coeff.to_string());
    return true;
}

Triviality trivial_on_lattice(const WeightVector& lambda, const SolvmanifoldSpec& spec) {
    // Real parts first: exp of a nonzero real value never equals 1, and the
    // zero test needs no representation assumptions on the imaginary part.
    std::vector<GeneratorSplit> splits;
    for (const auto& gen : spec.lattice_generators) {
        GeneratorSplit gs = generator_value(lambda, spec, gen);
        if (!gs.re.is_zero()) return Triviality::NonTrivial;
        splits.push_back(std::move(gs));
    }
    bool undecidable = false;
    std::string undecidable_what;
    ErrorCode undecidable_code = ErrorCode::UndecidableWithParameters;
    for (const auto& gs : splits) {
        if (gs.im.is_zero()) continue;
        ScalarValue pi_coeff = gs.im / ScalarValue::pi();
        if (has_pi(pi_coeff)) {
            undecidable = true;
            undecidable_code = ErrorCode::UnsupportedTranscendence;
            undecidable_what = "imaginary part is not a pi-multiple: " + gs.im.to_string();
            continue;
        }
        auto c = pi_coeff.as_constant();
        if (!c) {
            undecidable = true;
            undecidable_code = ErrorCode::UndecidableWithParameters;
            undecidable_what = "pi coefficient has free parameters: " + pi_coeff.to_string();
            continue;
        }
        if (c->im != 0) {
            undecidable = true;
            undecidable_code = ErrorCode::UnsupportedTranscendence;
            undecidable_what = "pi coefficient is not real: " + pi_coeff.to_string();
            continue;
        }
        if (!is_even_integer(c->re)) return Triviality::NonTrivial;
    }
    if (undecidable) throw MathError(undecidable_code, undecidable_what);
    return Triviality::Trivial;
}

CriterionReport criterion_C(SliceCache& cache, const SolvmanifoldSpec& spec) {
    CriterionReport rep;
    rep.passes = true;
    for (const auto& sw : cache.weights()) {
        if (sw.weight.is_zero()) continue;
        if (trivial_on_lattice(sw.weight, spec) == Triviality::Trivial) {
            rep.passes = false;
            rep.offending_subset = sw.subset;
            rep.offending_weight = sw.weight.to_string(cache.algebra().basis_names());
            break;
        }
    }
    if (rep.passes) {
        rep.betti_invariant_subcomplex = untwisted_betti(cache, spec);
        rep.betti_ce = cache.coh(WeightVector::zero(cache.dim())).dims();
    }
    return rep;
}

CriterionReport criterion_D(SliceCache& cache) {
    CriterionReport rep;
    rep.passes = true;
    for (const auto& sw : cache.weights()) {
        if (sw.weight.is_zero()) continue;
        bool real_part_vanishes = true;
        for (const auto& v : sw.weight.values) {
            auto [re, im] = v.split_real_imag();
            if (!re.is_zero()) {
                real_part_vanishes = false;
                break;
            }
        }
        if (real_part_vanishes) {
            // Unitary and nontrivial: the criterion fails.
            rep.passes = false;
            rep.offending_subset = sw.subset;
            rep.offending_weight = sw.weight.to_string(cache.algebra().basis_names());
            break;
        }
    }
    return rep;
}

std::vector<size_t> untwisted_betti(SliceCache& cache, const SolvmanifoldSpec& spec) {
    const LieAlgebra& g = cache.algebra();
    size_t n = g.dim();
    MinimalModelPresentation pres = invariant_subdga(g, cache.ads());
    DGASlice model = ce_differential(pres.dual_algebra);
    const ExteriorBasis& ext = cache.exterior();

    // Triviality per distinct subset weight, then per monomial by lookup.
    const auto& sws = cache.weights();
    std::vector<bool> weight_trivial(sws.size());
    for (size_t t = 0; t < sws.size(); ++t)
        weight_trivial[t] = trivial_on_lattice(sws[t].weight, spec) == Triviality::Trivial;

    auto monomial_weight_index = [&](Monomial mono) {
        WeightVector w = WeightVector::zero(n);
        for (Monomial t = mono; t; t &= t - 1)
            w = w + pres.generator_weights[std::countr_zero(t)];
        for (size_t t = 0; t < sws.size(); ++t)
            if (sws[t].weight == w) return t;
        throw MathError(ErrorCode::QuasiIsoFails, "monomial weight is not a subset sum");
    };

    std::vector<std::vector<bool>> keep(n + 1);
    std::vector<std::vector<size_t>> kept_index(n + 1);
    std::vector<size_t> kept_count(n + 1, 0);
    for (size_t p = 0; p <= n; ++p) {
        const auto& monos = ext.degree(p);
        keep[p].assign(monos.size(), false);
        kept_index[p].assign(monos.size(), 0);
        for (size_t c = 0; c < monos.size(); ++c) {
            if (!weight_trivial[monomial_weight_index(monos[c])]) continue;
            keep[p][c] = true;
            kept_index[p][c] = kept_count[p]++;
        }
    }

    // Restricted differential ranks; the differential preserves monomial
    // weight, so kept columns may only hit kept rows.
    std::vector<size_t> ranks(n + 1, 0);
    for (size_t p = 0; p < n; ++p) {
        SparseMatrix restricted(kept_count[p + 1], kept_count[p]);
        size_t col_out = 0;
        for (size_t c = 0; c < model.d[p].cols; ++c) {
            if (!keep[p][c]) continue;
            for (const auto& [row, val] : model.d[p].columns[c]) {
                if (!keep[p + 1][row])
                    throw MathError(ErrorCode::QuasiIsoFails,
                                    "restricted differential leaves the invariant subcomplex");
                restricted.add(col_out, kept_index[p + 1][row], val);
            }
            ++col_out;
        }
        ranks[p] = rank(restricted);
    }
    std::vector<size_t> betti(n + 1);
    for (size_t p = 0; p <= n; ++p) {
        size_t below = p == 0 ? 0 : ranks[p - 1];
        betti[p] = kept_count[p] - ranks[p] - below;
    }
    return betti;
}

} // namespace solvco
