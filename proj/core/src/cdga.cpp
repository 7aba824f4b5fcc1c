#include "solvco/cdga.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "solvco/errors.hpp"

namespace solvco {

// ---- weight hashing -----------------------------------------------------------

namespace {

Rational name_surrogate(const std::string& name) {
    // Any deterministic injective-ish assignment works; collisions only cost
    // an extra exact comparison.
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    long p = static_cast<long>(h % 293) + 2;
    long q = static_cast<long>((h / 293) % 283) + 3;
    return Rational(p, q);
}

std::optional<GaussRational> surrogate_value(const ScalarValue& v) {
    std::map<std::string, ScalarValue> bind;
    for (const auto& name : v.parameters()) bind.emplace(name, ScalarValue(name_surrogate(name)));
    try {
        return v.substitute(bind).as_constant();
    } catch (const MathError&) {
        return std::nullopt;
    }
}

} // namespace

std::string weight_hash_key(const WeightVector& w) {
    std::ostringstream os;
    for (const auto& v : w.values) {
        if (auto c = surrogate_value(v))
            os << to_string(*c);
        else
            os << "?";
        os << ",";
    }
    return os.str();
}

// ---- slices ---------------------------------------------------------------------

namespace {

void check_generator_d_squared(const LieAlgebra& g) {
    CEDifferential d0(g, {});
    for (size_t k = 0; k < g.dim(); ++k)
        if (!terms_zero(d0.apply(d0.dx(k))))
            throw MathError(ErrorCode::JacobiFails,
                            "d^2 does not vanish on generator " + g.basis_names()[k]);
}

DGASlice slice_for(const LieAlgebra& g, const WeightVector& w, const ExteriorBasis& ext) {
    size_t n = g.dim();
    FormTerms lam;
    for (size_t j = 0; j < n; ++j) add_term(lam, Monomial(1) << j, w.values[j]);
    CEDifferential D(g, lam);
    // The twist must be a closed 1-form (lambda vanishes on [g, g]);
    // lambda ^ lambda = 0, so the twisted image of lambda is its plain d.
    if (!terms_zero(D.apply(lam)))
        throw MathError(ErrorCode::WeightNotClosed,
                        "weight 1-form is not closed: " + form_to_string(lam, g.basis_names()));

    DGASlice s;
    s.weight = w;
    s.n = n;
    s.d.resize(n + 1);
    for (size_t p = 0; p <= n; ++p) {
        size_t rows = p == n ? 0 : ext.dim(p + 1);
        SparseMatrix m(rows, ext.dim(p));
        if (p < n) {
            const auto& monos = ext.degree(p);
            for (size_t col = 0; col < monos.size(); ++col) {
                FormTerms im = D.apply_monomial(monos[col]);
                for (const auto& [mm, c] : im) m.add(col, ext.index(p + 1, mm), c);
            }
        }
        s.d[p] = std::move(m);
    }
    return s;
}

} // namespace

DGASlice ce_differential(const LieAlgebra& g) {
    check_generator_d_squared(g);
    ExteriorBasis ext(g.dim());
    return slice_for(g, WeightVector::zero(g.dim()), ext);
}

DGASlice twisted_slice(const LieAlgebra& g, const AdSData& ads, const WeightVector& lambda) {
    (void)ads;
    check_generator_d_squared(g);
    ExteriorBasis ext(g.dim());
    return slice_for(g, lambda, ext);
}

// ---- cohomology -------------------------------------------------------------------

std::vector<size_t> CohomologyBasis::dims() const {
    std::vector<size_t> out(by_degree.size());
    for (size_t p = 0; p < by_degree.size(); ++p) out[p] = by_degree[p].dim;
    return out;
}

Vec DegreeCohomology::project(const Vec& cocycle) const {
    return project_many({cocycle})[0];
}

std::vector<Vec> DegreeCohomology::project_many(const std::vector<Vec>& cocycles) const {
    if (cocycles.empty()) return {};
    size_t ambient = cocycles[0].size();
    if (representatives.empty()) {
        // The class group is zero; every cocycle projects to the empty tuple.
        return std::vector<Vec>(cocycles.size());
    }
    std::vector<Vec> cols = image_basis;
    cols.insert(cols.end(), representatives.begin(), representatives.end());
    auto sol = solve_many(Matrix::from_columns(cols, ambient),
                          Matrix::from_columns(cocycles, ambient));
    if (!sol)
        throw MathError(ErrorCode::QuasiIsoFails,
                        "projection target is not a cocycle of this slice");
    std::vector<Vec> out(cocycles.size());
    for (size_t c = 0; c < cocycles.size(); ++c) {
        Vec v(representatives.size());
        for (size_t k = 0; k < representatives.size(); ++k)
            v[k] = sol->at(image_basis.size() + k, c);
        out[c] = std::move(v);
    }
    return out;
}

CohomologyBasis cohomology(const DGASlice& slice) {
    CohomologyBasis cb;
    cb.weight = slice.weight;
    cb.by_degree.resize(slice.n + 1);
    for (size_t p = 0; p <= slice.n; ++p) {
        size_t amb = slice.d[p].cols;
        std::vector<Vec> kernel = nullspace(slice.d[p]);
        ReducedBasis accum(amb);
        DegreeCohomology dc;
        if (p > 0)
            for (size_t c = 0; c < slice.d[p - 1].cols; ++c) {
                if (slice.d[p - 1].columns[c].empty()) continue;
                accum.insert(slice.d[p - 1].column_vec(c));
            }
        dc.image_basis = accum.rows();
        for (const auto& kv : kernel) {
            if (!accum.insert(kv)) continue;
            dc.representatives.push_back(kv);
        }
        dc.dim = dc.representatives.size();
        if (dc.dim != kernel.size() - dc.image_basis.size())
            throw MathError(ErrorCode::QuasiIsoFails, "cohomology dimension accounting failed");
        cb.by_degree[p] = std::move(dc);
    }
    return cb;
}

// ---- subset weights ----------------------------------------------------------------

std::vector<SubsetWeight> subset_weights(const AdSData& ads) {
    size_t n = ads.dim();
    std::vector<SubsetWeight> out;
    std::map<std::string, std::vector<size_t>> buckets;
    for (Monomial mask = 0; mask < (Monomial(1) << n); ++mask) {
        WeightVector sum = WeightVector::zero(n);
        std::vector<size_t> subset;
        for (Monomial t = mask; t; t &= t - 1) {
            size_t k = static_cast<size_t>(std::countr_zero(t));
            subset.push_back(k);
            sum = sum + ads.weights[k];
        }
        if (mask == 0) sum.kind = WeightVector::Kind::Zero;
        std::string key = weight_hash_key(sum);
        auto& bucket = buckets[key];
        bool found = false;
        for (size_t idx : bucket)
            if (out[idx].weight == sum) {
                found = true;
                break;
            }
        if (found) continue;
        bucket.push_back(out.size());
        out.push_back(SubsetWeight{std::move(sum), std::move(subset)});
    }
    std::stable_sort(out.begin(), out.end(), [](const SubsetWeight& a, const SubsetWeight& b) {
        bool za = a.weight.is_zero(), zb = b.weight.is_zero();
        if (za != zb) return za;
        std::string ka = weight_hash_key(a.weight), kb = weight_hash_key(b.weight);
        if (ka != kb) return ka < kb;
        return a.subset < b.subset;
    });
    return out;
}

// ---- SliceCache ---------------------------------------------------------------------

SliceCache::SliceCache(LieAlgebra g, AdSData ads)
    : g_(std::move(g)), ads_(std::move(ads)), ext_(g_.dim()) {
    check_generator_d_squared(g_);
}

const std::vector<SubsetWeight>& SliceCache::weights() {
    if (!subset_) subset_ = subset_weights(ads_);
    return *subset_;
}

size_t SliceCache::find_or_insert(const WeightVector& w) {
    for (size_t i = 0; i < known_.size(); ++i)
        if (known_[i] == w) return i;
    known_.push_back(w);
    slices_.emplace_back();
    cohs_.emplace_back();
    return known_.size() - 1;
}

const DGASlice& SliceCache::slice(const WeightVector& w) {
    size_t i = find_or_insert(w);
    if (!slices_[i]) slices_[i] = slice_for(g_, w, ext_);
    return *slices_[i];
}

const CohomologyBasis& SliceCache::coh(const WeightVector& w) {
    size_t i = find_or_insert(w);
    if (!cohs_[i]) cohs_[i] = cohomology(slice(w));
    return *cohs_[i];
}

TotalCohomology total_cohomology(SliceCache& cache) {
    TotalCohomology tc;
    tc.total.assign(cache.dim() + 1, 0);
    for (const auto& sw : cache.weights()) {
        std::vector<size_t> dims = cache.coh(sw.weight).dims();
        for (size_t p = 0; p < dims.size(); ++p) tc.total[p] += dims[p];
        tc.per_weight.emplace_back(sw.weight, std::move(dims));
    }
    return tc;
}

// ---- classes and products -------------------------------------------------------------

FormTerms class_representative(SliceCache& cache, const CohClass& c) {
    FormTerms out;
    if (c.degree > cache.dim()) return out;
    const auto& dc = cache.coh(c.weight).by_degree[c.degree];
    for (size_t k = 0; k < c.coords.size(); ++k) {
        if (c.coords[k].is_zero()) continue;
        add_scaled(out, cache.exterior().form(c.degree, dc.representatives[k]), c.coords[k]);
    }
    return out;
}

CohClass project_form(SliceCache& cache, const WeightedForm& wf) {
    CohClass out;
    out.weight = wf.weight;
    out.degree = wf.degree;
    if (wf.degree > cache.dim()) return out;
    const auto& dc = cache.coh(wf.weight).by_degree[wf.degree];
    out.coords = dc.project(cache.exterior().coords(wf.degree, wf.terms));
    return out;
}

CohClass cup_product(SliceCache& cache, const CohClass& a, const CohClass& b) {
    WeightedForm wf;
    wf.weight = a.weight + b.weight;
    wf.degree = a.degree + b.degree;
    wf.terms = wedge(class_representative(cache, a), class_representative(cache, b));
    return project_form(cache, wf);
}

// ---- Massey ----------------------------------------------------------------------------

namespace {

// Solves d x = target in the given slice at form degree `deg` (x has degree
// deg - 1); target must be a coboundary.
Vec solve_primitive(SliceCache& cache, const WeightVector& w, size_t deg, const FormTerms& target) {
    const DGASlice& s = cache.slice(w);
    Vec rhs = cache.exterior().coords(deg, target);
    auto x = solve(s.d[deg - 1], rhs);
    if (!x)
        throw MathError(ErrorCode::NotComposable,
                        "wedge product is not exact although its class vanished");
    return *x;
}

std::vector<Vec> indeterminacy_basis(SliceCache& cache, const CohClass& a, const CohClass& b,
                                     const CohClass& c, const WeightVector& target_w,
                                     size_t target_deg) {
    std::vector<Vec> gens;
    size_t target_dim = cache.coh(target_w).by_degree[target_deg].dim;
    auto push_class = [&](const CohClass& cls) {
        if (cls.is_zero()) return;
        gens.push_back(cls.coords);
    };
    // a . H^{|b|+|c|-1}(w_b + w_c)
    {
        WeightVector w = b.weight + c.weight;
        size_t deg = b.degree + c.degree - 1;
        if (deg <= cache.dim()) {
            const auto& dc = cache.coh(w).by_degree[deg];
            for (size_t k = 0; k < dc.dim; ++k) {
                CohClass h{w, deg, Vec(dc.dim)};
                h.coords[k] = ScalarValue(1);
                push_class(cup_product(cache, a, h));
            }
        }
    }
    // H^{|a|+|b|-1}(w_a + w_b) . c
    {
        WeightVector w = a.weight + b.weight;
        size_t deg = a.degree + b.degree - 1;
        if (deg <= cache.dim()) {
            const auto& dc = cache.coh(w).by_degree[deg];
            for (size_t k = 0; k < dc.dim; ++k) {
                CohClass h{w, deg, Vec(dc.dim)};
                h.coords[k] = ScalarValue(1);
                push_class(cup_product(cache, h, c));
            }
        }
    }
    return span_basis(gens, target_dim);
}

MasseyResult massey_core(SliceCache& cache, const CohClass& a, const CohClass& b,
                         const CohClass& c, const FormTerms& fa, const FormTerms& fb,
                         const FormTerms& fc, const Vec* x_shift, const Vec* y_shift) {
    CohClass ab = cup_product(cache, a, b);
    CohClass bc = cup_product(cache, b, c);
    if (!ab.is_zero() || !bc.is_zero())
        throw MathError(ErrorCode::NotComposable, "cup products do not vanish");

    const ExteriorBasis& ext = cache.exterior();
    WeightVector w_ab = a.weight + b.weight;
    WeightVector w_bc = b.weight + c.weight;
    size_t deg_ab = a.degree + b.degree;
    size_t deg_bc = b.degree + c.degree;

    Vec x = solve_primitive(cache, w_ab, deg_ab, wedge(fa, fb));
    Vec y = solve_primitive(cache, w_bc, deg_bc, wedge(fb, fc));
    auto add_cocycle_shift = [&](Vec& base, const Vec* shift, const WeightVector& w, size_t deg) {
        if (!shift) return;
        const DGASlice& s = cache.slice(w);
        if (!vec_is_zero(s.d[deg - 1].apply(*shift)))
            throw MathError(ErrorCode::NotComposable, "defining-system shift is not a cocycle");
        base = vec_add(base, *shift);
    };
    add_cocycle_shift(x, x_shift, w_ab, deg_ab);
    add_cocycle_shift(y, y_shift, w_bc, deg_bc);

    FormTerms x_form = ext.form(deg_ab - 1, x);
    FormTerms y_form = ext.form(deg_bc - 1, y);
    FormTerms value = wedge(x_form, fc);
    ScalarValue sign((a.degree % 2) ? -1 : 1);
    add_scaled(value, wedge(fa, y_form), -sign);

    MasseyResult res;
    res.weight = a.weight + b.weight + c.weight;
    res.degree = a.degree + b.degree + c.degree - 1;
    WeightedForm wf{res.degree, res.weight, std::move(value)};
    res.value = project_form(cache, wf);
    res.indeterminacy = indeterminacy_basis(cache, a, b, c, res.weight, res.degree);
    res.nonzero_mod_indeterminacy =
        !res.value.is_zero() &&
        !in_span(res.indeterminacy, res.value.coords, res.value.coords.size());
    return res;
}

} // namespace

MasseyResult massey_triple(SliceCache& cache, const CohClass& a, const CohClass& b,
                           const CohClass& c) {
    return massey_core(cache, a, b, c, class_representative(cache, a),
                       class_representative(cache, b), class_representative(cache, c), nullptr,
                       nullptr);
}

MasseyResult massey_triple_perturbed(SliceCache& cache, const CohClass& a, const CohClass& b,
                                     const CohClass& c, const Vec& x_shift, const Vec& y_shift) {
    return massey_core(cache, a, b, c, class_representative(cache, a),
                       class_representative(cache, b), class_representative(cache, c), &x_shift,
                       &y_shift);
}

// ---- minimal model -----------------------------------------------------------------------

MinimalModelPresentation invariant_subdga(const LieAlgebra& g, const AdSData& ads) {
    size_t n = g.dim();
    const Matrix& P = ads.diagonal_basis;

    std::vector<std::string> names(n);
    {
        bool unit_cols = true;
        std::set<std::string> used;
        for (size_t k = 0; k < n && unit_cols; ++k) {
            size_t hits = 0, where = 0;
            for (size_t i = 0; i < n; ++i)
                if (!P.at(i, k).is_zero()) {
                    ++hits;
                    where = i;
                }
            if (hits != 1 || P.at(where, k) != ScalarValue(1) || used.count(g.basis_names()[where]))
                unit_cols = false;
            else {
                names[k] = g.basis_names()[where];
                used.insert(names[k]);
            }
        }
        if (!unit_cols)
            for (size_t k = 0; k < n; ++k) names[k] = "y" + std::to_string(k + 1);
    }

    MinimalModelPresentation pres{
        names,
        change_of_basis(unipotent_hull(g, ads).underlying, P, names),
        ads.weights,
        {},
        ads.diagonal_dual,
    };

    // The free-DGA differential in closed form, checked coefficientwise
    // against the Chevalley-Eilenberg differential of the hull.
    LieAlgebra g_diag = change_of_basis(g, P, names);
    CEDifferential hull_d(pres.dual_algebra, {});
    pres.dy.resize(n);
    for (size_t k = 0; k < n; ++k) {
        FormTerms formula;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                const ScalarValue& c = g_diag.c(i, j, k);
                if (c.is_zero()) continue;
                add_term(formula, (Monomial(1) << i) | (Monomial(1) << j), -c);
            }
        for (size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            ScalarValue aik = ads.eigencoeff(i, k);
            if (aik.is_zero()) continue;
            // y_i ^ y_k with the stored monomial ascending.
            if (i > k) aik = -aik;
            add_term(formula, (Monomial(1) << i) | (Monomial(1) << k), aik);
        }
        FormTerms diff = formula;
        add_scaled(diff, hull_d.dx(k), ScalarValue(-1));
        if (!terms_zero(diff))
            throw MathError(ErrorCode::HullBracketInvalid,
                            "free-DGA differential disagrees with the hull dual on generator " +
                                names[k]);
        pres.dy[k] = std::move(formula);
    }
    ValidationReport rep = validate(pres.dual_algebra);
    if (!rep.jacobi_ok)
        throw MathError(ErrorCode::HullBracketInvalid, "minimal model differential fails d^2 = 0");
    return pres;
}

// ---- quasi-isomorphism ---------------------------------------------------------------------

QuasiIsoReport verify_quasi_iso(SliceCache& cache, bool throw_on_fail) {
    const LieAlgebra& g = cache.algebra();
    size_t n = g.dim();
    const ExteriorBasis& ext = cache.exterior();
    MinimalModelPresentation pres = invariant_subdga(g, cache.ads());

    DGASlice model = ce_differential(pres.dual_algebra);
    CohomologyBasis model_coh = cohomology(model);

    // Generator images q_k = x_k^diag tensor v_{lambda_k}.
    std::vector<FormTerms> q(n);
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j)
            add_term(q[k], Monomial(1) << j, pres.morphism_rows.at(k, j));

    auto push_monomial = [&](Monomial mono) {
        // wedge of generator images, ascending bit order
        FormTerms img{{Monomial(0), ScalarValue(1)}};
        WeightVector w = WeightVector::zero(n);
        for (Monomial t = mono; t; t &= t - 1) {
            size_t k = static_cast<size_t>(std::countr_zero(t));
            img = wedge(img, q[k]);
            w = w + pres.generator_weights[k];
        }
        return std::make_pair(std::move(img), std::move(w));
    };

    // Chain-map property on generators.
    for (size_t k = 0; k < n; ++k) {
        FormTerms pushed;
        for (const auto& [mono, coeff] : pres.dy[k]) {
            auto [img, w] = push_monomial(mono);
            if (!(w == pres.generator_weights[k]))
                throw MathError(ErrorCode::QuasiIsoFails,
                                "minimal-model differential mixes weights on generator " +
                                    pres.generator_names[k]);
            add_scaled(pushed, img, coeff);
        }
        const DGASlice& s = cache.slice(pres.generator_weights[k]);
        Vec dq = s.d[1].apply(ext.coords(1, q[k]));
        Vec lhs = ext.coords(2, pushed);
        if (!vec_is_zero(vec_sub(dq, lhs)))
            throw MathError(ErrorCode::QuasiIsoFails,
                            "morphism is not a chain map on generator " + pres.generator_names[k]);
    }

    QuasiIsoReport report;
    report.model_dims = model_coh.dims();
    report.total_dims.assign(n + 1, 0);
    const auto& sws = cache.weights();
    std::vector<std::vector<size_t>> wdims;
    for (const auto& sw : sws) wdims.push_back(cache.coh(sw.weight).dims());
    for (const auto& dims : wdims)
        for (size_t p = 0; p <= n; ++p) report.total_dims[p] += dims[p];

    report.degree_iso.assign(n + 1, false);
    report.ok = true;
    for (size_t p = 0; p <= n; ++p) {
        size_t total = report.total_dims[p];
        // Offsets of each weight's classes inside the concatenated space.
        std::vector<size_t> offset(sws.size(), 0);
        {
            size_t acc = 0;
            for (size_t widx = 0; widx < sws.size(); ++widx) {
                offset[widx] = acc;
                acc += wdims[widx][p];
            }
        }
        size_t n_reps = model_coh.by_degree[p].representatives.size();
        // Batch the projections per weight: one elimination per slice degree.
        std::vector<std::vector<std::pair<size_t, Vec>>> pending(sws.size());
        for (size_t rep_idx = 0; rep_idx < n_reps; ++rep_idx) {
            const auto& rep = model_coh.by_degree[p].representatives[rep_idx];
            std::map<size_t, FormTerms> buckets;
            FormTerms yform = ext.form(p, rep);
            for (const auto& [mono, coeff] : yform) {
                auto [img, w] = push_monomial(mono);
                size_t widx = sws.size();
                for (size_t t = 0; t < sws.size(); ++t)
                    if (sws[t].weight == w) {
                        widx = t;
                        break;
                    }
                if (widx == sws.size())
                    throw MathError(ErrorCode::QuasiIsoFails,
                                    "pushed monomial weight is not a subset sum");
                add_scaled(buckets[widx], img, coeff);
            }
            for (const auto& [widx, terms] : buckets) {
                if (terms_zero(terms)) continue;
                Vec coords = ext.coords(p, terms);
                const DGASlice& s = cache.slice(sws[widx].weight);
                if (!vec_is_zero(s.d[p].apply(coords)))
                    throw MathError(ErrorCode::QuasiIsoFails, "pushed representative is not closed");
                pending[widx].emplace_back(rep_idx, std::move(coords));
            }
        }
        std::vector<Vec> columns(n_reps, Vec(total));
        for (size_t widx = 0; widx < sws.size(); ++widx) {
            if (pending[widx].empty()) continue;
            std::vector<Vec> cocycles;
            cocycles.reserve(pending[widx].size());
            for (auto& [rep_idx, coords] : pending[widx]) cocycles.push_back(std::move(coords));
            std::vector<Vec> classes =
                cache.coh(sws[widx].weight).by_degree[p].project_many(cocycles);
            for (size_t t = 0; t < pending[widx].size(); ++t) {
                size_t rep_idx = pending[widx][t].first;
                for (size_t k = 0; k < classes[t].size(); ++k)
                    columns[rep_idx][offset[widx] + k] = classes[t][k];
            }
        }
        bool dims_match = report.model_dims[p] == total;
        bool full_rank = true;
        if (!columns.empty()) {
            full_rank = rank(Matrix::from_columns(columns, total)) == columns.size();
        }
        report.degree_iso[p] = dims_match && full_rank;
        if (!report.degree_iso[p]) report.ok = false;
    }
    if (!report.ok && throw_on_fail)
        throw MathError(ErrorCode::QuasiIsoFails,
                        "minimal model does not induce a cohomology isomorphism");
    return report;
}

// ---- formality -----------------------------------------------------------------------------

FormalityReport formality_verdict(SliceCache& cache, const HullAlgebra& hull, bool search_witness,
                                   size_t witness_budget) {
    FormalityReport rep;
    AbelianVerdict verdict = is_abelian(hull);
    rep.formal = verdict.abelian;
    rep.criterion = "hull-abelian-equivalence";
    rep.hull_witness = verdict.witness;
    if (rep.formal || !search_witness) return rep;

    // Best-effort diagnostic: search degree-1 Massey triples.
    std::vector<CohClass> ones;
    for (const auto& sw : cache.weights()) {
        const auto& dc = cache.coh(sw.weight).by_degree[1];
        for (size_t k = 0; k < dc.dim && ones.size() < 64; ++k) {
            CohClass c{sw.weight, 1, Vec(dc.dim)};
            c.coords[k] = ScalarValue(1);
            ones.push_back(std::move(c));
        }
    }
    size_t budget = witness_budget;
    for (size_t ia = 0; ia < ones.size() && budget; ++ia)
        for (size_t ib = 0; ib < ones.size() && budget; ++ib) {
            if (!cup_product(cache, ones[ia], ones[ib]).is_zero()) continue;
            for (size_t ic = 0; ic < ones.size() && budget; ++ic) {
                if (!cup_product(cache, ones[ib], ones[ic]).is_zero()) continue;
                --budget;
                MasseyResult mr = massey_triple(cache, ones[ia], ones[ib], ones[ic]);
                if (mr.nonzero_mod_indeterminacy) {
                    auto label = [&](const CohClass& c) {
                        return "[" +
                               form_to_string(class_representative(cache, c),
                                              cache.algebra().basis_names()) +
                               "]";
                    };
                    rep.massey = MasseyWitness{
                        "<" + label(ones[ia]) + ", " + label(ones[ib]) + ", " + label(ones[ic]) +
                            ">",
                        std::move(mr)};
                    return rep;
                }
            }
        }
    return rep;
}

// ---- hard Lefschetz -------------------------------------------------------------------------

bool LefschetzReport::all_iso() const {
    return std::all_of(iso_by_degree.begin(), iso_by_degree.end(), [](bool b) { return b; });
}

LefschetzReport hard_lefschetz(SliceCache& cache, const FormTerms& omega) {
    size_t n = cache.dim();
    if (n % 2 != 0)
        throw MathError(ErrorCode::OddDimension, "hard Lefschetz needs even dimension");
    size_t m = n / 2;
    for (const auto& [mono, c] : omega)
        if (monomial_degree(mono) != 2)
            throw MathError(ErrorCode::NotSymplectic, "omega must be homogeneous of degree 2");

    CEDifferential d0(cache.algebra(), {});
    if (!terms_zero(d0.apply(omega)))
        throw MathError(ErrorCode::NotSymplectic, "omega is not closed");

    std::vector<FormTerms> pow(m + 1);
    pow[0] = FormTerms{{Monomial(0), ScalarValue(1)}};
    for (size_t t = 1; t <= m; ++t) pow[t] = wedge(pow[t - 1], omega);
    if (terms_zero(pow[m]))
        throw MathError(ErrorCode::NotSymplectic, "omega^n vanishes; omega is degenerate");

    const ExteriorBasis& ext = cache.exterior();
    LefschetzReport rep;
    rep.half_dim = m;
    rep.iso_by_degree.assign(m + 1, true);
    for (size_t i = 0; i <= m; ++i) {
        const FormTerms& mult = pow[m - i];
        for (const auto& sw : cache.weights()) {
            const auto& src = cache.coh(sw.weight).by_degree[i];
            const auto& dst = cache.coh(sw.weight).by_degree[n - i];
            if (src.dim == 0 && dst.dim == 0) continue;
            bool ok = src.dim == dst.dim;
            std::string witness;
            if (src.dim > 0) {
                std::vector<Vec> images;
                for (const auto& r : src.representatives)
                    images.push_back(ext.coords(n - i, wedge(mult, ext.form(i, r))));
                std::vector<Vec> cols = dst.project_many(images);
                std::vector<Vec> ker = nullspace(Matrix::from_columns(cols, dst.dim));
                if (!ker.empty()) {
                    ok = false;
                    FormTerms kf;
                    for (size_t k = 0; k < src.dim; ++k)
                        if (!ker[0][k].is_zero())
                            add_scaled(kf, ext.form(i, src.representatives[k]), ker[0][k]);
                    witness = form_to_string(kf, cache.algebra().basis_names());
                }
            }
            if (ok && src.dim != dst.dim) {
                ok = false;
                witness = "dimension mismatch: " + std::to_string(src.dim) + " vs " +
                          std::to_string(dst.dim);
            }
            if (!ok) {
                rep.iso_by_degree[i] = false;
                rep.failures.push_back(LefschetzFailure{i, sw.weight, witness});
            }
        }
    }
    return rep;
}

} // namespace solvco
