#include "solvco/lie.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "solvco/errors.hpp"

namespace solvco {

// ---- WeightVector -----------------------------------------------------------

WeightVector WeightVector::zero(size_t dim) {
    WeightVector w;
    w.values.assign(dim, ScalarValue());
    w.kind = Kind::Zero;
    return w;
}

ScalarValue WeightVector::apply(const Vec& v) const {
    ScalarValue acc;
    for (size_t k = 0; k < values.size(); ++k)
        if (!values[k].is_zero() && !v[k].is_zero()) acc += values[k] * v[k];
    return acc;
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
    WeightVector w;
    w.values = vec_add(values, o.values);
    w.kind = w.is_zero() ? Kind::Zero : Kind::SubsetSum;
    return w;
}

bool operator==(const WeightVector& a, const WeightVector& b) {
    if (a.values.size() != b.values.size()) return false;
    for (size_t k = 0; k < a.values.size(); ++k)
        if (a.values[k] != b.values[k]) return false;
    return true;
}

std::string WeightVector::to_string(const std::vector<std::string>& basis_names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < values.size(); ++k) {
        if (values[k].is_zero()) continue;
        std::string c = values[k].to_string();
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")*" << basis_names[k] << "'";
    }
    return os.str();
}

// ---- LieAlgebra --------------------------------------------------------------

LieAlgebra::LieAlgebra(size_t dim, std::vector<std::string> basis_names, ParamTable params)
    : dim_(dim),
      basis_names_(std::move(basis_names)),
      params_(std::move(params)),
      c_(dim * dim * dim) {
    if (basis_names_.size() != dim_)
        throw ParseError("basis name count does not match dimension");
}

void LieAlgebra::set_bracket(size_t i, size_t j, size_t k, ScalarValue v) {
    if (i == j) {
        if (!v.is_zero()) throw ParseError("bracket [x,x] must vanish");
        return;
    }
    if (i > j) {
        set_bracket(j, i, k, -v);
        return;
    }
    c_[(i * dim_ + j) * dim_ + k] = std::move(v);
}

const ScalarValue& LieAlgebra::c(size_t i, size_t j, size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
}

Vec LieAlgebra::bracket_basis(size_t i, size_t j) const {
    Vec out(dim_);
    if (i == j) return out;
    if (i < j) {
        for (size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    } else {
        for (size_t k = 0; k < dim_; ++k) out[k] = -c(j, i, k);
    }
    return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec out(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (i == j || y[j].is_zero()) continue;
            ScalarValue coeff = x[i] * y[j];
            Vec b = bracket_basis(i, j);
            for (size_t k = 0; k < dim_; ++k)
                if (!b[k].is_zero()) out[k] += coeff * b[k];
        }
    }
    return out;
}

Matrix LieAlgebra::ad_basis(size_t i) const {
    Matrix m(dim_, dim_);
    for (size_t j = 0; j < dim_; ++j) {
        Vec b = bracket_basis(i, j);
        for (size_t k = 0; k < dim_; ++k) m.at(k, j) = b[k];
    }
    return m;
}

Matrix LieAlgebra::ad(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        Matrix mi = ad_basis(i);
        m = m + x[i] * mi;
    }
    return m;
}

bool LieAlgebra::is_abelian() const {
    return std::all_of(c_.begin(), c_.end(), [](const ScalarValue& v) { return v.is_zero(); });
}

size_t LieAlgebra::basis_index(const std::string& name) const {
    auto it = std::find(basis_names_.begin(), basis_names_.end(), name);
    if (it == basis_names_.end()) throw ParseError("unknown basis name '" + name + "'");
    return static_cast<size_t>(it - basis_names_.begin());
}

LieAlgebra LieAlgebra::substitute(const std::map<std::string, ScalarValue>& bindings) const {
    ParamTable params;
    for (const auto& [name, kind] : params_)
        if (!bindings.count(name)) params.emplace(name, kind);
    LieAlgebra out(dim_, basis_names_, params);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = i + 1; j < dim_; ++j)
            for (size_t k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero()) out.set_bracket(i, j, k, c(i, j, k).substitute(bindings));
    return out;
}

LieAlgebra LieAlgebra::permuted(const std::vector<size_t>& perm) const {
    std::vector<std::string> names(dim_);
    for (size_t i = 0; i < dim_; ++i) names[i] = basis_names_[perm[i]];
    LieAlgebra out(dim_, names, params_);
    // new basis vector e'_i = b_{perm[i]}
    std::vector<size_t> inv(dim_);
    for (size_t i = 0; i < dim_; ++i) inv[perm[i]] = i;
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = i + 1; j < dim_; ++j) {
            Vec b = bracket_basis(perm[i], perm[j]);
            for (size_t k = 0; k < dim_; ++k)
                if (!b[k].is_zero()) out.set_bracket(i, j, inv[k], b[k]);
        }
    return out;
}

// ---- validation and series ----------------------------------------------------

ValidationReport validate(const LieAlgebra& g) {
    ValidationReport rep;
    size_t n = g.dim();
    for (size_t i = 0; i < n && rep.jacobi_ok; ++i)
        for (size_t j = i + 1; j < n && rep.jacobi_ok; ++j)
            for (size_t k = j + 1; k < n && rep.jacobi_ok; ++k) {
                Vec ei(n), ej(n), ek(n);
                ei[i] = ScalarValue(1);
                ej[j] = ScalarValue(1);
                ek[k] = ScalarValue(1);
                Vec s = vec_add(vec_add(g.bracket(g.bracket_basis(i, j), ek),
                                        g.bracket(g.bracket_basis(j, k), ei)),
                                g.bracket(g.bracket_basis(k, i), ej));
                if (!vec_is_zero(s)) {
                    rep.jacobi_ok = false;
                    rep.jacobi_witness = {{i, j, k}};
                }
            }
    if (!rep.jacobi_ok) return rep;
    auto ds = derived_series(g);
    rep.derived_length = ds.size();
    rep.solvable = ds.empty() || ds.back().dim() == 0;
    auto ls = lower_central_series(g);
    rep.lower_central_length = ls.size();
    rep.nilpotent = ls.empty() || ls.back().dim() == 0;
    return rep;
}

void require_valid_solvable(const LieAlgebra& g) {
    ValidationReport rep = validate(g);
    if (!rep.jacobi_ok) {
        auto [i, j, k] = *rep.jacobi_witness;
        throw MathError(ErrorCode::JacobiFails,
                        "Jacobi identity fails on basis triple (" + g.basis_names()[i] + ", " +
                            g.basis_names()[j] + ", " + g.basis_names()[k] + ")",
                        std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k));
    }
    if (!rep.solvable)
        throw MathError(ErrorCode::NotSolvable, "the algebra is not solvable");
}

namespace {

Subspace full_space(size_t n) {
    Subspace s;
    for (size_t i = 0; i < n; ++i) {
        Vec v(n);
        v[i] = ScalarValue(1);
        s.basis.push_back(std::move(v));
    }
    return s;
}

// Generalized 0-eigenspace, via the kernel chain ker A ⊆ ker A^2 ⊆ ...
// stopping at stabilization to keep entry degrees small.
std::vector<Vec> fitting_null(const Matrix& a) {
    size_t n = a.rows();
    Matrix b = a;
    size_t prev = rank(b);
    for (size_t k = 1; k < n && prev > 0; ++k) {
        Matrix b2 = b * a;
        size_t r = rank(b2);
        if (r == prev) break;
        b = std::move(b2);
        prev = r;
    }
    return span_basis(nullspace(b), n);
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens;
    for (const auto& x : a.basis)
        for (const auto& y : b.basis) {
            Vec v = g.bracket(x, y);
            if (!vec_is_zero(v)) gens.push_back(std::move(v));
        }
    Subspace out;
    out.basis = span_basis(gens, g.dim());
    return out;
}

} // namespace

std::vector<Subspace> derived_series(const LieAlgebra& g) {
    std::vector<Subspace> series{full_space(g.dim())};
    while (true) {
        Subspace next = bracket_span(g, series.back(), series.back());
        if (next.dim() == series.back().dim()) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    std::vector<Subspace> series{full_space(g.dim())};
    while (true) {
        Subspace next = bracket_span(g, series.front(), series.back());
        if (next.dim() == series.back().dim()) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

// ---- Cartan subalgebra ---------------------------------------------------------

namespace {

// Structure constants of a subalgebra in its own basis; nullopt when the
// span is not closed under the bracket.
std::optional<LieAlgebra> restricted_algebra(const LieAlgebra& g, const Subspace& h) {
    size_t k = h.dim();
    std::vector<std::string> names(k);
    for (size_t a = 0; a < k; ++a) names[a] = "u" + std::to_string(a);
    LieAlgebra sub(k, names, g.params());
    if (k == 0) return sub;
    Matrix H = Matrix::from_columns(h.basis, g.dim());
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b) {
            Vec br = g.bracket(h.basis[a], h.basis[b]);
            auto coords = solve(H, br);
            if (!coords) return std::nullopt;
            for (size_t c = 0; c < k; ++c)
                if (!(*coords)[c].is_zero()) sub.set_bracket(a, b, c, (*coords)[c]);
        }
    return sub;
}

bool is_nilpotent_algebra(const LieAlgebra& g) {
    auto lcs = lower_central_series(g);
    return lcs.empty() || lcs.back().dim() == 0;
}

bool is_self_normalizing(const LieAlgebra& g, const Subspace& h) {
    size_t n = g.dim();
    // x normalizes h iff [x, H] lies in h for each basis element H.  Cut h
    // out by functionals vanishing on it and stack the conditions.
    std::vector<Vec> complement_rows =
        nullspace(Matrix::from_columns(h.basis, n).transpose());
    std::vector<Vec> condition_rows;
    for (const auto& hb : h.basis) {
        Matrix adH = g.ad(hb);
        for (const auto& phi : complement_rows) {
            // row: x |-> phi([hb, x]) must vanish... note [x, hb] = -[hb, x].
            Vec row(n);
            for (size_t j = 0; j < n; ++j) {
                Vec col = adH.column(j);
                ScalarValue acc;
                for (size_t t = 0; t < n; ++t)
                    if (!phi[t].is_zero() && !col[t].is_zero()) acc += phi[t] * col[t];
                row[j] = acc;
            }
            condition_rows.push_back(std::move(row));
        }
    }
    if (condition_rows.empty()) return h.dim() == n;
    std::vector<Vec> normalizer = nullspace(Matrix::from_rows(condition_rows));
    return normalizer.size() == h.dim();
}

} // namespace

Subspace cartan_subalgebra(const LieAlgebra& g, size_t candidate_bound) {
    size_t n = g.dim();
    if (g.is_abelian()) return full_space(n);

    // First the structured candidates, then dense small-coefficient
    // combinations (a generic element is regular).  Any verified output is a
    // Cartan subalgebra, so a staged first-hit search is sound.
    std::vector<std::vector<Vec>> stages;
    {
        std::vector<Vec> basis_stage;
        for (size_t i = 0; i < n; ++i) {
            Vec v(n);
            v[i] = ScalarValue(1);
            basis_stage.push_back(std::move(v));
        }
        stages.push_back(std::move(basis_stage));
    }
    {
        std::vector<Vec> pair_stage;
        for (long c = 1; c <= 3; ++c)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    Vec v(n);
                    v[i] = ScalarValue(1);
                    v[j] = ScalarValue(c);
                    pair_stage.push_back(std::move(v));
                }
        stages.push_back(std::move(pair_stage));
    }
    {
        std::vector<Vec> dense_stage;
        dense_stage.push_back(Vec(n, ScalarValue(1)));
        Vec ramp(n);
        for (size_t j = 0; j < n; ++j) ramp[j] = ScalarValue(long(j + 1));
        dense_stage.push_back(std::move(ramp));
        uint64_t state = 0x9E3779B97F4A7C15ull;
        auto next = [&state]() {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return long((state >> 33) % 5) + 1;
        };
        while (dense_stage.size() < std::max<size_t>(candidate_bound / 4, 8)) {
            Vec v(n);
            for (size_t j = 0; j < n; ++j) v[j] = ScalarValue(next());
            dense_stage.push_back(std::move(v));
        }
        stages.push_back(std::move(dense_stage));
    }

    // Within the structured stages, score everything and try minimal Fitting
    // dimension first; dense candidates stream with first-verified-wins
    // (every verified subspace is a Cartan subalgebra).
    size_t tried = 0;
    size_t try_limit = candidate_bound + 3 * n * n;
    for (size_t stage_idx = 0; stage_idx < stages.size(); ++stage_idx) {
        const auto& stage = stages[stage_idx];
        auto verify = [&](const Subspace& h) {
            if (h.dim() == 0 || h.dim() == n) return false;
            auto sub = restricted_algebra(g, h);
            if (!sub) return false;
            if (!is_nilpotent_algebra(*sub)) return false;
            return is_self_normalizing(g, h);
        };
        if (stage_idx + 1 < stages.size()) {
            struct Scored {
                size_t fitting_dim;
                size_t index;
            };
            std::vector<Scored> scored;
            std::vector<Subspace> fitting(stage.size());
            for (size_t idx = 0; idx < stage.size() && tried < try_limit; ++idx, ++tried) {
                fitting[idx].basis = fitting_null(g.ad(stage[idx]));
                scored.push_back({fitting[idx].dim(), idx});
            }
            std::stable_sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
                return a.fitting_dim < b.fitting_dim;
            });
            for (const auto& s : scored)
                if (verify(fitting[s.index])) return fitting[s.index];
        } else {
            for (size_t idx = 0; idx < stage.size() && tried < try_limit; ++idx, ++tried) {
                Subspace h;
                h.basis = fitting_null(g.ad(stage[idx]));
                if (verify(h)) return h;
            }
        }
    }
    throw MathError(ErrorCode::RegularElementNotFound,
                    "no regular element found within the candidate bound");
}

// ---- nilradical -----------------------------------------------------------------

namespace {

Subspace nilradical_with_cartan(const LieAlgebra& g, const Subspace& h) {
    size_t n = g.dim();
    std::vector<Matrix> sm;
    for (const auto& hb : h.basis) sm.push_back(jordan_chevalley(g.ad(hb)).semisimple);
    std::vector<WeightSpace> spaces = simultaneous_weights(sm);

    std::vector<Vec> gens;
    // Nonzero-weight spaces enter whole.
    std::vector<Vec> nonzero_weight_tuples;
    for (const auto& ws : spaces) {
        bool zero = std::all_of(ws.eigenvalues.begin(), ws.eigenvalues.end(),
                                [](const ScalarValue& v) { return v.is_zero(); });
        if (zero) continue;
        nonzero_weight_tuples.push_back(ws.eigenvalues);
        for (const auto& b : ws.basis) gens.push_back(b);
    }
    // Plus the h-directions annihilated by every nonzero weight.
    if (nonzero_weight_tuples.empty()) {
        for (const auto& b : h.basis) gens.push_back(b);
    } else {
        Matrix cond(nonzero_weight_tuples.size(), h.dim());
        for (size_t r = 0; r < nonzero_weight_tuples.size(); ++r)
            for (size_t cidx = 0; cidx < h.dim(); ++cidx)
                cond.at(r, cidx) = nonzero_weight_tuples[r][cidx];
        for (const auto& xi : nullspace(cond)) {
            Vec v(n);
            for (size_t cidx = 0; cidx < h.dim(); ++cidx)
                if (!xi[cidx].is_zero()) v = vec_add(v, vec_scale(xi[cidx], h.basis[cidx]));
            gens.push_back(std::move(v));
        }
    }
    Subspace nil;
    nil.basis = span_basis(gens, n);

    // The result must be a nilpotent ideal containing the derived subalgebra.
    for (size_t i = 0; i < n; ++i)
        for (const auto& b : nil.basis) {
            Vec ei(n);
            ei[i] = ScalarValue(1);
            if (!nil.contains(g.bracket(ei, b), n))
                throw MathError(ErrorCode::FieldTooSmall, "nilradical candidate is not an ideal");
        }
    auto sub = restricted_algebra(g, nil);
    if (!sub || !is_nilpotent_algebra(*sub))
        throw MathError(ErrorCode::FieldTooSmall, "nilradical candidate is not nilpotent");
    Subspace derived = bracket_span(g, full_space(n), full_space(n));
    for (const auto& b : derived.basis)
        if (!nil.contains(b, n))
            throw MathError(ErrorCode::FieldTooSmall,
                            "nilradical candidate misses the derived subalgebra");
    return nil;
}

} // namespace

Subspace nilradical(const LieAlgebra& g) {
    if (is_nilpotent_algebra(g)) return full_space(g.dim());
    return nilradical_with_cartan(g, cartan_subalgebra(g));
}

// ---- construct_ads ----------------------------------------------------------------

Matrix AdSData::ads_of(const Vec& x) const {
    size_t n = dim();
    Matrix out(n, n);
    if (sm_on_V.empty()) return out;
    Vec xi = v_coords.apply(x);
    for (size_t j = 0; j < sm_on_V.size(); ++j)
        if (!xi[j].is_zero()) out = out + xi[j] * sm_on_V[j];
    return out;
}

Matrix AdSData::ads_of_basis(size_t i) const {
    Vec e(dim());
    e[i] = ScalarValue(1);
    return ads_of(e);
}

ScalarValue AdSData::eigencoeff(size_t i, size_t k) const {
    return weights[k].apply(diagonal_basis.column(i));
}

AdSData construct_ads(const LieAlgebra& g) {
    size_t n = g.dim();
    AdSData data;

    if (is_nilpotent_algebra(g)) {
        // ad is already nilpotent; its semisimple part vanishes.
        data.V.basis = {};
        data.nilrad = full_space(n);
        data.v_coords = Matrix(0, n);
        data.diagonal_basis = Matrix::identity(n);
        data.diagonal_dual = Matrix::identity(n);
        data.weights.assign(n, WeightVector::zero(n));
        return data;
    }

    Subspace h = cartan_subalgebra(g);
    Subspace nil = nilradical_with_cartan(g, h);
    data.nilrad = nil;

    // V = a complement of h ∩ n inside h, realized by greedy extension.
    std::vector<Vec> hn_intersection;
    {
        // x in h ∩ n iff x = H xi = N eta: kernel of the stacked [H | -N].
        Matrix H = Matrix::from_columns(h.basis, n);
        Matrix N = Matrix::from_columns(nil.basis, n);
        Matrix stacked(n, h.dim() + nil.dim());
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < h.dim(); ++j) stacked.at(i, j) = H.at(i, j);
            for (size_t j = 0; j < nil.dim(); ++j) stacked.at(i, h.dim() + j) = -N.at(i, j);
        }
        for (const auto& k : nullspace(stacked)) {
            Vec x(n);
            for (size_t j = 0; j < h.dim(); ++j)
                if (!k[j].is_zero()) x = vec_add(x, vec_scale(k[j], h.basis[j]));
            if (!vec_is_zero(x)) hn_intersection.push_back(std::move(x));
        }
    }
    std::vector<Vec> accum = span_basis(hn_intersection, n);
    for (const auto& hb : h.basis) {
        if (in_span(accum, hb, n)) continue;
        data.V.basis.push_back(hb);
        std::vector<Vec> aug = accum;
        aug.push_back(hb);
        accum = span_basis(aug, n);
    }
    if (data.V.dim() + nil.dim() != n)
        throw MathError(ErrorCode::FieldTooSmall, "V does not complement the nilradical");

    // Semisimple parts over the V basis.
    for (const auto& A : data.V.basis) data.sm_on_V.push_back(jordan_chevalley(g.ad(A)).semisimple);

    // Construction requirements: (ad_A)_s kills V, and the image is abelian.
    for (const auto& S : data.sm_on_V)
        for (const auto& B : data.V.basis)
            if (!vec_is_zero(S.apply(B)))
                throw MathError(ErrorCode::FieldTooSmall,
                                "semisimple part does not annihilate the complement V");
    for (size_t a = 0; a < data.sm_on_V.size(); ++a)
        for (size_t b = a + 1; b < data.sm_on_V.size(); ++b)
            if (data.sm_on_V[a] * data.sm_on_V[b] != data.sm_on_V[b] * data.sm_on_V[a])
                throw MathError(ErrorCode::NotCommuting, "ad_s image is not abelian");

    // V-coordinate extraction: solve [V | N] x = b and keep the V block.
    {
        Matrix VN(n, n);
        for (size_t j = 0; j < data.V.dim(); ++j)
            for (size_t i = 0; i < n; ++i) VN.at(i, j) = data.V.basis[j][i];
        for (size_t j = 0; j < nil.dim(); ++j)
            for (size_t i = 0; i < n; ++i) VN.at(i, data.V.dim() + j) = nil.basis[j][i];
        Matrix inv = inverse(VN);
        data.v_coords = Matrix(data.V.dim(), n);
        for (size_t i = 0; i < data.V.dim(); ++i)
            for (size_t j = 0; j < n; ++j) data.v_coords.at(i, j) = inv.at(i, j);
    }

    // ad_s is a homomorphism with abelian image: it must kill brackets.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Vec br = g.bracket_basis(i, j);
            if (vec_is_zero(br)) continue;
            if (!data.ads_of(br).is_zero())
                throw MathError(ErrorCode::FieldTooSmall, "ad_s does not vanish on [g, g]");
        }

    // Joint diagonalization and weights.
    std::vector<WeightSpace> spaces = simultaneous_weights(data.sm_on_V);
    std::vector<Vec> diag_cols;
    std::vector<std::vector<ScalarValue>> eigen_tuples;
    for (const auto& ws : spaces)
        for (const auto& b : ws.basis) {
            diag_cols.push_back(b);
            eigen_tuples.push_back(ws.eigenvalues);
        }
    data.diagonal_basis = Matrix::from_columns(diag_cols, n);
    data.diagonal_dual = inverse(data.diagonal_basis);
    for (size_t t = 0; t < n; ++t) {
        WeightVector w;
        w.values.assign(n, ScalarValue());
        // lambda(b_j) = sum_a eigen_a * xi_a(b_j)
        for (size_t j = 0; j < n; ++j) {
            ScalarValue acc;
            for (size_t a = 0; a < data.V.dim(); ++a)
                if (!eigen_tuples[t][a].is_zero() && !data.v_coords.at(a, j).is_zero())
                    acc += eigen_tuples[t][a] * data.v_coords.at(a, j);
            w.values[j] = acc;
        }
        w.kind = w.is_zero() ? WeightVector::Kind::Zero : WeightVector::Kind::Basic;
        data.weights.push_back(std::move(w));
    }
    return data;
}

LieAlgebra change_of_basis(const LieAlgebra& g, const Matrix& P,
                           std::vector<std::string> new_names) {
    size_t n = g.dim();
    Matrix Pinv = inverse(P);
    LieAlgebra out(n, std::move(new_names), g.params());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Vec br = Pinv.apply(g.bracket(P.column(i), P.column(j)));
            for (size_t k = 0; k < n; ++k)
                if (!br[k].is_zero()) out.set_bracket(i, j, k, br[k]);
        }
    return out;
}

} // namespace solvco
