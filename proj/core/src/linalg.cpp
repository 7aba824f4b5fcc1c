#include "solvco/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "solvco/errors.hpp"
#include "solvco/genericity.hpp"

namespace solvco {

// ---- vectors ---------------------------------------------------------------

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

Vec vec_scale(const ScalarValue& c, const Vec& v) {
    Vec out(v.size());
    for (size_t k = 0; k < v.size(); ++k) out[k] = c * v[k];
    return out;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const ScalarValue& x) { return x.is_zero(); });
}

// ---- Matrix ----------------------------------------------------------------

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = ScalarValue(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, size_t rows) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Vec Matrix::row(size_t i) const {
    Vec out(cols_);
    for (size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

Vec Matrix::column(size_t j) const {
    Vec out(rows_);
    for (size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

std::vector<Vec> Matrix::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const ScalarValue& x) { return x.is_zero(); });
}

ScalarValue Matrix::trace() const {
    ScalarValue t;
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.entries_[k] - b.entries_[k];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const ScalarValue& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const ScalarValue& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

Matrix operator*(const ScalarValue& c, const Matrix& a) {
    Matrix m = a;
    for (auto& e : m.entries_) e = c * e;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t k = 0; k < a.entries_.size(); ++k)
        if (a.entries_[k] != b.entries_[k]) return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    Vec out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::power(size_t e) const {
    Matrix acc = Matrix::identity(rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// ---- genericity log ---------------------------------------------------------

namespace {
thread_local GenericityLog* g_active_log = nullptr;
}

GenericityScope::GenericityScope(GenericityLog& log) : previous_(g_active_log) {
    g_active_log = &log;
}

GenericityScope::~GenericityScope() { g_active_log = previous_; }

void GenericityScope::record_pivot(const ScalarValue& pivot) {
    if (!g_active_log) return;
    if (pivot.num().is_constant()) return;
    Poly p = pivot.num();
    Rational c = p.content();
    // Normalize to a primitive polynomial with positive leading coefficient.
    GaussRational lead = p.leading_coefficient();
    GaussRational unit(c);
    if (lead.im == 0 && lead.re < 0) unit = -unit;
    p.scale(GaussRational(Rational(1)) / unit);
    g_active_log->add(p.to_string());
}

// ---- fraction-free elimination ----------------------------------------------

namespace {

struct Echelon {
    std::vector<std::vector<Poly>> rows; // echelon rows (fraction-free)
    std::vector<size_t> pivot_cols;      // per pivot row, ascending
    size_t cols = 0;
    size_t rank() const { return pivot_cols.size(); }
};

std::vector<Poly> cleared_row(const Matrix& m, size_t i, const Vec* extra) {
    size_t n = m.cols() + (extra ? extra->size() : 0);
    std::vector<const ScalarValue*> src(n);
    for (size_t j = 0; j < m.cols(); ++j) src[j] = &m.at(i, j);
    if (extra)
        for (size_t j = 0; j < extra->size(); ++j) src[m.cols() + j] = &(*extra)[j];

    // Common denominator of the row (product of distinct denominators).
    Poly common = Poly::constant(GaussRational(1));
    for (size_t j = 0; j < n; ++j) {
        const Poly& d = src[j]->den();
        if (d.is_constant()) continue;
        if (!common.exact_divide(d)) common = common * d;
    }
    std::vector<Poly> out(n);
    for (size_t j = 0; j < n; ++j) {
        if (src[j]->is_zero()) continue;
        Poly scale = *common.exact_divide(src[j]->den());
        out[j] = src[j]->num() * scale;
    }
    // Strip rational content for size control.
    Rational g(0);
    for (const auto& p : out) {
        if (p.is_zero()) continue;
        Rational c = p.content();
        if (g == 0)
            g = c;
        else {
            mpz_class gn;
            mpz_gcd(gn.get_mpz_t(), g.get_num().get_mpz_t(), c.get_num().get_mpz_t());
            mpz_class gd;
            mpz_lcm(gd.get_mpz_t(), g.get_den().get_mpz_t(), c.get_den().get_mpz_t());
            g = Rational(gn, gd);
            g.canonicalize();
        }
    }
    if (g != 0 && g != 1) {
        GaussRational inv{Rational(1) / g};
        for (auto& p : out) p.scale(inv);
    }
    return out;
}

// Bareiss forward elimination; `extra_cols` marks a trailing augmented block
// that is never pivoted on.
Echelon eliminate(const Matrix& m, const std::vector<Vec>& extra, bool pivot_in_extra) {
    size_t n_extra = extra.empty() ? 0 : extra.size();
    size_t cols = m.cols() + n_extra;
    Echelon e;
    e.cols = cols;
    e.rows.reserve(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        if (n_extra) {
            Vec ex(n_extra);
            for (size_t j = 0; j < n_extra; ++j) ex[j] = extra[j][i];
            e.rows.push_back(cleared_row(m, i, &ex));
        } else {
            e.rows.push_back(cleared_row(m, i, nullptr));
        }
    }

    size_t pivot_limit = pivot_in_extra ? cols : m.cols();
    Poly prev = Poly::constant(GaussRational(1));
    size_t r = 0;
    for (size_t j = 0; j < pivot_limit && r < e.rows.size(); ++j) {
        // Pivot: least total degree, then fewest terms.
        size_t best = e.rows.size();
        for (size_t i = r; i < e.rows.size(); ++i) {
            if (e.rows[i][j].is_zero()) continue;
            if (best == e.rows.size()) {
                best = i;
                continue;
            }
            const Poly& a = e.rows[i][j];
            const Poly& b = e.rows[best][j];
            if (a.total_degree() < b.total_degree() ||
                (a.total_degree() == b.total_degree() && a.term_count() < b.term_count()))
                best = i;
        }
        if (best == e.rows.size()) continue;
        std::swap(e.rows[r], e.rows[best]);
        const Poly pivot = e.rows[r][j];
        GenericityScope::record_pivot(ScalarValue(pivot));
        const bool trivial_prev = prev.is_constant() && prev.constant_value().is_one();
        for (size_t i = r + 1; i < e.rows.size(); ++i) {
            Poly& lead = e.rows[i][j];
            if (lead.is_zero()) {
                // Bareiss still rescales untouched rows.
                for (size_t jj = j + 1; jj < cols; ++jj) {
                    if (e.rows[i][jj].is_zero()) continue;
                    Poly t = e.rows[i][jj] * pivot;
                    e.rows[i][jj] = trivial_prev ? std::move(t) : std::move(*t.exact_divide(prev));
                }
                continue;
            }
            for (size_t jj = j + 1; jj < cols; ++jj) {
                Poly t = e.rows[i][jj] * pivot - lead * e.rows[r][jj];
                if (t.is_zero()) {
                    e.rows[i][jj] = Poly();
                    continue;
                }
                e.rows[i][jj] = trivial_prev ? std::move(t) : std::move(*t.exact_divide(prev));
            }
            lead = Poly();
        }
        prev = pivot;
        e.pivot_cols.push_back(j);
        ++r;
    }
    return e;
}

// Back-substitution for a homogeneous/augmented system on the echelon form.
// `x` must be pre-filled on free columns; pivot columns get overwritten.
void back_substitute(const Echelon& e, Vec& x, size_t n_cols) {
    for (size_t ri = e.pivot_cols.size(); ri-- > 0;) {
        size_t pc = e.pivot_cols[ri];
        if (pc >= n_cols) continue;
        ScalarValue acc;
        for (size_t j = pc + 1; j < n_cols; ++j) {
            if (e.rows[ri][j].is_zero() || x[j].is_zero()) continue;
            acc += ScalarValue(e.rows[ri][j]) * x[j];
        }
        x[pc] = -acc / ScalarValue(e.rows[ri][pc]);
    }
}

} // namespace

Vec SparseMatrix::column_vec(size_t col) const {
    Vec v(rows);
    for (const auto& [r, val] : columns[col]) v[r] = val;
    return v;
}

Vec SparseMatrix::apply(const Vec& x) const {
    Vec out(rows);
    for (size_t j = 0; j < cols; ++j) {
        if (x[j].is_zero()) continue;
        for (const auto& [r, val] : columns[j]) out[r] += val * x[j];
    }
    return out;
}

Matrix SparseMatrix::dense() const {
    Matrix m(rows, cols);
    for (size_t j = 0; j < cols; ++j)
        for (const auto& [r, val] : columns[j]) m.at(r, j) = val;
    return m;
}

bool SparseMatrix::is_zero() const {
    for (const auto& col : columns)
        for (const auto& [r, val] : col)
            if (!val.is_zero()) return false;
    return true;
}

size_t rank(const SparseMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return rank(m.dense());
}

std::vector<Vec> nullspace(const SparseMatrix& m) {
    if (m.rows == 0 || m.cols == 0) {
        std::vector<Vec> basis;
        for (size_t j = 0; j < m.cols; ++j) {
            Vec v(m.cols);
            v[j] = ScalarValue(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return nullspace(m.dense());
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& b) {
    if (m.cols == 0) return vec_is_zero(b) ? std::optional<Vec>(Vec{}) : std::nullopt;
    if (m.rows == 0) return Vec(m.cols);
    return solve(m.dense(), b);
}

size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return eliminate(m, {}, false).rank();
}

std::vector<Vec> nullspace(const Matrix& m) {
    if (m.cols() == 0) return {};
    if (m.rows() == 0) {
        std::vector<Vec> basis;
        for (size_t j = 0; j < m.cols(); ++j) {
            Vec v(m.cols());
            v[j] = ScalarValue(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    Echelon e = eliminate(m, {}, false);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t pc : e.pivot_cols) is_pivot[pc] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec x(m.cols());
        x[f] = ScalarValue(1);
        back_substitute(e, x, m.cols());
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    auto X = solve_many(m, Matrix::from_columns({b}, b.size()));
    if (!X) return std::nullopt;
    return X->column(0);
}

std::optional<Matrix> solve_many(const Matrix& m, const Matrix& B) {
    if (m.cols() == 0) {
        // Solvable iff B = 0.
        if (!B.is_zero()) return std::nullopt;
        return Matrix(0, B.cols());
    }
    std::vector<Vec> extra = B.columns();
    Echelon e = eliminate(m, extra, true);
    // A pivot inside the augmented block marks an inconsistent system.
    for (size_t pc : e.pivot_cols)
        if (pc >= m.cols()) return std::nullopt;
    Matrix X(m.cols(), B.cols());
    for (size_t col = 0; col < B.cols(); ++col) {
        Vec x(m.cols());
        for (size_t ri = e.pivot_cols.size(); ri-- > 0;) {
            size_t pc = e.pivot_cols[ri];
            ScalarValue acc = ScalarValue(e.rows[ri][m.cols() + col]);
            for (size_t j = pc + 1; j < m.cols(); ++j) {
                if (e.rows[ri][j].is_zero() || x[j].is_zero()) continue;
                acc -= ScalarValue(e.rows[ri][j]) * x[j];
            }
            x[pc] = acc / ScalarValue(e.rows[ri][pc]);
        }
        for (size_t i = 0; i < m.cols(); ++i) X.at(i, col) = x[i];
    }
    return X;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square())
        throw MathError(ErrorCode::NonSquare, "inverse of a non-square matrix");
    auto X = solve_many(m, Matrix::identity(m.rows()));
    if (!X)
        throw MathError(ErrorCode::DivisionByZero, "matrix is singular");
    return *X;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, size_t dim) {
    if (vectors.empty()) return {};
    Echelon e = eliminate(Matrix::from_rows(vectors), {}, false);
    // Reduced (Gauss-Jordan) form over the field for canonical bases.
    std::vector<Vec> rows;
    for (size_t ri = 0; ri < e.pivot_cols.size(); ++ri) {
        Vec v(dim);
        ScalarValue pivot{e.rows[ri][e.pivot_cols[ri]]};
        for (size_t j = 0; j < dim; ++j)
            if (!e.rows[ri][j].is_zero()) v[j] = ScalarValue(e.rows[ri][j]) / pivot;
        rows.push_back(std::move(v));
    }
    for (size_t ri = rows.size(); ri-- > 0;) {
        for (size_t up = 0; up < ri; ++up) {
            const ScalarValue& c = rows[up][e.pivot_cols[ri]];
            if (c.is_zero()) continue;
            rows[up] = vec_sub(rows[up], vec_scale(c, rows[ri]));
        }
    }
    return rows;
}

namespace {
// v -= c * row, skipping zero entries.
void axpy_sub(Vec& v, const ScalarValue& c, const Vec& row) {
    for (size_t j = 0; j < v.size(); ++j)
        if (!row[j].is_zero()) v[j] -= c * row[j];
}
} // namespace

void ReducedBasis::reduce(Vec& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        ScalarValue c = v[pivots_[r]];
        if (c.is_zero()) continue;
        axpy_sub(v, c, rows_[r]);
    }
}

bool ReducedBasis::insert(Vec v) {
    reduce(v);
    size_t pc = dim_;
    for (size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            pc = j;
            break;
        }
    if (pc == dim_) return false;
    ScalarValue inv = v[pc].inverse();
    for (size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    // Back-reduce existing rows against the new pivot.
    for (size_t r = 0; r < rows_.size(); ++r) {
        ScalarValue c = rows_[r][pc];
        if (!c.is_zero()) axpy_sub(rows_[r], c, v);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
}

bool ReducedBasis::contains(Vec v) const {
    reduce(v);
    return vec_is_zero(v);
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, size_t dim) {
    Vec r = v;
    for (const auto& row : basis) {
        size_t pc = dim;
        for (size_t j = 0; j < dim; ++j)
            if (!row[j].is_zero()) {
                pc = j;
                break;
            }
        if (pc == dim) continue;
        if (r[pc].is_zero()) continue;
        r = vec_sub(r, vec_scale(r[pc] / row[pc], row));
    }
    return vec_is_zero(r);
}

// ---- UniPoly ----------------------------------------------------------------

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<ScalarValue> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) c[k] += b.coeffs_[k];
    }
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<ScalarValue> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(c));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (size_t k = 0; k < a.coeffs_.size(); ++k)
        if (a.coeffs_[k] != b.coeffs_[k]) return false;
    return true;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly out = *this;
    ScalarValue inv = leading().inverse();
    for (auto& c : out.coeffs_) c *= inv;
    return out;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<ScalarValue> c(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = ScalarValue(long(k)) * coeffs_[k];
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero())
        throw MathError(ErrorCode::DivisionByZero, "polynomial division by zero");
    UniPoly r = *this;
    if (r.degree() < d.degree()) return {UniPoly(), r};
    std::vector<ScalarValue> q(r.degree() - d.degree() + 1);
    ScalarValue dinv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        long shift = r.degree() - d.degree();
        ScalarValue c = r.leading() * dinv;
        q[shift] = c;
        for (size_t k = 0; k < d.coeffs_.size(); ++k)
            r.coeffs_[k + shift] -= c * d.coeffs_[k];
        r.trim();
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? UniPoly() : r.monic();
    }
    if (a.is_zero()) return a;
    return a.monic();
}

UniPoly UniPoly::squarefree_part() const {
    UniPoly g = gcd(*this, derivative());
    if (g.degree() <= 0) return monic();
    return divmod(g).first.monic();
}

bool UniPoly::is_squarefree() const {
    return gcd(*this, derivative()).degree() <= 0;
}

ScalarValue UniPoly::eval(const ScalarValue& x) const {
    ScalarValue acc;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Matrix UniPoly::eval(const Matrix& m) const {
    Matrix acc(m.rows(), m.cols());
    for (size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * m;
        if (!coeffs_[k].is_zero()) acc = acc + coeffs_[k] * Matrix::identity(m.rows());
    }
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << coeffs_[k].to_string();
            continue;
        }
        if (!coeffs_[k].is_one()) os << coeffs_[k].to_string() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

// ---- charpoly / minpoly -----------------------------------------------------

UniPoly charpoly(const Matrix& m) {
    if (!m.is_square())
        throw MathError(ErrorCode::NonSquare, "characteristic polynomial of a non-square matrix");
    size_t n = m.rows();
    std::vector<ScalarValue> c(n + 1);
    c[n] = ScalarValue(1);
    Matrix M = m;
    c[n - 1] = -M.trace();
    for (size_t k = 2; k <= n; ++k) {
        M = m * (M + c[n - k + 1] * Matrix::identity(n));
        c[n - k] = -(M.trace() / ScalarValue(long(k)));
    }
    return UniPoly(std::move(c));
}

UniPoly minimal_polynomial(const Matrix& m) {
    if (!m.is_square())
        throw MathError(ErrorCode::NonSquare, "minimal polynomial of a non-square matrix");
    size_t n = m.rows();
    if (n == 0) return UniPoly({ScalarValue(1)});
    auto vectorize = [&](const Matrix& a) {
        Vec v(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v[i * n + j] = a.at(i, j);
        return v;
    };
    std::vector<Vec> powers{vectorize(Matrix::identity(n))};
    Matrix p = Matrix::identity(n);
    for (size_t d = 1; d <= n; ++d) {
        p = p * m;
        Vec target = vectorize(p);
        auto sol = solve(Matrix::from_columns(powers, n * n), target);
        if (sol) {
            std::vector<ScalarValue> coeffs(d + 1);
            for (size_t k = 0; k < d; ++k) coeffs[k] = -(*sol)[k];
            coeffs[d] = ScalarValue(1);
            return UniPoly(std::move(coeffs));
        }
        powers.push_back(std::move(target));
    }
    // Cayley-Hamilton guarantees dependence at degree n.
    throw MathError(ErrorCode::FieldTooSmall, "minimal polynomial search failed");
}

JCDecomposition jordan_chevalley(const Matrix& m) {
    if (!m.is_square())
        throw MathError(ErrorCode::NonSquare, "Jordan-Chevalley of a non-square matrix");
    size_t n = m.rows();
    if (n == 0) return {m, m};
    UniPoly g = charpoly(m).squarefree_part();
    UniPoly gp = g.derivative();
    Matrix S = m;
    for (size_t iter = 0; iter <= n + 1; ++iter) {
        Matrix gs = g.eval(S);
        if (gs.is_zero()) break;
        Matrix gps = gp.eval(S);
        auto delta = solve_many(gps, gs);
        if (!delta)
            throw MathError(ErrorCode::FieldTooSmall,
                            "Newton step not invertible in Jordan-Chevalley iteration");
        S = S - *delta;
    }
    Matrix gs = g.eval(S);
    if (!gs.is_zero())
        throw MathError(ErrorCode::FieldTooSmall, "Jordan-Chevalley iteration did not terminate");
    Matrix N = m - S;
    if (S * N != N * S)
        throw MathError(ErrorCode::FieldTooSmall, "Jordan-Chevalley parts do not commute");
    if (!N.power(n).is_zero())
        throw MathError(ErrorCode::FieldTooSmall, "Jordan-Chevalley nilpotent part is not nilpotent");
    return {std::move(S), std::move(N)};
}

// ---- roots and joint eigenspaces ---------------------------------------------

namespace {

// Divides out (T - r); remainder must vanish.
UniPoly deflate(const UniPoly& p, const ScalarValue& r) {
    UniPoly lin({-r, ScalarValue(1)});
    auto [q, rem] = p.divmod(lin);
    if (!rem.is_zero())
        throw MathError(ErrorCode::FieldTooSmall, "deflation by a non-root");
    return q;
}

bool contains(const std::vector<ScalarValue>& xs, const ScalarValue& v) {
    return std::any_of(xs.begin(), xs.end(), [&](const ScalarValue& x) { return x == v; });
}

} // namespace

std::vector<ScalarValue> field_roots(const UniPoly& p, const std::vector<ScalarValue>& hints) {
    std::vector<ScalarValue> roots;
    UniPoly q = p.monic();
    if (q.degree() <= 0) return roots;

    auto try_root = [&](const ScalarValue& cand) {
        if (q.degree() < 1) return false;
        if (!q.eval(cand).is_zero()) return false;
        if (!contains(roots, cand)) roots.push_back(cand);
        q = deflate(q, cand);
        // Squarefree inputs have simple roots, but stay safe for repeats.
        while (q.degree() >= 1 && q.eval(cand).is_zero()) q = deflate(q, cand);
        return true;
    };

    try_root(ScalarValue());
    for (const auto& h : hints) try_root(h);

    while (q.degree() >= 1) {
        if (q.degree() == 1) {
            ScalarValue r = -q.coeffs()[0] / q.coeffs()[1];
            if (!contains(roots, r)) roots.push_back(r);
            break;
        }
        if (q.degree() == 2) {
            const ScalarValue& c0 = q.coeffs()[0];
            const ScalarValue& c1 = q.coeffs()[1];
            const ScalarValue& c2 = q.coeffs()[2];
            ScalarValue disc = c1 * c1 - ScalarValue(4) * c2 * c0;
            auto s = disc.sqrt();
            if (!s)
                throw MathError(ErrorCode::FieldTooSmall,
                                "irreducible quadratic factor (discriminant has no square root "
                                "in the field): " + q.to_string(),
                                q.to_string());
            ScalarValue twoa = ScalarValue(2) * c2;
            ScalarValue r1 = (-c1 + *s) / twoa;
            ScalarValue r2 = (-c1 - *s) / twoa;
            if (!contains(roots, r1)) roots.push_back(r1);
            if (!contains(roots, r2)) roots.push_back(r2);
            break;
        }
        throw MathError(ErrorCode::FieldTooSmall,
                        "characteristic factor of degree > 2 with no root among candidates: " +
                            q.to_string(),
                        q.to_string());
    }
    return roots;
}

namespace {

// Connected components of the nonzero pattern of a square matrix.
std::vector<std::vector<size_t>> block_components(const Matrix& r) {
    size_t n = r.rows();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && (!r.at(i, j).is_zero() || !r.at(j, i).is_zero())) unite(i, j);
    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<size_t>> out;
    for (auto& [root, idxs] : groups) out.push_back(std::move(idxs));
    return out;
}

std::vector<ScalarValue> matrix_eigenvalues(const Matrix& r) {
    std::vector<ScalarValue> eigen;
    for (const auto& block : block_components(r)) {
        Matrix sub(block.size(), block.size());
        std::vector<ScalarValue> hints;
        for (size_t a = 0; a < block.size(); ++a) {
            for (size_t b = 0; b < block.size(); ++b) sub.at(a, b) = r.at(block[a], block[b]);
            if (!contains(hints, sub.at(a, a))) hints.push_back(sub.at(a, a));
        }
        UniPoly p = charpoly(sub).squarefree_part();
        for (const auto& root : field_roots(p, hints))
            if (!contains(eigen, root)) eigen.push_back(root);
    }
    return eigen;
}

} // namespace

std::vector<WeightSpace> simultaneous_weights(const std::vector<Matrix>& ops) {
    if (ops.empty()) return {};
    size_t n = ops[0].rows();
    for (const auto& op : ops) {
        if (!op.is_square() || op.rows() != n)
            throw MathError(ErrorCode::NonSquare, "operators must be square of equal size");
        if (!minimal_polynomial(op).is_squarefree())
            throw MathError(ErrorCode::NotSemisimple,
                            "operator has a non-squarefree minimal polynomial");
    }
    for (size_t a = 0; a < ops.size(); ++a)
        for (size_t b = a + 1; b < ops.size(); ++b)
            if (ops[a] * ops[b] != ops[b] * ops[a])
                throw MathError(ErrorCode::NotCommuting, "operators do not commute");

    std::vector<WeightSpace> spaces;
    {
        WeightSpace all;
        for (size_t j = 0; j < n; ++j) {
            Vec v(n);
            v[j] = ScalarValue(1);
            all.basis.push_back(std::move(v));
        }
        spaces.push_back(std::move(all));
    }

    for (const auto& op : ops) {
        std::vector<WeightSpace> next;
        for (auto& space : spaces) {
            size_t w = space.basis.size();
            Matrix W = Matrix::from_columns(space.basis, n);
            auto R = solve_many(W, op * W);
            if (!R)
                throw MathError(ErrorCode::NotCommuting,
                                "operator does not preserve a joint eigenspace");
            std::vector<ScalarValue> eigen = matrix_eigenvalues(*R);
            size_t total = 0;
            for (const auto& lambda : eigen) {
                Matrix shifted = *R - lambda * Matrix::identity(w);
                std::vector<Vec> kernel = nullspace(shifted);
                if (kernel.empty()) continue;
                WeightSpace child;
                child.eigenvalues = space.eigenvalues;
                child.eigenvalues.push_back(lambda);
                for (const auto& k : kernel) {
                    Vec ambient(n);
                    for (size_t c = 0; c < w; ++c)
                        if (!k[c].is_zero()) ambient = vec_add(ambient, vec_scale(k[c], space.basis[c]));
                    child.basis.push_back(std::move(ambient));
                }
                total += child.basis.size();
                next.push_back(std::move(child));
            }
            if (total != w)
                throw MathError(ErrorCode::NotSemisimple,
                                "eigenspaces do not fill an invariant subspace");
        }
        spaces = std::move(next);
    }
    return spaces;
}

} // namespace solvco
