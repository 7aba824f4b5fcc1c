#ifndef SOLVCO_LINALG_HPP
#define SOLVCO_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "solvco/matrix.hpp"

namespace solvco {

// Univariate polynomial over the scalar field, lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<ScalarValue> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static UniPoly constant(ScalarValue c) { return UniPoly({std::move(c)}); }

    const std::vector<ScalarValue>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial reads as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const ScalarValue& leading() const { return coeffs_.back(); }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    UniPoly monic() const;
    UniPoly derivative() const;
    // (quotient, remainder) with remainder degree < divisor degree.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    static UniPoly gcd(UniPoly a, UniPoly b);
    UniPoly squarefree_part() const;
    bool is_squarefree() const;

    ScalarValue eval(const ScalarValue& x) const;
    Matrix eval(const Matrix& m) const;

    std::string to_string(const std::string& var = "T") const;

private:
    void trim();
    std::vector<ScalarValue> coeffs_;
};

// ---- elimination ------------------------------------------------------------

// Column-major sparse matrix; the cochain differentials are stored this way
// and densified only transiently inside elimination.
struct SparseMatrix {
    size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<uint32_t, ScalarValue>>> columns;

    SparseMatrix() = default;
    SparseMatrix(size_t r, size_t c) : rows(r), cols(c), columns(c) {}
    void add(size_t col, size_t row, ScalarValue v) {
        columns[col].emplace_back(static_cast<uint32_t>(row), std::move(v));
    }
    Vec column_vec(size_t col) const;
    Vec apply(const Vec& x) const;
    Matrix dense() const;
    bool is_zero() const;
};

size_t rank(const SparseMatrix& m);
std::vector<Vec> nullspace(const SparseMatrix& m);
std::optional<Vec> solve(const SparseMatrix& m, const Vec& b);

// Generic rank over the parameter field (pivot numerators assumed nonzero;
// recorded via GenericityScope).
size_t rank(const Matrix& m);

// Basis of ker(m); vectors are linearly independent and span the kernel.
std::vector<Vec> nullspace(const Matrix& m);

// Any solution of m x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Any solution X of m X = B, or nullopt.
std::optional<Matrix> solve_many(const Matrix& m, const Matrix& B);

Matrix inverse(const Matrix& m);

// ---- spectral ---------------------------------------------------------------

// Monic characteristic polynomial by the Faddeev-LeVerrier recursion
// (divisions only by integers, safe in characteristic zero).
UniPoly charpoly(const Matrix& m);

// Minimal polynomial via Krylov linear dependence of matrix powers.
UniPoly minimal_polynomial(const Matrix& m);

struct JCDecomposition {
    Matrix semisimple;
    Matrix nilpotent;
};

// Additive Jordan-Chevalley decomposition m = S + N by Newton iteration
// on the squarefree part of the characteristic polynomial; no eigenvalues
// and no field extension.
JCDecomposition jordan_chevalley(const Matrix& m);

// Roots of p inside the field.  Handles linear factors (via candidate
// roots: 0, supplied hints, and rational-root extraction on constant
// polynomials) and quadratic factors in closed form when the discriminant
// has a square root in the field.  Throws FieldTooSmall with the
// offending factor otherwise.
std::vector<ScalarValue> field_roots(const UniPoly& p, const std::vector<ScalarValue>& hints);

struct WeightSpace {
    std::vector<ScalarValue> eigenvalues; // one per operator, in input order
    std::vector<Vec> basis;               // ambient coordinates
};

// Joint eigenspace decomposition of commuting semisimple operators.
// Throws NotSemisimple / NotCommuting / FieldTooSmall.
std::vector<WeightSpace> simultaneous_weights(const std::vector<Matrix>& ops);

// Reduced echelon basis of the span of the given vectors.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, size_t dim);

// Whether v lies in the span of the (reduced) basis.
bool in_span(const std::vector<Vec>& basis, const Vec& v, size_t dim);

// Incrementally maintained reduced row basis over the field.
class ReducedBasis {
public:
    explicit ReducedBasis(size_t dim) : dim_(dim) {}
    // Inserts v unless it already lies in the span; returns whether inserted.
    bool insert(Vec v);
    bool contains(Vec v) const;
    const std::vector<Vec>& rows() const { return rows_; }
    size_t rank() const { return rows_.size(); }

private:
    void reduce(Vec& v) const;
    size_t dim_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;
};

} // namespace solvco

#endif
