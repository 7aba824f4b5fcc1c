#ifndef SOLVCO_LIE_HPP
#define SOLVCO_LIE_HPP

#include <optional>
#include <string>
#include <vector>

#include "solvco/linalg.hpp"

namespace solvco {

// Linear functional on the algebra recording eigenvalues of ad_s on a
// diagonalizing basis; stored as a covector in the input basis.
struct WeightVector {
    enum class Kind { Zero, Basic, SubsetSum };

    Vec values;
    Kind kind = Kind::Zero;

    static WeightVector zero(size_t dim);

    bool is_zero() const { return vec_is_zero(values); }
    ScalarValue apply(const Vec& v) const;

    WeightVector operator+(const WeightVector& o) const;
    friend bool operator==(const WeightVector& a, const WeightVector& b);
    friend bool operator!=(const WeightVector& a, const WeightVector& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& basis_names) const;
};

// Finite-dimensional Lie algebra over the scalar field, by structure
// constants c^k_ij for i < j; [b_i, b_j] = sum_k c^k_ij b_k.
class LieAlgebra {
public:
    LieAlgebra(size_t dim, std::vector<std::string> basis_names, ParamTable params);

    size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const ParamTable& params() const { return params_; }

    void set_bracket(size_t i, size_t j, size_t k, ScalarValue c);
    const ScalarValue& c(size_t i, size_t j, size_t k) const; // requires i < j

    Vec bracket_basis(size_t i, size_t j) const; // [b_i, b_j], any i, j
    Vec bracket(const Vec& x, const Vec& y) const;
    Matrix ad_basis(size_t i) const;
    Matrix ad(const Vec& x) const;

    bool is_abelian() const;
    size_t basis_index(const std::string& name) const; // throws ParseError

    LieAlgebra substitute(const std::map<std::string, ScalarValue>& bindings) const;
    LieAlgebra permuted(const std::vector<size_t>& perm) const;

private:
    size_t dim_;
    std::vector<std::string> basis_names_;
    ParamTable params_;
    std::vector<ScalarValue> c_; // ((i*dim + j)*dim + k), stored for i < j
};

struct Subspace {
    std::vector<Vec> basis; // reduced echelon rows
    size_t dim() const { return basis.size(); }
    bool contains(const Vec& v, size_t ambient_dim) const {
        return in_span(basis, v, ambient_dim);
    }
};

struct ValidationReport {
    bool jacobi_ok = true;
    std::optional<std::array<size_t, 3>> jacobi_witness;
    bool solvable = false;
    bool nilpotent = false;
    size_t derived_length = 0;
    size_t lower_central_length = 0;
};

ValidationReport validate(const LieAlgebra& g);

// Throws JacobiFails / NotSolvable when g is unusable downstream.
void require_valid_solvable(const LieAlgebra& g);

std::vector<Subspace> derived_series(const LieAlgebra& g);
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

// Nilpotent self-normalizing subalgebra found as the Fitting-null component
// of a regular element (deterministic candidate search).
Subspace cartan_subalgebra(const LieAlgebra& g, size_t candidate_bound = 64);

Subspace nilradical(const LieAlgebra& g);

// The semisimple adjoint representation and its weight data.
struct AdSData {
    Subspace V;                    // complement of h in the Cartan direction
    Subspace nilrad;
    std::vector<Matrix> sm_on_V;   // semisimple parts of ad_A, A over V.basis
    Matrix v_coords;               // k x n: V-coordinates of ambient vectors
    Matrix diagonal_basis;         // columns X_1..X_n (joint eigenbasis)
    Matrix diagonal_dual;          // inverse; row k is the covector of x_k
    std::vector<WeightVector> weights; // weight of each diagonal basis vector

    Matrix ads_of(const Vec& x) const;          // the operator ad_s(x)
    Matrix ads_of_basis(size_t i) const;        // ad_s(b_i)
    // a_ik = weight_k(X_i): eigenvalue of ad_s(X_i) on X_k.
    ScalarValue eigencoeff(size_t i, size_t k) const;
    size_t dim() const { return diagonal_basis.rows(); }
};

AdSData construct_ads(const LieAlgebra& g);

// Structure constants in the basis given by the columns of P.
LieAlgebra change_of_basis(const LieAlgebra& g, const Matrix& P,
                           std::vector<std::string> new_names);

} // namespace solvco

#endif
