#ifndef SOLVCO_FORMS_HPP
#define SOLVCO_FORMS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "solvco/lie.hpp"

namespace solvco {

// Exterior monomial over the dual basis, one bit per generator index.
using Monomial = uint32_t;

size_t monomial_degree(Monomial m);
// Sign of x_A ^ x_B as a reordering of the ascending merge; 0 on overlap.
int koszul_sign(Monomial a, Monomial b);
std::string monomial_name(Monomial m, const std::vector<std::string>& names);

// Sparse homogeneous exterior form (coefficients per monomial).
using FormTerms = std::map<Monomial, ScalarValue>;

void add_term(FormTerms& dst, Monomial m, const ScalarValue& c);
void add_scaled(FormTerms& dst, const FormTerms& src, const ScalarValue& c);
FormTerms wedge(const FormTerms& a, const FormTerms& b);
FormTerms scale(const FormTerms& a, const ScalarValue& c);
bool terms_zero(const FormTerms& a);
std::string form_to_string(const FormTerms& f, const std::vector<std::string>& names);

// Monomial tables for a fixed ambient dimension.
class ExteriorBasis {
public:
    explicit ExteriorBasis(size_t n);
    size_t n() const { return n_; }
    const std::vector<Monomial>& degree(size_t p) const { return by_degree_[p]; }
    size_t dim(size_t p) const { return by_degree_[p].size(); }
    size_t index(size_t p, Monomial m) const;

    Vec coords(size_t p, const FormTerms& f) const;
    FormTerms form(size_t p, const Vec& coords) const;

private:
    size_t n_;
    std::vector<std::vector<Monomial>> by_degree_;
};

// Degree-one extension of a map on generators: carries the table of
// generator differentials dx_k (2-forms) plus an optional twisting 1-form.
class CEDifferential {
public:
    // dx_k = -sum_{i<j} c^k_ij x_i ^ x_j, plus lambda_flat ^ (.) twisting.
    CEDifferential(const LieAlgebra& g, FormTerms lambda_flat);

    const FormTerms& dx(size_t k) const { return dx_[k]; }
    const FormTerms& twist() const { return twist_; }
    size_t n() const { return dx_.size(); }

    FormTerms apply_monomial(Monomial m) const;
    FormTerms apply(const FormTerms& f) const;

private:
    std::vector<FormTerms> dx_;
    FormTerms twist_;
};

// A weighted form: element of Lambda^degree g* tensor V_weight.
struct WeightedForm {
    size_t degree = 0;
    WeightVector weight;
    FormTerms terms;
};

} // namespace solvco

#endif
