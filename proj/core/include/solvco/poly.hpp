#ifndef SOLVCO_POLY_HPP
#define SOLVCO_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solvco/gauss.hpp"

namespace solvco {

// Exponent vectors compared by total degree, then lexicographically.
// rbegin() of a term map is the leading term under this graded order.
struct GradedExpLess {
    bool operator()(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const;
};

// Multivariate polynomial over Q(i) in named parameters.  Canonical form:
// variable list sorted and free of unused names, no zero coefficients stored,
// every exponent vector of length vars.size().
class Poly {
public:
    using TermMap = std::map<std::vector<uint32_t>, GaussRational, GradedExpLess>;

    Poly() = default;
    explicit Poly(GaussRational constant);
    static Poly variable(const std::string& name);
    static Poly constant(GaussRational c) { return Poly(std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    // Constant value; zero polynomial reads as 0.
    GaussRational constant_value() const;

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    uint32_t total_degree() const;
    uint32_t degree_in(const std::string& var) const;

    GaussRational leading_coefficient() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    void scale(const GaussRational& c);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Quotient when `d` divides *this exactly, nullopt otherwise.
    std::optional<Poly> exact_divide(const Poly& d) const;

    // Exact polynomial square root, if one exists.
    std::optional<Poly> sqrt() const;

    // Coefficient-wise complex conjugation (parameters treated as real).
    Poly conj() const;

    // Positive rational g with coefficients/g integral of collective gcd 1.
    Rational content() const;

    // Splits into (real, imaginary) coefficient parts: *this = re + i*im.
    std::pair<Poly, Poly> split_coefficients() const;

    // *this as a dense univariate polynomial in `var` with Poly coefficients,
    // lowest degree first.
    std::vector<Poly> coefficients_in(const std::string& var) const;

    std::string to_string() const;

private:
    // Re-expresses terms over a variable superset, then drops unused names.
    static Poly aligned(const Poly& p, const std::vector<std::string>& vars);
    void compress();

    std::vector<std::string> vars_;
    TermMap terms_;
};

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

} // namespace solvco

#endif
