#include "solvco/forms.hpp"

#include <bit>
#include <sstream>

#include "solvco/errors.hpp"

namespace solvco {

size_t monomial_degree(Monomial m) { return static_cast<size_t>(std::popcount(m)); }

int koszul_sign(Monomial a, Monomial b) {
    if (a & b) return 0;
    // Transpositions needed to merge: pairs (i in a, j in b) with j < i.
    int inversions = 0;
    for (Monomial t = a; t; t &= t - 1) {
        int i = std::countr_zero(t);
        inversions += std::popcount(b & ((Monomial(1) << i) - 1));
    }
    return (inversions & 1) ? -1 : 1;
}

std::string monomial_name(Monomial m, const std::vector<std::string>& names) {
    if (m == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (Monomial t = m; t; t &= t - 1) {
        if (!first) os << "^";
        first = false;
        os << names[std::countr_zero(t)];
    }
    return os.str();
}

void add_term(FormTerms& dst, Monomial m, const ScalarValue& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = dst.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

void add_scaled(FormTerms& dst, const FormTerms& src, const ScalarValue& c) {
    if (c.is_zero()) return;
    for (const auto& [m, v] : src) add_term(dst, m, c * v);
}

FormTerms wedge(const FormTerms& a, const FormTerms& b) {
    FormTerms out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            int sign = koszul_sign(ma, mb);
            if (sign == 0) continue;
            ScalarValue c = ca * cb;
            if (sign < 0) c = -c;
            add_term(out, ma | mb, c);
        }
    return out;
}

FormTerms scale(const FormTerms& a, const ScalarValue& c) {
    FormTerms out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : a) out.emplace(m, c * v);
    return out;
}

bool terms_zero(const FormTerms& a) {
    for (const auto& [m, v] : a)
        if (!v.is_zero()) return false;
    return true;
}

std::string form_to_string(const FormTerms& f, const std::vector<std::string>& names) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs == "1" && m != 0)
            os << monomial_name(m, names);
        else if (m == 0)
            os << cs;
        else
            os << "(" << cs << ")*" << monomial_name(m, names);
    }
    return os.str();
}

ExteriorBasis::ExteriorBasis(size_t n) : n_(n), by_degree_(n + 1) {
    for (Monomial m = 0; m < (Monomial(1) << n); ++m) by_degree_[monomial_degree(m)].push_back(m);
    // Monomial enumeration is ascending already.
}

size_t ExteriorBasis::index(size_t p, Monomial m) const {
    const auto& v = by_degree_[p];
    auto it = std::lower_bound(v.begin(), v.end(), m);
    if (it == v.end() || *it != m)
        throw MathError(ErrorCode::NonSquare, "monomial outside the degree basis");
    return static_cast<size_t>(it - v.begin());
}

Vec ExteriorBasis::coords(size_t p, const FormTerms& f) const {
    Vec out(dim(p));
    for (const auto& [m, c] : f) out[index(p, m)] = c;
    return out;
}

FormTerms ExteriorBasis::form(size_t p, const Vec& coords) const {
    FormTerms out;
    for (size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero()) out.emplace(by_degree_[p][k], coords[k]);
    return out;
}

CEDifferential::CEDifferential(const LieAlgebra& g, FormTerms lambda_flat)
    : dx_(g.dim()), twist_(std::move(lambda_flat)) {
    size_t n = g.dim();
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                const ScalarValue& c = g.c(i, j, k);
                if (c.is_zero()) continue;
                add_term(dx_[k], (Monomial(1) << i) | (Monomial(1) << j), -c);
            }
}

FormTerms CEDifferential::apply_monomial(Monomial m) const {
    FormTerms out;
    size_t pos = 0;
    for (Monomial t = m; t; t &= t - 1, ++pos) {
        int k = std::countr_zero(t);
        const FormTerms& dk = dx_[k];
        if (dk.empty()) continue;
        Monomial rest = m & ~(Monomial(1) << k);
        ScalarValue sign((pos & 1) ? -1 : 1);
        for (const auto& [dm, dc] : dk) {
            int s = koszul_sign(dm, rest);
            if (s == 0) continue;
            ScalarValue c = sign * dc;
            if (s < 0) c = -c;
            add_term(out, dm | rest, c);
        }
    }
    if (!twist_.empty()) {
        for (const auto& [tm, tc] : twist_) {
            int s = koszul_sign(tm, m);
            if (s == 0) continue;
            ScalarValue c = tc;
            if (s < 0) c = -c;
            add_term(out, tm | m, c);
        }
    }
    return out;
}

FormTerms CEDifferential::apply(const FormTerms& f) const {
    FormTerms out;
    for (const auto& [m, c] : f) add_scaled(out, apply_monomial(m), c);
    return out;
}

} // namespace solvco
