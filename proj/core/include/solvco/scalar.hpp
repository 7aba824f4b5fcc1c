#ifndef SOLVCO_SCALAR_HPP
#define SOLVCO_SCALAR_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "solvco/poly.hpp"

namespace solvco {

enum class ParamKind { Real, Complex };

// Declared parameters of an input (name -> kind).  The symbol "pi" is
// implicitly a real transcendental parameter and "i" is never a parameter.
using ParamTable = std::map<std::string, ParamKind>;

// Element of the coefficient field: a ratio of multivariate polynomials
// over Q(i).  Kept with nonzero monic denominator; reduction is lazy
// (content/monomial cancellation plus exact-division probes), which is
// enough for decidable zero-testing: the value is zero iff num is zero.
class ScalarValue {
public:
    ScalarValue() : num_(), den_(Poly::constant(GaussRational(1))) {}
    ScalarValue(long n) : ScalarValue(Poly::constant(GaussRational(Rational(n)))) {}
    explicit ScalarValue(Rational q) : ScalarValue(Poly::constant(GaussRational(std::move(q)))) {}
    explicit ScalarValue(GaussRational c) : ScalarValue(Poly::constant(std::move(c))) {}
    explicit ScalarValue(Poly num);
    ScalarValue(Poly num, Poly den);

    static ScalarValue parameter(const std::string& name);
    static ScalarValue pi() { return parameter("pi"); }
    static ScalarValue unit_i() { return ScalarValue(GaussRational::unit_i()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // Constant value if parameter-free, nullopt otherwise.
    std::optional<GaussRational> as_constant() const;

    // Names of parameters actually occurring.
    std::set<std::string> parameters() const;

    ScalarValue operator-() const;
    ScalarValue& operator+=(const ScalarValue& o);
    ScalarValue& operator-=(const ScalarValue& o);
    ScalarValue& operator*=(const ScalarValue& o);
    ScalarValue& operator/=(const ScalarValue& o);
    friend ScalarValue operator+(ScalarValue a, const ScalarValue& b) { return a += b; }
    friend ScalarValue operator-(ScalarValue a, const ScalarValue& b) { return a -= b; }
    friend ScalarValue operator*(ScalarValue a, const ScalarValue& b) { return a *= b; }
    friend ScalarValue operator/(ScalarValue a, const ScalarValue& b) { return a /= b; }

    ScalarValue inverse() const;
    ScalarValue pow(long e) const;
    ScalarValue conj() const;

    // Equality as rational functions (cross-multiplied zero test).
    friend bool operator==(const ScalarValue& a, const ScalarValue& b);
    friend bool operator!=(const ScalarValue& a, const ScalarValue& b) { return !(a == b); }

    // Full evaluation; every parameter except "pi" must be bound, and "pi"
    // must not occur.  Throws UnboundParameter / DenominatorVanishes.
    GaussRational evaluate(const std::map<std::string, GaussRational>& bindings) const;

    // Partial substitution; unbound parameters survive symbolically.
    ScalarValue substitute(const std::map<std::string, ScalarValue>& bindings) const;

    // (re, im) with *this = re + i*im, all parameters treated as real.
    std::pair<ScalarValue, ScalarValue> split_real_imag() const;

    // Exact square root within the field, if representable.
    std::optional<ScalarValue> sqrt() const;

    uint32_t complexity() const { return num_.total_degree() + den_.total_degree() +
                                         static_cast<uint32_t>(num_.term_count() + den_.term_count()); }

    std::string to_string() const;

private:
    void normalize();

    Poly num_;
    Poly den_;
};

// ---- string grammar -------------------------------------------------------
// EXPR   := ['-'] TERM (('+'|'-') TERM)*
// TERM   := FACTOR (('*'|'/') FACTOR)*
// FACTOR := BASE ('^' UINT)?
// BASE   := UINT | 'i' | NAME | '(' EXPR ')' | '-' BASE
// Integers are arbitrary precision; "pi" is the distinguished transcendental.
ScalarValue parse_scalar(const std::string& text);

std::string to_string(const ScalarValue& v);

} // namespace solvco

#endif
