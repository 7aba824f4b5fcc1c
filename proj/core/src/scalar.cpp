#include "solvco/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "solvco/errors.hpp"

namespace solvco {

// ---- Rational --------------------------------------------------------------

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

// ---- GaussRational ----------------------------------------------------------

std::optional<GaussRational> gauss_sqrt(const GaussRational& c) {
    if (c.is_zero()) return GaussRational();
    if (c.im == 0) {
        if (auto s = rational_sqrt(c.re)) return GaussRational(*s);
        if (auto s = rational_sqrt(-c.re)) return GaussRational(Rational(0), *s);
        return std::nullopt;
    }
    // (a+bi)^2 = c: a^2 = (re + |c|)/2, b = im/(2a)
    auto m = rational_sqrt(c.norm());
    if (!m) return std::nullopt;
    Rational a2 = (c.re + *m) / 2;
    auto a = rational_sqrt(a2);
    if (!a || *a == 0) return std::nullopt;
    Rational b = c.im / (2 * *a);
    GaussRational r(*a, b);
    if (r * r == c) return r;
    return std::nullopt;
}

std::string to_string(const GaussRational& c) {
    if (c.im == 0) return to_string(c.re);
    std::ostringstream os;
    if (c.re != 0) os << to_string(c.re);
    if (c.im > 0 && c.re != 0) os << "+";
    if (c.im == -1)
        os << "-i";
    else if (c.im == 1)
        os << "i";
    else
        os << to_string(c.im) << "*i";
    return os.str();
}

// ---- Poly -------------------------------------------------------------------

bool GradedExpLess::operator()(const std::vector<uint32_t>& a,
                               const std::vector<uint32_t>& b) const {
    uint64_t da = std::accumulate(a.begin(), a.end(), uint64_t{0});
    uint64_t db = std::accumulate(b.begin(), b.end(), uint64_t{0});
    if (da != db) return da < db;
    return a < b;
}

Poly::Poly(GaussRational constant) {
    if (!constant.is_zero()) terms_.emplace(std::vector<uint32_t>{}, std::move(constant));
}

Poly Poly::variable(const std::string& name) {
    Poly p;
    p.vars_ = {name};
    p.terms_.emplace(std::vector<uint32_t>{1}, GaussRational(Rational(1)));
    return p;
}

GaussRational Poly::constant_value() const {
    if (terms_.empty()) return GaussRational();
    return terms_.begin()->second;
}

uint32_t Poly::total_degree() const {
    uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max<uint32_t>(d, std::accumulate(e.begin(), e.end(), uint32_t{0}));
    return d;
}

uint32_t Poly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    size_t idx = it - vars_.begin();
    uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

GaussRational Poly::leading_coefficient() const {
    if (terms_.empty()) return GaussRational();
    return terms_.rbegin()->second;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Poly Poly::aligned(const Poly& p, const std::vector<std::string>& vars) {
    if (p.vars_ == vars) return p;
    std::vector<size_t> pos(p.vars_.size());
    for (size_t k = 0; k < p.vars_.size(); ++k) {
        auto it = std::lower_bound(vars.begin(), vars.end(), p.vars_[k]);
        pos[k] = static_cast<size_t>(it - vars.begin());
    }
    Poly out;
    out.vars_ = vars;
    for (const auto& [e, c] : p.terms_) {
        std::vector<uint32_t> ne(vars.size(), 0);
        for (size_t k = 0; k < e.size(); ++k) ne[pos[k]] = e[k];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

void Poly::compress() {
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) used[k] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    std::vector<size_t> keep;
    for (size_t k = 0; k < vars_.size(); ++k)
        if (used[k]) {
            keep.push_back(k);
            nv.push_back(vars_[k]);
        }
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        std::vector<uint32_t> ne(keep.size());
        for (size_t k = 0; k < keep.size(); ++k) ne[k] = e[keep[k]];
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (vars_ == o.vars_) {
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        compress();
        return *this;
    }
    std::vector<std::string> vars = merge_vars(vars_, o.vars_);
    Poly a = aligned(*this, vars);
    Poly b = aligned(o, vars);
    for (const auto& [e, c] : b.terms_) {
        auto [it, inserted] = a.terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) a.terms_.erase(it);
        }
    }
    a.compress();
    return *this = std::move(a);
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    // Constant factors reduce to coefficient scaling.
    if (a.is_constant()) {
        Poly out = b;
        out.scale(a.constant_value());
        return out;
    }
    if (b.is_constant()) {
        Poly out = a;
        out.scale(b.constant_value());
        return out;
    }
    const bool same = a.vars_ == b.vars_;
    std::vector<std::string> vars = same ? a.vars_ : merge_vars(a.vars_, b.vars_);
    Poly temp_a, temp_b;
    const Poly* qa = &a;
    const Poly* qb = &b;
    if (!same) {
        temp_a = Poly::aligned(a, vars);
        temp_b = Poly::aligned(b, vars);
        qa = &temp_a;
        qb = &temp_b;
    }
    Poly out;
    out.vars_ = vars;
    for (const auto& [ea, ca] : qa->terms_) {
        for (const auto& [eb, cb] : qb->terms_) {
            std::vector<uint32_t> e(vars.size());
            for (size_t k = 0; k < vars.size(); ++k) e[k] = ea[k] + eb[k];
            GaussRational c = ca * cb;
            if (c.is_zero()) continue;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    out.compress();
    return out;
}

void Poly::scale(const GaussRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        vars_.clear();
        return;
    }
    for (auto& [e, v] : terms_) v *= c;
}

std::optional<Poly> Poly::exact_divide(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return Poly();
    if (d.is_constant()) {
        Poly q = *this;
        GaussRational inv = GaussRational(Rational(1)) / d.constant_value();
        q.scale(inv);
        return q;
    }
    std::vector<std::string> vars = merge_vars(vars_, d.vars_);
    Poly r = aligned(*this, vars);
    Poly dd = aligned(d, vars);
    const auto& dlead = *dd.terms_.rbegin();
    Poly quot;
    quot.vars_ = vars;
    while (!r.terms_.empty()) {
        const auto& rlead = *r.terms_.rbegin();
        std::vector<uint32_t> e(vars.size());
        for (size_t k = 0; k < vars.size(); ++k) {
            if (rlead.first[k] < dlead.first[k]) return std::nullopt;
            e[k] = rlead.first[k] - dlead.first[k];
        }
        GaussRational c = rlead.second / dlead.second;
        Poly t;
        t.vars_ = vars;
        t.terms_.emplace(std::move(e), std::move(c));
        quot.terms_.insert(*t.terms_.begin());
        r -= t * dd;
        r = aligned(r, vars);
    }
    quot.compress();
    return quot;
}

std::optional<Poly> Poly::sqrt() const {
    if (is_zero()) return Poly();
    if (is_constant()) {
        auto s = gauss_sqrt(constant_value());
        if (!s) return std::nullopt;
        return Poly::constant(*s);
    }
    // Long-division square root on the graded-lex leading term.
    const auto& lead = *terms_.rbegin();
    std::vector<uint32_t> he(lead.first.size());
    for (size_t k = 0; k < he.size(); ++k) {
        if (lead.first[k] % 2 != 0) return std::nullopt;
        he[k] = lead.first[k] / 2;
    }
    auto lc = gauss_sqrt(lead.second);
    if (!lc) return std::nullopt;
    Poly root;
    root.vars_ = vars_;
    root.terms_.emplace(std::move(he), *lc);
    size_t guard = 4 * term_count() + 16;
    while (guard--) {
        Poly rem = *this - root * root;
        if (rem.is_zero()) {
            root.compress();
            return root;
        }
        rem = aligned(rem, vars_);
        Poly aligned_root = aligned(root, vars_);
        const auto& rlead = *rem.terms_.rbegin();
        const auto& slead = *aligned_root.terms_.rbegin();
        std::vector<uint32_t> te(vars_.size());
        for (size_t k = 0; k < vars_.size(); ++k) {
            if (rlead.first[k] < slead.first[k]) return std::nullopt;
            te[k] = rlead.first[k] - slead.first[k];
        }
        Poly t;
        t.vars_ = vars_;
        t.terms_.emplace(std::move(te), rlead.second / (GaussRational(Rational(2)) * slead.second));
        Poly next = aligned_root + t;
        next = aligned(next, vars_);
        if (next == aligned_root) return std::nullopt;
        root = std::move(next);
    }
    return std::nullopt;
}

Poly Poly::conj() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = c.conj();
    return out;
}

Rational Poly::content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    auto feed = [&](const Rational& q) {
        if (q == 0) return;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    };
    for (const auto& [e, c] : terms_) {
        feed(c.re);
        feed(c.im);
    }
    if (num_gcd == 0) return Rational(1);
    Rational g(num_gcd, den_lcm);
    g.canonicalize();
    return g;
}

std::pair<Poly, Poly> Poly::split_coefficients() const {
    Poly re, im;
    re.vars_ = vars_;
    im.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (c.re != 0) re.terms_.emplace(e, GaussRational(c.re));
        if (c.im != 0) im.terms_.emplace(e, GaussRational(c.im));
    }
    re.compress();
    im.compress();
    return {std::move(re), std::move(im)};
}

std::vector<Poly> Poly::coefficients_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return {*this};
    size_t idx = static_cast<size_t>(it - vars_.begin());
    std::vector<Poly> out(degree_in(var) + 1);
    for (const auto& [e, c] : terms_) {
        std::vector<uint32_t> ne = e;
        uint32_t d = ne[idx];
        ne[idx] = 0;
        Poly t;
        t.vars_ = vars_;
        t.terms_.emplace(std::move(ne), c);
        t.compress();
        out[d] += t;
    }
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::vector<std::string> factors;
        bool has_exp = false;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            has_exp = true;
            factors.push_back(e[k] == 1 ? vars_[k] : vars_[k] + "^" + std::to_string(e[k]));
        }
        std::string coeff;
        bool negated = false;
        GaussRational cc = c;
        if (cc.im == 0 && cc.re < 0) {
            negated = true;
            cc = -cc;
        }
        if (!has_exp)
            coeff = solvco::to_string(cc);
        else if (cc.is_one())
            coeff = "";
        else if (cc.im != 0 && cc.re != 0)
            coeff = "(" + solvco::to_string(cc) + ")";
        else
            coeff = solvco::to_string(cc);
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        os << coeff;
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k > 0 || !coeff.empty()) os << "*";
            os << factors[k];
        }
    }
    return os.str();
}

// ---- ScalarValue ------------------------------------------------------------

ScalarValue::ScalarValue(Poly num) : num_(std::move(num)), den_(Poly::constant(GaussRational(1))) {}

ScalarValue::ScalarValue(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw MathError(ErrorCode::DivisionByZero, "zero denominator");
    normalize();
}

ScalarValue ScalarValue::parameter(const std::string& name) {
    return ScalarValue(Poly::variable(name));
}

void ScalarValue::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(GaussRational(1));
        return;
    }
    if (den_.is_constant()) {
        if (!den_.constant_value().is_one()) {
            GaussRational inv = GaussRational(Rational(1)) / den_.constant_value();
            num_.scale(inv);
            den_ = Poly::constant(GaussRational(1));
        }
        return;
    }
    // Lazy reduction: probe exact divisibility both ways before giving up.
    if (auto q = num_.exact_divide(den_)) {
        num_ = std::move(*q);
        den_ = Poly::constant(GaussRational(1));
        return;
    }
    if (!num_.is_constant()) {
        if (auto q = den_.exact_divide(num_)) {
            // num/den = 1/q
            num_ = Poly::constant(GaussRational(1));
            den_ = std::move(*q);
        }
    }
    // Monic denominator fixes the representation up to num scaling.
    GaussRational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        GaussRational inv = GaussRational(Rational(1)) / lc;
        num_.scale(inv);
        den_.scale(inv);
    }
}

bool ScalarValue::is_one() const {
    return (num_ - den_).is_zero();
}

std::optional<GaussRational> ScalarValue::as_constant() const {
    if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
    if (is_zero()) return GaussRational();
    return num_.constant_value() / den_.constant_value();
}

std::set<std::string> ScalarValue::parameters() const {
    std::set<std::string> out(num_.vars().begin(), num_.vars().end());
    out.insert(den_.vars().begin(), den_.vars().end());
    return out;
}

ScalarValue ScalarValue::operator-() const {
    ScalarValue out = *this;
    out.num_ = -out.num_;
    return out;
}

ScalarValue& ScalarValue::operator+=(const ScalarValue& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ScalarValue& ScalarValue::operator-=(const ScalarValue& o) { return *this += -o; }

ScalarValue& ScalarValue::operator*=(const ScalarValue& o) {
    if (is_zero() || o.is_zero()) return *this = ScalarValue();
    // Cross-cancellation keeps products of inverses from accumulating cruft.
    if (!o.den_.is_constant()) {
        if (auto q = num_.exact_divide(o.den_)) {
            num_ = std::move(*q) * o.num_;
            normalize();
            return *this;
        }
    }
    if (!den_.is_constant()) {
        if (auto q = o.num_.exact_divide(den_)) {
            num_ = num_ * *q;
            den_ = o.den_;
            normalize();
            return *this;
        }
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ScalarValue& ScalarValue::operator/=(const ScalarValue& o) {
    if (o.is_zero())
        throw MathError(ErrorCode::DivisionByZero, "division by zero scalar");
    ScalarValue inv(o.den_, o.num_);
    return *this *= inv;
}

ScalarValue ScalarValue::inverse() const {
    if (is_zero())
        throw MathError(ErrorCode::DivisionByZero, "inverse of zero scalar");
    return ScalarValue(den_, num_);
}

ScalarValue ScalarValue::pow(long e) const {
    if (e == 0) return ScalarValue(1);
    ScalarValue base = e > 0 ? *this : inverse();
    long n = e > 0 ? e : -e;
    ScalarValue acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

ScalarValue ScalarValue::conj() const {
    ScalarValue out;
    out.num_ = num_.conj();
    out.den_ = den_.conj();
    out.normalize();
    return out;
}

bool operator==(const ScalarValue& a, const ScalarValue& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

namespace {

GaussRational eval_poly(const Poly& p, const std::map<std::string, GaussRational>& bindings) {
    GaussRational acc;
    for (const auto& [e, c] : p.terms()) {
        GaussRational t = c;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            auto it = bindings.find(p.vars()[k]);
            if (it == bindings.end())
                throw MathError(ErrorCode::UnboundParameter, "parameter '" + p.vars()[k] + "' is unbound",
                                p.vars()[k]);
            GaussRational v = it->second;
            for (uint32_t j = 0; j < e[k]; ++j) t *= v;
        }
        acc += t;
    }
    return acc;
}

ScalarValue subst_poly(const Poly& p, const std::map<std::string, ScalarValue>& bindings) {
    ScalarValue acc;
    for (const auto& [e, c] : p.terms()) {
        ScalarValue t{c};
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            auto it = bindings.find(p.vars()[k]);
            ScalarValue v = it != bindings.end() ? it->second : ScalarValue::parameter(p.vars()[k]);
            t *= v.pow(e[k]);
        }
        acc += t;
    }
    return acc;
}

} // namespace

GaussRational ScalarValue::evaluate(const std::map<std::string, GaussRational>& bindings) const {
    if (bindings.count("pi"))
        throw MathError(ErrorCode::UnboundParameter, "'pi' cannot be bound to a numeric value", "pi");
    for (const auto& name : parameters())
        if (name == "pi")
            throw MathError(ErrorCode::UnboundParameter,
                            "'pi' occurs in the value and has no numeric evaluation", "pi");
    GaussRational d = eval_poly(den_, bindings);
    if (d.is_zero())
        throw MathError(ErrorCode::DenominatorVanishes,
                        "denominator vanishes at the given binding: " + den_.to_string());
    return eval_poly(num_, bindings) / d;
}

ScalarValue ScalarValue::substitute(const std::map<std::string, ScalarValue>& bindings) const {
    if (bindings.empty()) return *this;
    ScalarValue n = subst_poly(num_, bindings);
    ScalarValue d = subst_poly(den_, bindings);
    if (d.is_zero())
        throw MathError(ErrorCode::DenominatorVanishes,
                        "denominator vanishes under substitution: " + den_.to_string());
    return n / d;
}

std::pair<ScalarValue, ScalarValue> ScalarValue::split_real_imag() const {
    Poly n = num_, d = den_;
    auto [dre, dim] = d.split_coefficients();
    if (!dim.is_zero()) {
        // Clear i from the denominator by its coefficient conjugate.
        Poly dc = d.conj();
        n = n * dc;
        d = d * dc;
        auto check = d.split_coefficients();
        d = check.first; // imaginary part is zero by construction
    }
    auto [nre, nim] = n.split_coefficients();
    return {ScalarValue(nre, d), ScalarValue(nim, d)};
}

std::optional<ScalarValue> ScalarValue::sqrt() const {
    if (is_zero()) return ScalarValue();
    Poly p = num_ * den_;
    auto r = p.sqrt();
    if (!r) return std::nullopt;
    return ScalarValue(*r, den_);
}

std::string ScalarValue::to_string() const {
    if (den_.is_constant() && den_.constant_value().is_one()) {
        if (num_.is_constant()) return num_.to_string();
        if (num_.term_count() == 1) return num_.to_string();
        return "(" + num_.to_string() + ")";
    }
    std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    std::string d = den_.term_count() > 1 ? "(" + den_.to_string() + ")" : den_.to_string();
    return n + "/" + d;
}

std::string to_string(const ScalarValue& v) { return v.to_string(); }

// ---- parser -----------------------------------------------------------------

namespace {

struct ScalarParser {
    const std::string& text;
    size_t pos = 0;

    explicit ScalarParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("scalar parse error at offset " + std::to_string(pos) + ": " + why +
                         " in \"" + text + "\"");
    }

    ScalarValue parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        ScalarValue acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    ScalarValue parse_term() {
        ScalarValue acc = parse_factor();
        while (true) {
            if (eat('*'))
                acc *= parse_factor();
            else if (eat('/'))
                acc /= parse_factor();
            else
                break;
        }
        return acc;
    }

    ScalarValue parse_factor() {
        ScalarValue base = parse_base();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent");
            long e = std::stol(text.substr(start, pos - start));
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    ScalarValue parse_base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            ScalarValue v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos;
            return -parse_base();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            mpz_class z(text.substr(start, pos - start));
            return ScalarValue(Rational(z));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (name == "i") return ScalarValue::unit_i();
            return ScalarValue::parameter(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

ScalarValue parse_scalar(const std::string& text) {
    ScalarParser p(text);
    ScalarValue v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::UnboundParameter: return "UnboundParameter";
        case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::NotSemisimple: return "NotSemisimple";
        case ErrorCode::NotCommuting: return "NotCommuting";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::JacobiFails: return "JacobiFails";
        case ErrorCode::NotSolvable: return "NotSolvable";
        case ErrorCode::RegularElementNotFound: return "RegularElementNotFound";
        case ErrorCode::HullBracketInvalid: return "HullBracketInvalid";
        case ErrorCode::WeightNotClosed: return "WeightNotClosed";
        case ErrorCode::NotComposable: return "NotComposable";
        case ErrorCode::NotSymplectic: return "NotSymplectic";
        case ErrorCode::OddDimension: return "OddDimension";
        case ErrorCode::NonCommutingAction: return "NonCommutingAction";
        case ErrorCode::UnsupportedTranscendence: return "UnsupportedTranscendence";
        case ErrorCode::UndecidableWithParameters: return "UndecidableWithParameters";
        case ErrorCode::QuasiIsoFails: return "QuasiIsoFails";
    }
    return "UnknownError";
}

} // namespace solvco
