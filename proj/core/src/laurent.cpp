#include "clusterforge/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {

void require_same_ring(int a, int b) {
    if (a != b)
        throw schema_error("variable-count mismatch: " + std::to_string(a) +
                           " vs " + std::to_string(b));
}

} // namespace

LaurentPoly LaurentPoly::constant(int nvars, Int c) {
    LaurentPoly p(nvars);
    p.add_term(Monomial{std::vector<int32_t>(nvars, 0)}, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    if (i < 1 || i > nvars)
        throw schema_error("variable index " + std::to_string(i) +
                           " out of range 1.." + std::to_string(nvars));
    std::vector<int32_t> e(nvars, 0);
    e[i - 1] = 1;
    return term(nvars, std::move(e), 1);
}

LaurentPoly LaurentPoly::term(int nvars, std::vector<int32_t> exps, Int c) {
    if ((int)exps.size() != nvars)
        throw schema_error("exponent vector length " + std::to_string(exps.size()) +
                           " does not match variable count " + std::to_string(nvars));
    LaurentPoly p(nvars);
    p.add_term(Monomial{std::move(exps)}, c);
    return p;
}

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
           terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

Int LaurentPoly::constant_term() const {
    Monomial one{std::vector<int32_t>(nvars_, 0)};
    auto it = terms_.find(one);
    return it == terms_.end() ? Int(0) : it->second;
}

int32_t LaurentPoly::min_exponent(int i) const {
    int32_t m = 0;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        int32_t v = mono.e[i - 1];
        if (first || v < m) m = v;
        first = false;
    }
    return m;
}

std::vector<int32_t> LaurentPoly::max_exponents() const {
    std::vector<int32_t> m(nvars_, 0);
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        for (int i = 0; i < nvars_; ++i)
            m[i] = first ? mono.e[i] : std::max(m[i], mono.e[i]);
        first = false;
    }
    return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_ring(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_same_ring(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_ring(a.nvars_, b.nvars_);
    LaurentPoly p(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            p.add_term(ma + mb, ca * cb);
    return p;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) {
        if (!is_unit())
            throw bad_substitution("negative power of a non-unit: (" + str() + ")^" +
                                   std::to_string(k));
        const auto& [m, c] = *terms_.begin();
        Monomial inv = m;
        for (auto& v : inv.e) v = static_cast<int32_t>(-v * int64_t(-k));
        LaurentPoly p(nvars_);
        p.add_term(inv, (c == 1 || (-k) % 2 == 0) ? Int(1) : Int(-1));
        return p;
    }
    LaurentPoly acc = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

std::string LaurentPoly::str(std::string_view prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool printed = false;
        if (a != 1 || m.is_constant()) {
            out << a.get_str();
            printed = true;
        }
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (printed) out << "*";
            out << prefix << (i + 1);
            if (m.e[i] != 1) out << "^" << m.e[i];
            printed = true;
        }
    }
    return out.str();
}

namespace {

// Exact division of ordinary polynomials (all exponents nonnegative) by
// greedy reduction at the leading term.  Returns false on any failed step.
bool divide_cleared(LaurentPoly f, const LaurentPoly& g, LaurentPoly& q) {
    q = LaurentPoly(f.nvars());
    const auto& [mg, cg] = *g.terms().rbegin();
    while (!f.is_zero()) {
        const auto& [mf, cf] = *f.terms().rbegin();
        Monomial t = mf - mg;
        if (!t.nonnegative()) return false;
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
        if (rem != 0) return false;
        LaurentPoly step(f.nvars());
        step.add_term(t, c);
        q += step;
        f -= step * g;
    }
    return true;
}

// Monomial factor x^shift as a polynomial, for clearing denominators.
LaurentPoly shift_monomial(int nvars, const std::vector<int32_t>& shift, int sign) {
    std::vector<int32_t> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = sign * shift[i];
    return LaurentPoly::term(nvars, std::move(e), 1);
}

std::vector<int32_t> min_exponent_vector(const LaurentPoly& p) {
    std::vector<int32_t> v(p.nvars());
    for (int i = 1; i <= p.nvars(); ++i) v[i - 1] = p.min_exponent(i);
    return v;
}

} // namespace

LaurentPoly lp_exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw non_exact_division(num.str(), den.str());
    if (num.nvars() != den.nvars())
        throw schema_error("variable-count mismatch: " + std::to_string(num.nvars()) +
                           " vs " + std::to_string(den.nvars()));
    if (num.is_zero()) return LaurentPoly(num.nvars());

    // Clear per-variable minimum exponents.  Valuations are additive, so a
    // Laurent quotient exists exactly when the cleared quotient is an
    // ordinary polynomial; that keeps the reduction loop finite.
    std::vector<int32_t> sn = min_exponent_vector(num);
    std::vector<int32_t> sd = min_exponent_vector(den);
    LaurentPoly fn = num * shift_monomial(num.nvars(), sn, -1);
    LaurentPoly fd = den * shift_monomial(den.nvars(), sd, -1);
    LaurentPoly q(num.nvars());
    if (!divide_cleared(fn, fd, q))
        throw non_exact_division(num.str(), den.str());
    std::vector<int32_t> back(num.nvars());
    for (int i = 0; i < num.nvars(); ++i) back[i] = sn[i] - sd[i];
    return q * shift_monomial(num.nvars(), back, 1);
}

RationalFn::RationalFn(LaurentPoly n) : num(std::move(n)), den(LaurentPoly::constant(num.nvars(), 1)) {}

RationalFn::RationalFn(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw non_exact_division(num.str(), den.str());
    if (num.is_zero()) {
        den = LaurentPoly::constant(num.nvars(), 1);
        return;
    }
    if (den.is_monomial()) {
        // fold the monomial part into the numerator; keep integer content
        const auto& [m, c] = *den.terms().begin();
        Monomial inv = m;
        for (auto& v : inv.e) v = -v;
        LaurentPoly shift(num.nvars());
        shift.add_term(inv, 1);
        num = num * shift;
        den = LaurentPoly::constant(num.nvars(), c);
    }
    try {
        num = lp_exact_divide(num, den);
        den = LaurentPoly::constant(num.nvars(), 1);
    } catch (const non_exact_division&) {
        // genuinely rational; normalize the sign of the denominator
        if (den.terms().rbegin()->second < 0) {
            LaurentPoly minus_one = LaurentPoly::constant(num.nvars(), -1);
            num = num * minus_one;
            den = den * minus_one;
        }
    }
}

RationalFn RationalFn::pow(int k) const {
    if (k < 0) return RationalFn(den.pow(-k), num.pow(-k));
    return RationalFn(num.pow(k), den.pow(k));
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num * b.num, a.den * b.den);
}

std::string RationalFn::str(std::string_view prefix) const {
    if (is_polynomial()) return num.str(prefix);
    return "(" + num.str(prefix) + ") / (" + den.str(prefix) + ")";
}

RationalFn lp_substitute(const LaurentPoly& p, const std::vector<RationalFn>& images) {
    if ((int)images.size() != p.nvars())
        throw schema_error("expected " + std::to_string(p.nvars()) + " images, got " +
                           std::to_string(images.size()));
    int m = images.empty() ? 0 : images[0].num.nvars();
    for (const auto& img : images)
        if (img.num.nvars() != m)
            throw schema_error("images live in different rings");

    bool negative_on_nonunit = false;
    RationalFn acc{LaurentPoly(m)};
    for (const auto& [mono, c] : p.terms()) {
        RationalFn t{LaurentPoly::constant(m, c)};
        for (int i = 0; i < p.nvars(); ++i) {
            int32_t e = mono.e[i];
            if (e == 0) continue;
            if (e < 0 && !(images[i].is_polynomial() && images[i].num.is_unit()))
                negative_on_nonunit = true;
            t = t * images[i].pow(e);
        }
        acc = acc + t;
    }
    if (negative_on_nonunit && !acc.den.is_one())
        throw bad_substitution(
            "negative exponent applied to a non-unit image did not cancel: denominator " +
            acc.den.str());
    return acc;
}

} // namespace clusterforge
