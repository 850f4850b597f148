#include "hecke/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

void check_exponent(const Rational& e)
{
    if (denominator(e) != 1 && denominator(e) != kMaxExponentDenominator)
        throw InternalError("exponent denominator bound exceeded: " + rat_to_string(e));
}

// ---------------------------------------------------------------------------
// QtPoly

QtPoly QtPoly::constant(const Rational& c)
{
    QtPoly p;
    p.add_term(QtMono{}, c);
    return p;
}

QtPoly QtPoly::monomial(const QtMono& m, const Rational& c)
{
    QtPoly p;
    p.add_term(m, c);
    return p;
}

QtPoly QtPoly::param(int slot, const Rational& exp)
{
    QtMono m;
    m.e[slot] = exp;
    return monomial(m, 1);
}

void QtPoly::add_term(const QtMono& m, const Rational& c)
{
    if (c == 0)
        return;
    for (const auto& e : m.e)
        check_exponent(e);
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

QtPoly QtPoly::operator+(const QtPoly& o) const
{
    QtPoly r(*this);
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

QtPoly QtPoly::operator-(const QtPoly& o) const
{
    QtPoly r(*this);
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

QtPoly QtPoly::operator-() const
{
    QtPoly r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

QtPoly QtPoly::operator*(const QtPoly& o) const
{
    QtPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            QtMono m = m1;
            for (int i = 0; i < 3; ++i)
                m.e[i] += m2.e[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

QtPoly QtPoly::scaled(const Rational& c) const
{
    QtPoly r;
    if (c == 0)
        return r;
    for (const auto& [m, x] : terms_)
        r.terms_.emplace(m, x * c);
    return r;
}

QtPoly QtPoly::shifted(const QtMono& s) const
{
    QtPoly r;
    for (const auto& [m, c] : terms_) {
        QtMono mm = m;
        for (int i = 0; i < 3; ++i) {
            mm.e[i] += s.e[i];
            check_exponent(mm.e[i]);
        }
        r.terms_.emplace(mm, c);
    }
    return r;
}

QtPoly QtPoly::bar() const
{
    QtPoly r;
    for (const auto& [m, c] : terms_) {
        QtMono mm;
        for (int i = 0; i < 3; ++i)
            mm.e[i] = -m.e[i];
        r.terms_.emplace(mm, c);
    }
    return r;
}

QtPoly QtPoly::substitute_q(int kappa) const
{
    QtPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.e[1] != 0)
            throw DomainError("cannot specialize: q_long parameter present");
        QtMono mm;
        mm.e[2] = m.e[2] + m.e[0] * Rational(kappa, 2);
        r.add_term(mm, c);
    }
    return r;
}

bool QtPoly::uses_slot(int slot) const
{
    for (const auto& [m, c] : terms_)
        if (m.e[slot] != 0)
            return true;
    return false;
}

namespace {

Rational grlex_degree(const QtMono& m) { return m.e[0] + m.e[1] + m.e[2]; }

bool grlex_less(const QtMono& a, const QtMono& b)
{
    Rational da = grlex_degree(a), db = grlex_degree(b);
    if (da != db)
        return da < db;
    return a.e < b.e;
}

} // namespace

QtMono QtPoly::leading_monomial() const
{
    if (terms_.empty())
        throw InternalError("leading monomial of the zero polynomial");
    QtMono best = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (grlex_less(best, m))
            best = m;
    return best;
}

QtMono QtPoly::min_exponents() const
{
    if (terms_.empty())
        throw InternalError("min exponents of the zero polynomial");
    QtMono lo = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < 3; ++i)
            lo.e[i] = std::min(lo.e[i], m.e[i]);
    return lo;
}

Rational QtPoly::coefficient(const QtMono& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string QtPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    static const char* names[3] = {"q", "ql", "t"};
    std::vector<std::pair<QtMono, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ts) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::string vars;
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] == 0)
                continue;
            if (!vars.empty())
                vars += " ";
            vars += names[i];
            if (m.e[i] != 1)
                vars += "^" + rat_to_string(m.e[i]);
        }
        if (vars.empty())
            os << rat_to_string(mag);
        else if (mag == 1)
            os << vars;
        else
            os << rat_to_string(mag) << " " << vars;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// ParamScalar

namespace {

// dense univariate Laurent polynomial in s = t^{1/2}: value = sum c[i] s^(off+i)
struct UniPoly {
    long off = 0;
    std::vector<Rational> c;
};

UniPoly to_unipoly(const QtPoly& p)
{
    long lo = 0, hi = 0;
    bool any = false;
    for (const auto& [m, coef] : p.terms()) {
        Rational se = m.e[2] * 2;
        if (!is_integer(se))
            throw InternalError("non half-integer t exponent");
        long k = static_cast<long>(rfloor(se));
        if (!any) {
            lo = hi = k;
            any = true;
        }
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    UniPoly u;
    u.off = lo;
    u.c.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (const auto& [m, coef] : p.terms()) {
        long k = static_cast<long>(rfloor(Rational(m.e[2] * 2)));
        u.c[static_cast<std::size_t>(k - lo)] = coef;
    }
    return u;
}

QtPoly from_unipoly(const UniPoly& u)
{
    QtPoly p;
    for (std::size_t i = 0; i < u.c.size(); ++i)
        if (u.c[i] != 0) {
            QtMono m;
            m.e[2] = Rational(u.off + static_cast<long>(i), 2);
            p.add_term(m, u.c[i]);
        }
    return p;
}

void trim(std::vector<Rational>& c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

// division with remainder in Q[s] (plain coefficient vectors, no offsets)
std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b)
{
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

std::vector<Rational> poly_divide_exact(std::vector<Rational> a, const std::vector<Rational>& b)
{
    trim(a);
    std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        trim(a);
    }
    if (!a.empty())
        throw InternalError("inexact univariate division");
    return q;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& x : a)
            x /= lead;
    }
    return a;
}

// strips the s^k content, returning (stripped coefficients, k)
std::pair<std::vector<Rational>, long> strip_spower(const UniPoly& u)
{
    std::size_t i = 0;
    while (i < u.c.size() && u.c[i] == 0)
        ++i;
    std::vector<Rational> c(u.c.begin() + static_cast<long>(i), u.c.end());
    trim(c);
    return {c, u.off + static_cast<long>(i)};
}

} // namespace

ParamScalar::ParamScalar(QtPoly n, QtPoly d) : num_(std::move(n)), den_(std::move(d))
{
    if (den_.is_zero())
        throw DomainError("zero denominator");
    normalize();
}

void ParamScalar::normalize()
{
    if (num_.is_zero()) {
        den_ = QtPoly::constant(1);
        return;
    }
    if (den_.is_single_term()) {
        const auto& [m, c] = *den_.terms().begin();
        QtMono inv;
        for (int i = 0; i < 3; ++i)
            inv.e[i] = -m.e[i];
        num_ = num_.shifted(inv).scaled(Rational(1) / c);
        den_ = QtPoly::constant(1);
        return;
    }
    // fully reduce q-free fractions in the working variable s = t^{1/2}
    if (!num_.uses_slot(0) && !num_.uses_slot(1) && !den_.uses_slot(0) && !den_.uses_slot(1)) {
        UniPoly un = to_unipoly(num_), ud = to_unipoly(den_);
        auto [nc, nk] = strip_spower(un);
        auto [dc, dk] = strip_spower(ud);
        auto g = poly_gcd(nc, dc);
        if (g.size() > 1) {
            nc = poly_divide_exact(nc, g);
            dc = poly_divide_exact(dc, g);
        }
        num_ = from_unipoly(UniPoly{nk, nc});
        den_ = from_unipoly(UniPoly{dk, dc});
        if (den_.is_single_term()) {
            normalize();
            return;
        }
    }
    // cancel the denominator's monomial window and make it lead with 1
    QtMono lo = den_.min_exponents();
    QtMono inv;
    for (int i = 0; i < 3; ++i)
        inv.e[i] = -lo.e[i];
    num_ = num_.shifted(inv);
    den_ = den_.shifted(inv);
    Rational lead = den_.coefficient(den_.leading_monomial());
    num_ = num_.scaled(Rational(1) / lead);
    den_ = den_.scaled(Rational(1) / lead);
}

bool ParamScalar::is_polynomial() const
{
    return den_ == QtPoly::constant(1);
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const
{
    if (den_ == o.den_)
        return ParamScalar(num_ + o.num_, den_);
    return ParamScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const
{
    if (den_ == o.den_)
        return ParamScalar(num_ - o.num_, den_);
    return ParamScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ParamScalar ParamScalar::operator*(const ParamScalar& o) const
{
    return ParamScalar(num_ * o.num_, den_ * o.den_);
}

ParamScalar ParamScalar::operator/(const ParamScalar& o) const
{
    if (o.is_zero())
        throw DomainError("division by zero scalar");
    return ParamScalar(num_ * o.den_, den_ * o.num_);
}

ParamScalar ParamScalar::operator-() const
{
    ParamScalar r(*this);
    r.num_ = -r.num_;
    return r;
}

bool ParamScalar::operator==(const ParamScalar& o) const
{
    if (den_ == o.den_)
        return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

ParamScalar ParamScalar::bar() const
{
    return ParamScalar(num_.bar(), den_.bar());
}

ParamScalar ParamScalar::substitute_q(int kappa) const
{
    return ParamScalar(num_.substitute_q(kappa), den_.substitute_q(kappa));
}

std::string ParamScalar::to_string() const
{
    if (is_polynomial())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(int dim, const ExpVec& e, const ParamScalar& c)
{
    LaurentPoly p(dim);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::constant(int dim, const ParamScalar& c)
{
    return monomial(dim, zero_vec(static_cast<std::size_t>(dim)), c);
}

LaurentPoly LaurentPoly::variable(int dim, int i, const Rational& exp)
{
    ExpVec e = zero_vec(static_cast<std::size_t>(dim));
    e[static_cast<std::size_t>(i)] = exp;
    return monomial(dim, e, ParamScalar(1));
}

void LaurentPoly::add_term(const ExpVec& e, const ParamScalar& c)
{
    if (static_cast<int>(e.size()) != dim_)
        throw DomainError("exponent dimension mismatch");
    if (c.is_zero())
        return;
    for (const auto& x : e)
        check_exponent(x);
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    if (dim_ != o.dim_)
        throw DomainError("polynomial dimension mismatch");
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    if (dim_ != o.dim_)
        throw DomainError("polynomial dimension mismatch");
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    if (dim_ != o.dim_)
        throw DomainError("polynomial dimension mismatch");
    LaurentPoly r(dim_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(vadd(e1, e2), c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const ParamScalar& c) const
{
    LaurentPoly r(dim_);
    if (c.is_zero())
        return r;
    for (const auto& [e, x] : terms_)
        r.terms_.emplace(e, x * c);
    return r;
}

ParamScalar LaurentPoly::coefficient(const ExpVec& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? ParamScalar(0) : it->second;
}

LaurentPoly LaurentPoly::bar() const
{
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(vneg(e), c.bar());
    return r;
}

LaurentPoly LaurentPoly::diagonal_shift(const Vec& cov) const
{
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, c * ParamScalar::t(dot(e, cov)));
    return r;
}

LaurentPoly LaurentPoly::substitute_q(int kappa) const
{
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, c.substitute_q(kappa));
    return r;
}

std::string LaurentPoly::to_string(const std::string& var) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        std::string vars;
        for (int i = 0; i < dim_; ++i) {
            if (e[static_cast<std::size_t>(i)] == 0)
                continue;
            if (!vars.empty())
                vars += " ";
            vars += var + std::to_string(i + 1);
            if (e[static_cast<std::size_t>(i)] != 1)
                vars += "^" + rat_to_string(e[static_cast<std::size_t>(i)]);
        }
        std::string cs = c.to_string();
        if (vars.empty())
            os << cs;
        else if (cs == "1")
            os << vars;
        else
            os << "(" << cs << ") " << vars;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

LaurentPoly demazure_divide(const RootSystem& rs, const Root& r, const LaurentPoly& p)
{
    if (!rs.is_root(r.coords))
        throw DomainError("demazure_divide: not a root: " + vec_to_string(r.coords));
    LaurentPoly out(p.dim());
    for (const auto& [lambda, c] : p.terms()) {
        Rational m = rs.pairing(lambda, r);
        if (!is_integer(m))
            throw DomainError("monomial exponent pairs non-integrally with the coroot");
        long mi = static_cast<long>(rfloor(m));
        if (mi > 0) {
            ExpVec e = lambda;
            for (long k = 1; k <= mi; ++k) {
                e = vsub(e, r.coords);
                out.add_term(e, -c);
            }
        }
        else if (mi < 0) {
            ExpVec e = lambda;
            out.add_term(e, c);
            for (long k = 1; k < -mi; ++k) {
                e = vadd(e, r.coords);
                out.add_term(e, c);
            }
        }
    }
    return out;
}

LaurentPoly diagonal_shift(const RootSystem& rs, const LaurentPoly& p, const Vec& a)
{
    return p.diagonal_shift(mat_apply(rs.gram, a));
}

} // namespace hecke
