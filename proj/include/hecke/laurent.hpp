#ifndef HECKE_LAURENT_HPP
#define HECKE_LAURENT_HPP

#include "hecke/errors.hpp"
#include "hecke/rational.hpp"
#include "hecke/rootsys.hpp"

#include <array>
#include <map>
#include <string>

namespace hecke {

// Largest denominator an exponent may carry (hosts t^{1/2}, q^{1/2}).
inline constexpr int kMaxExponentDenominator = 2;

void check_exponent(const Rational& e);

/// Monomial in the formal parameters: slots (q, q_long, t), rational exponents.
struct QtMono {
    std::array<Rational, 3> e{Rational(0), Rational(0), Rational(0)};
    auto operator<=>(const QtMono&) const = default;
};

/// Sparse Laurent polynomial in the parameters q, q_long, t over Q.
class QtPoly {
public:
    QtPoly() = default;
    static QtPoly constant(const Rational& c);
    static QtPoly monomial(const QtMono& m, const Rational& c);
    static QtPoly param(int slot, const Rational& exp); // q^exp / t^exp ...

    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    const std::map<QtMono, Rational>& terms() const { return terms_; }

    void add_term(const QtMono& m, const Rational& c);
    QtPoly operator+(const QtPoly& o) const;
    QtPoly operator-(const QtPoly& o) const;
    QtPoly operator*(const QtPoly& o) const;
    QtPoly operator-() const;
    bool operator==(const QtPoly& o) const = default;
    QtPoly scaled(const Rational& c) const;
    QtPoly shifted(const QtMono& m) const; // multiply by a monomial

    QtPoly bar() const;                    // all parameter exponents negated
    // substitute q = t^{kappa/2}; throws if the q_long slot is populated
    QtPoly substitute_q(int kappa) const;
    bool uses_slot(int slot) const;

    QtMono leading_monomial() const;       // grlex-max, zero poly forbidden
    QtMono min_exponents() const;
    Rational coefficient(const QtMono& m) const;

    std::string to_string() const;

private:
    std::map<QtMono, Rational> terms_;
};

/// Element of the coefficient field: a fraction N/D of QtPoly with the
/// canonical normalization (monomial denominators cancelled, denominator
/// exponent window shifted to zero, leading denominator coefficient 1,
/// q-free fractions fully reduced by univariate gcd in s = t^{1/2}).
/// Equality is decided by exact cross-multiplication.
class ParamScalar {
public:
    ParamScalar() : num_(), den_(QtPoly::constant(1)) {}
    ParamScalar(const Rational& c) : num_(QtPoly::constant(c)), den_(QtPoly::constant(1)) {}
    ParamScalar(int c) : ParamScalar(Rational(c)) {}
    ParamScalar(QtPoly n, QtPoly d);
    explicit ParamScalar(QtPoly n) : num_(std::move(n)), den_(QtPoly::constant(1)) {}

    static ParamScalar q(const Rational& exp = 1) { return ParamScalar(QtPoly::param(0, exp)); }
    static ParamScalar q_slot(int slot, const Rational& exp)
    {
        return ParamScalar(QtPoly::param(slot, exp));
    }
    static ParamScalar t(const Rational& exp) { return ParamScalar(QtPoly::param(2, exp)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    const QtPoly& num() const { return num_; }
    const QtPoly& den() const { return den_; }

    ParamScalar operator+(const ParamScalar& o) const;
    ParamScalar operator-(const ParamScalar& o) const;
    ParamScalar operator*(const ParamScalar& o) const;
    ParamScalar operator/(const ParamScalar& o) const;
    ParamScalar operator-() const;
    bool operator==(const ParamScalar& o) const; // cross-multiplication

    ParamScalar bar() const;
    ParamScalar substitute_q(int kappa) const;
    bool uses_q() const { return num_.uses_slot(0) || num_.uses_slot(1) ||
                                 den_.uses_slot(0) || den_.uses_slot(1); }

    std::string to_string() const;

private:
    void normalize();
    QtPoly num_, den_;
};

using ExpVec = Vec;

/// Sparse Laurent polynomial in `dim` ambient variables over ParamScalar,
/// with rational exponent vectors (denominator at most 2).  Immutable-style
/// value semantics; all operations are pure.
class LaurentPoly {
public:
    LaurentPoly() : dim_(0) {}
    explicit LaurentPoly(int dim) : dim_(dim) {}
    static LaurentPoly monomial(int dim, const ExpVec& e, const ParamScalar& c);
    static LaurentPoly constant(int dim, const ParamScalar& c);
    static LaurentPoly variable(int dim, int i, const Rational& exp = 1); // z_i^exp

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<ExpVec, ParamScalar>& terms() const { return terms_; }

    void add_term(const ExpVec& e, const ParamScalar& c);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const = default;
    LaurentPoly scaled(const ParamScalar& c) const;

    ParamScalar coefficient(const ExpVec& e) const;
    ParamScalar constant_term() const { return coefficient(zero_vec(dim_)); }
    LaurentPoly bar() const;
    // e^lambda -> t^{dot(lambda, cov)} e^lambda
    LaurentPoly diagonal_shift(const Vec& cov) const;
    LaurentPoly substitute_q(int kappa) const;

    std::string to_string(const std::string& var = "z") const;

private:
    int dim_;
    std::map<ExpVec, ParamScalar> terms_;
};

// ((s_r - 1)p) / (e^r - 1) in closed telescoping form; always a polynomial.
LaurentPoly demazure_divide(const RootSystem& rs, const Root& r, const LaurentPoly& p);

// e^lambda -> t^{(lambda, a)} e^lambda with the pairing taken in rs's form.
LaurentPoly diagonal_shift(const RootSystem& rs, const LaurentPoly& p, const Vec& a);

} // namespace hecke

#endif
