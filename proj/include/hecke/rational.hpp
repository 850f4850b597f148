#ifndef HECKE_RATIONAL_HPP
#define HECKE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace hecke {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// exact floor of a rational
inline Integer rfloor(const Rational& r)
{
    Integer q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r))
        --q;
    return q;
}

inline Rational dot(const Vec& a, const Vec& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Vec vadd(const Vec& a, const Vec& b)
{
    Vec r(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += b[i];
    return r;
}

inline Vec vsub(const Vec& a, const Vec& b)
{
    Vec r(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] -= b[i];
    return r;
}

inline Vec vneg(const Vec& a)
{
    Vec r(a);
    for (auto& x : r)
        x = -x;
    return r;
}

inline Vec vscale(const Rational& c, const Vec& a)
{
    Vec r(a);
    for (auto& x : r)
        x *= c;
    return r;
}

inline bool is_zero_vec(const Vec& a)
{
    for (const auto& x : a)
        if (x != 0)
            return false;
    return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline Mat identity_mat(std::size_t n)
{
    Mat m(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline Vec mat_apply(const Mat& m, const Vec& v)
{
    Vec r(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        r[i] = dot(m[i], v);
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b)
{
    std::size_t n = a.size(), p = b[0].size(), k = b.size();
    Mat r(n, zero_vec(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < p; ++j)
                    r[i][j] += a[i][l] * b[l][j];
    return r;
}

std::string rat_to_string(const Rational& r);
Rational rat_from_string(const std::string& s);
std::string vec_to_string(const Vec& v);

// Solves M x = b exactly by Gaussian elimination; M is n_rows x n_cols.
// Returns false when the system is inconsistent.  When the solution space
// is positive-dimensional, free variables are set to zero.
bool solve_linear(const Mat& m, const Vec& b, Vec& out);

} // namespace hecke

#endif
