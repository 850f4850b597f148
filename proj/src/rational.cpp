#include "hecke/rational.hpp"

#include "hecke/errors.hpp"

#include <sstream>

namespace hecke {

std::string rat_to_string(const Rational& r)
{
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1)
        os << "/" << denominator(r);
    return os.str();
}

Rational rat_from_string(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw DomainError("zero denominator in rational literal: " + s);
        return Rational(num, den);
    }
    catch (const std::exception&) {
        throw DomainError("malformed rational literal: " + s);
    }
}

std::string vec_to_string(const Vec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += rat_to_string(v[i]);
    }
    return out + ")";
}

bool solve_linear(const Mat& m, const Vec& b, Vec& out)
{
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    Mat a(m);
    Vec rhs(b);
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        std::swap(rhs[piv], rhs[rank]);
        Rational inv = Rational(1) / a[rank][col];
        for (std::size_t j = col; j < cols; ++j)
            a[rank][j] *= inv;
        rhs[rank] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0)
                continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] -= f * a[rank][j];
            rhs[i] -= f * rhs[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (rhs[i] != 0)
            return false;
    out = zero_vec(cols);
    for (std::size_t i = 0; i < rank; ++i)
        out[pivot_col[i]] = rhs[i];
    return true;
}

} // namespace hecke
