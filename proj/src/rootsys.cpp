#include "hecke/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hecke {

std::string family_name(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::A1xA1: return "A1xA1";
    }
    return "?";
}

Rational RootSystem::form(const Vec& x, const Vec& y) const
{
    Rational s = 0;
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < dim; ++j)
            if (gram[i][j] != 0)
                s += x[i] * gram[i][j] * y[j];
    }
    return s;
}

Rational RootSystem::pairing(const Vec& x, const Root& r) const
{
    return 2 * form(x, r.coords) / form(r.coords, r.coords);
}

Vec RootSystem::coroot(const Root& r) const
{
    return vscale(Rational(2) / form(r.coords, r.coords), r.coords);
}

Vec RootSystem::reflect_vec(const Root& r, const Vec& x) const
{
    return vsub(x, vscale(pairing(x, r), r.coords));
}

bool RootSystem::is_root(const Vec& v) const
{
    return positive_index_.count(v) || positive_index_.count(vneg(v));
}

std::optional<Root> RootSystem::find_root(const Vec& v) const
{
    auto it = positive_index_.find(v);
    if (it != positive_index_.end())
        return positive_roots[it->second];
    it = positive_index_.find(vneg(v));
    if (it != positive_index_.end()) {
        Root r = positive_roots[it->second];
        r.coords = v;
        return r;
    }
    return std::nullopt;
}

Root RootSystem::root_at(const Vec& v) const
{
    auto r = find_root(v);
    if (!r)
        throw DomainError("not a root of " + family_name(family) + std::to_string(rank) + ": " + vec_to_string(v));
    return *r;
}

bool RootSystem::is_dominant(const Vec& x) const
{
    for (const auto& r : simple_roots)
        if (form(x, r.coords) < 0)
            return false;
    return true;
}

bool RootSystem::in_coweight_lattice(const Vec& x) const
{
    for (const auto& r : simple_roots)
        if (!is_integer(form(x, r.coords)))
            return false;
    return true;
}

bool RootSystem::in_coroot_lattice(const Vec& v) const
{
    // Solve v = sum c_i r_i^V over the coroot basis; integer coefficients
    // certify membership.  Type A's GL ambient quotients out the diagonal.
    Vec w = v;
    if (family == Family::A) {
        Rational mean = 0;
        for (const auto& x : w)
            mean += x;
        mean /= dim;
        for (auto& x : w)
            x -= mean;
    }
    Mat m(dim, zero_vec(rank));
    for (int j = 0; j < rank; ++j) {
        Vec cv = coroot(simple_roots[j]);
        for (int i = 0; i < dim; ++i)
            m[i][j] = cv[i];
    }
    Vec c;
    if (!solve_linear(m, w, c))
        return false;
    // solve_linear leaves free variables at zero; verify the residual
    Vec res = w;
    for (int j = 0; j < rank; ++j)
        res = vsub(res, vscale(c[j], coroot(simple_roots[j])));
    if (!is_zero_vec(res))
        return false;
    for (const auto& x : c)
        if (!is_integer(x))
            return false;
    return true;
}

void RootSystem::set_unequal_parameters(bool on)
{
    params_ = {0, 0};
    if (on)
        params_[static_cast<int>(LengthClass::Long)] = 1;
}

WeylElement RootSystem::identity_element() const
{
    return WeylElement{{}, identity_mat(dim)};
}

WeylElement RootSystem::simple_element(int i) const
{
    if (i < 0 || i >= rank)
        throw DomainError("simple root index out of range: " + std::to_string(i));
    WeylElement w;
    w.word = {i};
    w.matrix = identity_mat(dim);
    const Root& r = simple_roots[i];
    for (int c = 0; c < dim; ++c) {
        Vec basis = zero_vec(dim);
        basis[c] = 1;
        Vec img = reflect_vec(r, basis);
        for (int rr = 0; rr < dim; ++rr)
            w.matrix[rr][c] = img[rr];
    }
    return w;
}

WeylElement RootSystem::reflection_element(const Root& r) const
{
    Mat m = identity_mat(dim);
    for (int c = 0; c < dim; ++c) {
        Vec basis = zero_vec(dim);
        basis[c] = 1;
        Vec img = reflect_vec(r, basis);
        for (int rr = 0; rr < dim; ++rr)
            m[rr][c] = img[rr];
    }
    return WeylElement{reduced_word_of(m), m};
}

WeylElement RootSystem::compose(const WeylElement& a, const WeylElement& b) const
{
    WeylElement w;
    w.word = b.word;
    w.word.insert(w.word.end(), a.word.begin(), a.word.end());
    w.matrix = mat_mul(a.matrix, b.matrix);
    return w;
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const
{
    WeylElement w = identity_element();
    for (int i : word)
        w = compose(simple_element(i), w);
    return w;
}

Vec RootSystem::apply(const WeylElement& w, const Vec& x) const
{
    return mat_apply(w.matrix, x);
}

int RootSystem::weyl_length(const WeylElement& w) const
{
    int count = 0;
    for (const auto& r : positive_roots)
        if (positive_index_.count(vneg(mat_apply(w.matrix, r.coords))))
            ++count;
    return count;
}

std::vector<int> RootSystem::reduced_word_of(const Mat& matrix) const
{
    // Peel simple reflections off on the right: while w != e there is a
    // simple r with w(r) negative, and w s_r is strictly shorter.
    std::vector<int> collected;
    Mat m = matrix;
    Mat id = identity_mat(dim);
    std::size_t guard = weyl_order_bound() + positive_roots.size() + 2;
    while (m != id) {
        bool found = false;
        for (int i = 0; i < rank; ++i) {
            Vec img = mat_apply(m, simple_roots[i].coords);
            if (positive_index_.count(vneg(img))) {
                m = mat_mul(m, simple_element(i).matrix);
                collected.push_back(i);
                found = true;
                break;
            }
        }
        if (!found)
            throw InternalError("reduced_word_of: matrix is not a Weyl element");
        if (collected.size() > guard)
            throw InternalError("reduced_word_of: no convergence");
    }
    // peeling gives M * S_{c0} * ... * S_{ck} = I, so M = S_{ck} ... S_{c0}
    // and c[0] acts first, matching the from_word convention.
    return collected;
}

std::size_t RootSystem::weyl_order_bound() const
{
    std::size_t n = static_cast<std::size_t>(rank);
    auto fact = [](std::size_t k) {
        std::size_t f = 1;
        for (std::size_t i = 2; i <= k; ++i)
            f *= i;
        return f;
    };
    switch (family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return fact(n) << n;
    case Family::D: return n >= 1 ? (fact(n) << (n - 1)) : 1;
    case Family::G2: return 12;
    case Family::A1xA1: return 4;
    }
    return 1;
}

std::vector<Weight> RootSystem::minuscule_weights() const
{
    std::vector<Weight> out;
    out.push_back(Weight{zero_vec(dim), LatticeTag::Coweight});
    for (int j = 0; j < rank; ++j)
        if (highest_coeffs[j] == 1)
            out.push_back(Weight{fundamental_coweights[j], LatticeTag::Coweight});
    return out;
}

Vec RootSystem::minuscule_rep_of_negative(const Vec& xi) const
{
    for (const auto& g : minuscule_weights())
        if (in_coroot_lattice(vadd(xi, g.coords)))
            return g.coords;
    throw InternalError("no minuscule representative for " + vec_to_string(xi));
}

std::string RootSystem::describe() const
{
    std::ostringstream os;
    os << "family " << family_name(family) << "\n";
    os << "rank " << rank << "\n";
    os << "ambient_dim " << dim << "\n";
    os << "simple_roots";
    for (const auto& r : simple_roots)
        os << " " << vec_to_string(r.coords);
    os << "\n";
    os << "positive_roots " << positive_roots.size() << "\n";
    for (const auto& r : positive_roots)
        os << "  " << vec_to_string(r.coords)
           << (r.length_class == LengthClass::Long ? " long" : " short") << "\n";
    os << "highest_root " << vec_to_string(highest_root.coords) << "\n";
    os << "braid_orders";
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            os << " m(" << i + 1 << "," << j + 1 << ")=" << braid_orders[i][j];
    os << "\n";
    os << "minuscule";
    for (const auto& w : minuscule_weights())
        os << " " << vec_to_string(w.coords);
    os << "\n";
    return os.str();
}

namespace {

// coefficients of v over the simple roots (exact; throws if outside the span)
Vec simple_coefficients(const RootSystem& rs, const Vec& v)
{
    Mat m(rs.dim, zero_vec(rs.rank));
    for (int j = 0; j < rs.rank; ++j)
        for (int i = 0; i < rs.dim; ++i)
            m[i][j] = rs.simple_roots[j].coords[i];
    Vec c;
    if (!solve_linear(m, v, c))
        throw InternalError("vector outside the root span: " + vec_to_string(v));
    Vec res = v;
    for (int j = 0; j < rs.rank; ++j)
        res = vsub(res, vscale(c[j], rs.simple_roots[j].coords));
    if (!is_zero_vec(res))
        throw InternalError("vector outside the root span: " + vec_to_string(v));
    return c;
}

int braid_order_from_cartan(const Rational& product)
{
    if (product == 0) return 2;
    if (product == 1) return 3;
    if (product == 2) return 4;
    if (product == 3) return 6;
    throw InternalError("invalid Cartan product " + rat_to_string(product));
}

} // namespace

RootSystem build_from_simples(Family family, int rank, int dim, Mat gram,
                              std::vector<Vec> simples)
{
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.dim = dim;
    rs.gram = std::move(gram);
    for (const auto& s : simples) // provisional; re-pointed at canonical entries below
        rs.simple_roots.push_back(Root{s, LengthClass::Long});

    // closure enumeration from the simple roots
    std::set<Vec> all(simples.begin(), simples.end());
    for (const auto& s : simples)
        all.insert(vneg(s));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> snapshot(all.begin(), all.end());
        for (const auto& r : snapshot) {
            Root rr{r, LengthClass::Long};
            for (const auto& x : snapshot) {
                Vec img = rs.reflect_vec(rr, x);
                if (all.insert(img).second)
                    grew = true;
            }
        }
    }

    // validate the axioms while classifying positive roots
    Rational max_norm = 0;
    for (const auto& v : all)
        max_norm = std::max(max_norm, rs.form(v, v));
    std::vector<std::pair<Rational, Vec>> pos; // (height, coords)
    for (const auto& v : all) {
        if (is_zero_vec(v))
            throw InternalError("zero vector in root closure");
        Vec c = simple_coefficients(rs, v);
        bool nonneg = true, nonpos = true;
        Rational height = 0;
        for (const auto& x : c) {
            height += x;
            if (x < 0) nonneg = false;
            if (x > 0) nonpos = false;
        }
        if (!nonneg && !nonpos)
            throw InternalError("closure produced a mixed-sign root " + vec_to_string(v));
        for (const auto& w : all) {
            Rational p = 2 * rs.form(v, w) / rs.form(v, v);
            if (!is_integer(p))
                throw InternalError("non-integral Cartan pairing");
        }
        if (nonneg)
            pos.emplace_back(height, v);
    }
    std::sort(pos.begin(), pos.end());
    for (auto& [h, v] : pos) {
        Root r{v, rs.form(v, v) == max_norm ? LengthClass::Long : LengthClass::Short};
        rs.positive_index_[v] = static_cast<int>(rs.positive_roots.size());
        rs.positive_roots.push_back(r);
    }
    rs.simple_roots.clear();
    for (auto& s : simples) {
        auto it = rs.positive_index_.find(s);
        if (it == rs.positive_index_.end())
            throw InternalError("simple root missing from closure");
        rs.simple_roots.push_back(rs.positive_roots[it->second]);
    }
    rs.highest_root = rs.positive_roots.back();

    rs.highest_coeffs.resize(rank);
    Vec hc = simple_coefficients(rs, rs.highest_root.coords);
    for (int j = 0; j < rank; ++j) {
        if (!is_integer(hc[j]) || hc[j] < 0)
            throw InternalError("highest root has bad coefficients");
        rs.highest_coeffs[j] = static_cast<int>(numerator(hc[j]));
    }

    rs.braid_orders.assign(rank, std::vector<int>(rank, 1));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (i != j)
                rs.braid_orders[i][j] = braid_order_from_cartan(
                    rs.pairing(rs.simple_roots[i].coords, rs.simple_roots[j]) *
                    rs.pairing(rs.simple_roots[j].coords, rs.simple_roots[i]));

    // fundamental coweights: (u_j, r_i) = delta_ij under the plain form.
    // Type A's GL ambient is rank-degenerate; the canonical choice there is
    // u_j = e_1 + ... + e_j.
    if (family == Family::A) {
        for (int j = 0; j < rank; ++j) {
            Vec u = zero_vec(dim);
            for (int i = 0; i <= j; ++i)
                u[i] = 1;
            rs.fundamental_coweights.push_back(u);
        }
    }
    else {
        for (int j = 0; j < rank; ++j) {
            Mat m(rank, zero_vec(dim));
            Vec b = zero_vec(rank);
            b[j] = 1;
            for (int i = 0; i < rank; ++i) {
                Vec gr = mat_apply(rs.gram, rs.simple_roots[i].coords);
                for (int c = 0; c < dim; ++c)
                    m[i][c] = gr[c];
            }
            Vec u;
            if (!solve_linear(m, b, u))
                throw InternalError("fundamental coweight solve failed");
            rs.fundamental_coweights.push_back(u);
        }
    }
    return rs;
}

RootSystem build_root_system(Family family, int rank)
{
    auto bad = [&]() {
        throw ConfigError("unsupported family/rank: " + family_name(family) + "/" +
                          std::to_string(rank));
    };
    std::vector<Vec> simples;
    int dim = 0;
    switch (family) {
    case Family::A: {
        if (rank < 1)
            bad();
        dim = rank + 1;
        for (int i = 0; i < rank; ++i) {
            Vec r = zero_vec(dim);
            r[i] = 1;
            r[i + 1] = -1;
            simples.push_back(r);
        }
        return build_from_simples(family, rank, dim, identity_mat(dim), simples);
    }
    case Family::B: {
        if (rank < 2)
            bad();
        dim = rank;
        for (int i = 0; i + 1 < rank; ++i) {
            Vec r = zero_vec(dim);
            r[i] = 1;
            r[i + 1] = -1;
            simples.push_back(r);
        }
        Vec last = zero_vec(dim);
        last[rank - 1] = 1;
        simples.push_back(last);
        return build_from_simples(family, rank, dim, identity_mat(dim), simples);
    }
    case Family::C: {
        if (rank < 2)
            bad();
        dim = rank;
        for (int i = 0; i + 1 < rank; ++i) {
            Vec r = zero_vec(dim);
            r[i] = 1;
            r[i + 1] = -1;
            simples.push_back(r);
        }
        Vec last = zero_vec(dim);
        last[rank - 1] = 2;
        simples.push_back(last);
        return build_from_simples(family, rank, dim, identity_mat(dim), simples);
    }
    case Family::D: {
        if (rank < 3)
            bad();
        dim = rank;
        for (int i = 0; i + 1 < rank; ++i) {
            Vec r = zero_vec(dim);
            r[i] = 1;
            r[i + 1] = -1;
            simples.push_back(r);
        }
        Vec last = zero_vec(dim);
        last[rank - 2] = 1;
        last[rank - 1] = 1;
        simples.push_back(last);
        return build_from_simples(family, rank, dim, identity_mat(dim), simples);
    }
    case Family::G2: {
        if (rank != 2)
            bad();
        dim = 2;
        // simple-root basis coordinates; the form is the Cartan Gram matrix
        Mat gram = {{Rational(2), Rational(-3)}, {Rational(-3), Rational(6)}};
        simples = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
        return build_from_simples(family, rank, dim, gram, simples);
    }
    case Family::A1xA1: {
        if (rank != 2)
            bad();
        dim = 2;
        simples = {{Rational(1), Rational(-1)}, {Rational(1), Rational(1)}};
        return build_from_simples(family, rank, dim, identity_mat(dim), simples);
    }
    }
    bad();
    return {};
}

TypeSpec parse_type(const std::string& s)
{
    std::string u;
    for (char c : s)
        u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (u == "A1XA1")
        return {Family::A1xA1, 2, true};
    if (u.empty())
        throw ConfigError("empty root-system type");
    Family f;
    switch (u[0]) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'G': f = Family::G2; break;
    default: throw ConfigError("unknown root-system family: " + s);
    }
    if (u.size() == 1)
        return {f, f == Family::G2 ? 2 : 0, f == Family::G2};
    try {
        int r = std::stoi(u.substr(1));
        if (f == Family::G2 && r != 2)
            throw ConfigError("unsupported family/rank: " + s);
        return {f, r, true};
    }
    catch (const std::invalid_argument&) {
        throw ConfigError("malformed root-system type: " + s);
    }
}

} // namespace hecke
