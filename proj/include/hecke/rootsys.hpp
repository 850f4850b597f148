#ifndef HECKE_ROOTSYS_HPP
#define HECKE_ROOTSYS_HPP

#include "hecke/errors.hpp"
#include "hecke/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

enum class Family { A, B, C, D, G2, A1xA1 };

enum class LengthClass { Short, Long };

enum class LatticeTag { Coroot, Coweight, Ambient };

std::string family_name(Family f);

struct Root {
    Vec coords;
    LengthClass length_class = LengthClass::Long;
};

struct Weight {
    Vec coords;
    LatticeTag tag = LatticeTag::Ambient;
};

/// Finite Weyl group element: a word in simple reflections together with
/// the exact matrix it realizes on ambient coordinates.  word[0] acts first,
/// i.e. matrix = S_{word[m-1]} * ... * S_{word[0]}.
struct WeylElement {
    std::vector<int> word;
    Mat matrix;
};

/// Finite root system with exact rational data.  Coordinates live in a
/// `dim`-dimensional space carrying the symmetric bilinear form `gram`
/// (identity for the classical families, the Cartan-derived form for G2).
/// Immutable after construction; safe to share across threads.
class RootSystem {
public:
    Family family;
    int rank = 0;
    int dim = 0;
    Mat gram;
    std::vector<Root> simple_roots;
    std::vector<Root> positive_roots; // sorted by height, then lex coords
    Root highest_root;
    std::vector<std::vector<int>> braid_orders;   // m_{rs}, rank x rank
    std::vector<int> highest_coeffs;              // highest root in the simple basis
    std::vector<Vec> fundamental_coweights;       // (u_j, r_i) = delta_ij

    // (x, y) under the ambient bilinear form
    Rational form(const Vec& x, const Vec& y) const;
    // (x, r^V) = 2 (x, r) / (r, r)
    Rational pairing(const Vec& x, const Root& r) const;
    Vec coroot(const Root& r) const;

    Vec reflect_vec(const Root& r, const Vec& x) const;
    bool is_root(const Vec& v) const;
    std::optional<Root> find_root(const Vec& v) const;
    Root root_at(const Vec& v) const; // throws DomainError when absent

    bool is_dominant(const Vec& x) const;
    bool in_coweight_lattice(const Vec& x) const;
    // Membership of v in Q^V (type A: Q^V + the diagonal, i.e. mod center).
    bool in_coroot_lattice(const Vec& v) const;

    // Hecke parameter slot (0 = q, 1 = q_long) used for roots of this class.
    int param_index(LengthClass c) const { return params_[static_cast<int>(c)]; }
    void set_unequal_parameters(bool on);

    WeylElement identity_element() const;
    WeylElement simple_element(int i) const;
    WeylElement reflection_element(const Root& r) const; // word via chamber walk
    WeylElement compose(const WeylElement& a, const WeylElement& b) const; // a after b
    WeylElement from_word(const std::vector<int>& word) const;
    Vec apply(const WeylElement& w, const Vec& x) const;

    // l(w) as the inversion count |{r>0 : w(r)<0}|
    int weyl_length(const WeylElement& w) const;
    // reduced word by the chamber-walk induction; length == weyl_length
    std::vector<int> reduced_word_of(const Mat& matrix) const;

    std::vector<Weight> minuscule_weights() const;
    // minuscule class representative gamma with xi + gamma in Q^V (mod center)
    Vec minuscule_rep_of_negative(const Vec& xi) const;

    std::string describe() const;

    std::size_t weyl_order_bound() const; // |W|, used to cap enumerations

private:
    std::array<int, 2> params_ = {0, 0};
    std::map<Vec, int> positive_index_;
    friend RootSystem build_from_simples(Family, int, int, Mat, std::vector<Vec>);
};

RootSystem build_root_system(Family family, int rank);

// Internal/general constructor (used for A1xA1 and tests): closure-enumerates
// positive roots from the given simple roots under the given form.
RootSystem build_from_simples(Family family, int rank, int dim, Mat gram,
                              std::vector<Vec> simples);

// Accepts "A", "b" ... with separate rank, or compact "A2", "B3", "G2", "A1xA1".
struct TypeSpec {
    Family family;
    int rank = 0;
    bool rank_given = false;
};
TypeSpec parse_type(const std::string& s);

} // namespace hecke

#endif
