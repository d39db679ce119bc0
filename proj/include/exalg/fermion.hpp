#ifndef EXALG_FERMION_HPP
#define EXALG_FERMION_HPP

#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "exalg/indices.hpp"
#include "exalg/matrix.hpp"
#include "exalg/multivector.hpp"

namespace exalg {

namespace detail {

inline void check_mode_indices(const IndexTuple& r, int n, const char* what) {
    for (int i : r)
        if (i < 1 || i > n) throw std::domain_error(std::string(what) + ": index out of range");
}

}  // namespace detail

// Creation: a^+_r M = v_r ^ M; a^+_r v_s = v_{rs} with the concatenation sign,
// zero when r and s overlap.
template <class S>
Multivector<S> create(const IndexTuple& r, const Multivector<S>& m) {
    detail::check_mode_indices(r, m.dim(), "create");
    return wedge(Multivector<S>::basis_blade(m.dim(), mask_of(r)), m);
}

// Annihilation: a_r M = v_r lcontr M; a_r v_s = sign * v_{s\r} when r is
// inside s, zero otherwise.  Adjoint of create under the Hermitian inner
// product.
template <class S>
Multivector<S> annihilate(const IndexTuple& r, const Multivector<S>& m) {
    detail::check_mode_indices(r, m.dim(), "annihilate");
    return lcontr(Multivector<S>::basis_blade(m.dim(), mask_of(r)), m);
}

// Whether a term's operators are written creation-first (a^+_i a_j) or
// annihilation-first (a_i a^+_j).  Mixed sums are not re-ordered: rewriting
// one order into the other uses the commutation relations these operators are
// meant to exercise.
enum class OperatorOrder { CreateAnnihilate, AnnihilateCreate };

// A sum of products of one creation and one annihilation block, all terms in
// the same order.  CreateAnnihilate term: coeff * a^+_create a_annihilate;
// AnnihilateCreate term: coeff * a_annihilate a^+_create.
template <class S = Rational>
struct NormalOrderedOperator {
    struct Term {
        S coeff;
        IndexTuple create, annihilate;
        friend bool operator==(const Term&, const Term&) = default;
    };

    int n = 0;
    OperatorOrder order = OperatorOrder::CreateAnnihilate;
    std::vector<Term> terms;

    static NormalOrderedOperator identity(int n,
                                          OperatorOrder ord = OperatorOrder::CreateAnnihilate) {
        return {n, ord, {{S(1), {}, {}}}};
    }
    static NormalOrderedOperator zero(int n,
                                      OperatorOrder ord = OperatorOrder::CreateAnnihilate) {
        return {n, ord, {}};
    }

    void add_term(S coeff, IndexTuple c, IndexTuple a) {
        terms.push_back({std::move(coeff), std::move(c), std::move(a)});
    }

    // Sort terms by index blocks, combine equal blocks, drop zeros.
    void canonicalize() {
        std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
            return std::tie(x.create, x.annihilate) < std::tie(y.create, y.annihilate);
        });
        std::vector<Term> out;
        for (auto& t : terms) {
            if (!out.empty() && out.back().create == t.create &&
                out.back().annihilate == t.annihilate) {
                out.back().coeff += t.coeff;
                if (is_zero(out.back().coeff)) out.pop_back();
            } else if (!is_zero(t.coeff)) {
                out.push_back(std::move(t));
            }
        }
        terms = std::move(out);
    }

    friend bool operator==(const NormalOrderedOperator& x, const NormalOrderedOperator& y) {
        return x.n == y.n && x.order == y.order && x.terms == y.terms;
    }

    Multivector<S> apply(const Multivector<S>& m) const {
        if (m.dim() != n) throw std::domain_error("NormalOrderedOperator: dimension mismatch");
        Multivector<S> out(n);
        for (const auto& t : terms) {
            auto r = order == OperatorOrder::CreateAnnihilate
                         ? create(t.create, annihilate(t.annihilate, m))
                         : annihilate(t.annihilate, create(t.create, m));
            out = out + t.coeff * r;
        }
        return out;
    }

    // Parity of every term (|create| + |annihilate| mod 2) if uniform;
    // -1 for the zero operator (any parity), throws if mixed.
    int parity() const {
        int p = -1;
        for (const auto& t : terms) {
            int tp = (int)((t.create.size() + t.annihilate.size()) % 2);
            if (p == -1) p = tp;
            if (tp != p)
                throw std::domain_error("supercommutator requires homogeneous parity");
        }
        return p;
    }
};

// Vacancy projector m_i = a_i a^+_i: keeps v_j exactly when i and j are
// disjoint.
template <class S = Rational>
NormalOrderedOperator<S> vacancy(const IndexTuple& i, int n) {
    return {n, OperatorOrder::AnnihilateCreate, {{S(1), i, i}}};
}

// Occupancy projector n_i = a^+_i a_i: keeps v_j exactly when i is inside j.
template <class S = Rational>
NormalOrderedOperator<S> occupancy(const IndexTuple& i, int n) {
    return {n, OperatorOrder::CreateAnnihilate, {{S(1), i, i}}};
}

// Apply the supercommutator [S,T] = ST - (-1)^{parity S * parity T} TS to M.
template <class S>
Multivector<S> scom_apply(const NormalOrderedOperator<S>& s, const NormalOrderedOperator<S>& t,
                          const Multivector<S>& m) {
    int ps = s.parity(), pt = t.parity();
    auto st = s.apply(t.apply(m));
    auto ts = t.apply(s.apply(m));
    if (ps > 0 && pt > 0) return st + ts;
    return st - ts;
}

// Symbolic expansion of a supercommutator of index-blade operators:
//   CreateAnnihilate: [a^+_i, a_j] as a sum of a^+ a products over nonempty
//     l inside i n j with sign (-1)^{1 + |l| + <i^j | l>};
//   AnnihilateCreate: [a_i, a^+_j] as a sum of a a^+ products with sign
//     (-1)^{1 + |l| + <l | i^j>}.
// Empty when i and j are disjoint.
template <class S = Rational>
NormalOrderedOperator<S> scom_expand(const IndexTuple& i, const IndexTuple& j, int n,
                                     OperatorOrder order) {
    detail::check_mode_indices(i, n, "scom_expand");
    detail::check_mode_indices(j, n, "scom_expand");
    NormalOrderedOperator<S> out{n, order, {}};
    auto common = ordered_intersection(i, j);
    auto sym = ordered_symmetric_difference(i, j);
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << common.size()); ++sub) {
        IndexTuple l;
        for (std::size_t t = 0; t < common.size(); ++t)
            if (sub >> t & 1) l.push_back(common[t]);
        int cross = order == OperatorOrder::CreateAnnihilate ? pairs_gt(sym, l)
                                                             : pairs_gt(l, sym);
        S coeff = S(parity_sign(1 + (int)l.size() + cross));
        if (order == OperatorOrder::CreateAnnihilate)
            out.add_term(std::move(coeff), ordered_difference(i, l), ordered_difference(j, l));
        else
            out.add_term(std::move(coeff), ordered_difference(j, l), ordered_difference(i, l));
    }
    out.canonicalize();
    return out;
}

// Diagonal supercommutator expansions over proper subsets of i:
//   CreateAnnihilate ("dagger-first" terms): [a_i, a^+_i] = sum_{j strictly
//     inside i} (-1)^{|j|} a^+_j a_j;
//   AnnihilateCreate: [a^+_i, a_i] = sum over the same j of (-1)^{|j|} a_j a^+_j.
// Empty i gives the zero operator ([Id, Id] = 0).
template <class S = Rational>
NormalOrderedOperator<S> scom_expand_diagonal(const IndexTuple& i, int n, OperatorOrder order) {
    detail::check_mode_indices(i, n, "scom_expand_diagonal");
    NormalOrderedOperator<S> out{n, order, {}};
    if (i.empty()) return out;
    for (std::uint64_t sub = 0; sub + 1 < (std::uint64_t{1} << i.size()); ++sub) {
        IndexTuple j;
        for (std::size_t t = 0; t < i.size(); ++t)
            if (sub >> t & 1) j.push_back(i[t]);
        out.add_term(S(parity_sign((int)j.size())), j, j);
    }
    out.canonicalize();
    return out;
}

// The seven disjoint pieces of three index sets; the unions a+c+d+y, x+d+c+b,
// e+y+c+b rebuild i, j, k.
struct VennPartition {
    IndexTuple a, b, c, d, e, x, y;
    friend bool operator==(const VennPartition&, const VennPartition&) = default;
};

inline VennPartition venn_partition(const IndexTuple& i, const IndexTuple& j,
                                    const IndexTuple& k) {
    auto jk = ordered_union(j, k);
    auto ik = ordered_union(i, k);
    auto ij = ordered_union(i, j);
    VennPartition v;
    v.a = ordered_difference(i, jk);
    v.b = ordered_difference(ordered_intersection(j, k), i);
    v.c = ordered_intersection(ordered_intersection(i, j), k);
    v.d = ordered_difference(ordered_intersection(i, j), k);
    v.e = ordered_difference(k, ij);
    v.x = ordered_difference(j, ik);
    v.y = ordered_difference(ordered_intersection(i, k), j);
    return v;
}

// Closed-form action [a^+_i, a_j] v_k: coefficient
// delta_{x,y empty} (delta_{d empty} - delta_{c empty}) (-1)^{|d| + <ab|de>}
// and target blade <a c e>.  Coefficient 0 (with blade mask 0) exactly when
// x or y is nonempty, or c and d are both empty or both nonempty.
template <class S = Rational>
std::pair<S, BladeMask> scom_direct(const IndexTuple& i, const IndexTuple& j,
                                    const IndexTuple& k, int n) {
    detail::check_mode_indices(i, n, "scom_direct");
    detail::check_mode_indices(j, n, "scom_direct");
    detail::check_mode_indices(k, n, "scom_direct");
    auto v = venn_partition(i, j, k);
    if (!v.x.empty() || !v.y.empty() || v.c.empty() == v.d.empty())
        return {S(0), BladeMask{0}};
    auto ab = ordered_union(v.a, v.b);
    auto de = ordered_union(v.d, v.e);
    int sign = parity_sign((int)v.d.size() + pairs_gt(ab, de));
    if (!v.d.empty()) sign = -sign;  // the delta difference is -1 when c is empty
    auto target = ordered_union(ordered_union(v.a, v.c), v.e);
    return {S(sign), mask_of(target)};
}

// Dense matrix of an operator on the 2^n basis blades, column indexed by the
// source blade mask.  Brute-force oracle; the size is capped.
template <class S>
Matrix<S> operator_matrix(const NormalOrderedOperator<S>& op) {
    if (op.n > 12) throw std::length_error("operator_matrix: dimension too large");
    std::size_t dim = std::size_t{1} << op.n;
    Matrix<S> m(dim, dim);
    for (BladeMask col = 0; col < dim; ++col) {
        auto image = op.apply(Multivector<S>::basis_blade(op.n, col));
        for (const auto& [mask, c] : image.terms()) m.at(mask, col) = c;
    }
    return m;
}

}  // namespace exalg

#endif
