#ifndef EXALG_DECOMPOSE_HPP
#define EXALG_DECOMPOSE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "exalg/multivector.hpp"
#include "exalg/spaces.hpp"
#include "exalg/subspace.hpp"

namespace exalg {

// A factorization M = B ^ N with a nonzero blade B.
template <class S = Rational>
struct Factorization {
    Multivector<S> B, N;
    bool tight = false, orthogonal = false, maximal = false;
};

// A carving M = N lcontr B with a nonzero blade B.
template <class S = Rational>
struct Carving {
    Multivector<S> N, B;
    bool tight = false, internal = false, minimal = false;
};

namespace detail {

// Wedge of the canonical (RREF) basis of a subspace; 1 for the zero subspace.
template <class S>
Multivector<S> blade_of_subspace(const Subspace<S>& v) {
    auto b = Multivector<S>::scalar(v.ambient(), S(1));
    for (const auto& w : v.basis_vectors()) b = wedge(b, w);
    return b;
}

// The span [B] of a nonzero blade; throws if B is zero or not simple.
template <class S>
Subspace<S> blade_span(const Multivector<S>& b) {
    if (b.is_zero()) throw std::domain_error("blade_span: zero blade");
    auto is = inner_space(b);
    if (is != outer_space(b)) throw std::domain_error("blade_span: not a blade");
    return is;
}

// All subset wedges of the canonical basis of V, indexed by subset bitmask
// over the basis vectors in pivot order.  Basis of the algebra over V.
template <class S>
std::vector<Multivector<S>> subset_wedge_basis(const Subspace<S>& v) {
    auto vecs = v.basis_vectors();
    std::vector<Multivector<S>> out;
    out.reserve(std::size_t{1} << vecs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vecs.size()); ++mask) {
        auto w = Multivector<S>::scalar(v.ambient(), S(1));
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (mask >> i & 1) w = wedge(w, vecs[i]);
        out.push_back(std::move(w));
    }
    return out;
}

// Coordinates c with sum_j c_j images[j] = target, if any.
template <class S>
std::optional<std::vector<S>> solve_in_span(const std::vector<Multivector<S>>& images,
                                            const Multivector<S>& target) {
    std::vector<BladeMask> support;
    for (const auto& img : images)
        for (const auto& [m, c] : img.terms()) support.push_back(m);
    for (const auto& [m, c] : target.terms()) support.push_back(m);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::map<BladeMask, std::size_t> row_of;
    for (std::size_t i = 0; i < support.size(); ++i) row_of[support[i]] = i;

    Matrix<S> a(support.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [m, c] : images[j].terms()) a.at(row_of[m], j) = c;
    std::vector<S> rhs(support.size(), S(0));
    for (const auto& [m, c] : target.terms()) rhs[row_of[m]] = c;
    return a.solve(rhs);
}

// V must meet W trivially: this is exactly what makes the cofactor in the
// algebra over V unique.  Existence is checked by the linear solve, so V may
// be smaller than a full complement when M needs less room.
template <class S>
void check_transversal(const Subspace<S>& v, const Subspace<S>& w, const char* what) {
    if (v.ambient() != w.ambient()) throw std::domain_error("complement: ambient mismatch");
    if (intersect(v, w).dim() != 0) throw std::domain_error(what);
}

}  // namespace detail

template <class S>
Factorization<S> classify_factorization(const Multivector<S>& m, const Multivector<S>& b,
                                        const Multivector<S>& n) {
    auto span = detail::blade_span(b);
    if (wedge(b, n) != m) throw std::domain_error("not a factorization of M");
    Factorization<S> f{b, n};
    auto on = outer_space(n);
    f.tight = intersect(on, span).dim() == 0;
    f.orthogonal = span.orth_complement().contains(on);
    f.maximal = span == inner_space(m);
    return f;
}

template <class S>
Carving<S> classify_carving(const Multivector<S>& m, const Multivector<S>& b,
                            const Multivector<S>& n) {
    auto span = detail::blade_span(b);
    if (lcontr(n, b) != m) throw std::domain_error("not a carving of M");
    Carving<S> c{n, b};
    auto on = outer_space(n);
    c.tight = intersect(on, span.orth_complement()).dim() == 0;
    c.internal = span.contains(on);
    c.minimal = span == outer_space(m);
    return c;
}

// Maximal orthogonal factorization: B spans the inner space of M, and
// N = (B lcontr M) / |B|^2 is the orthogonal cofactor.
template <class S>
Factorization<S> factor_maximal_orthogonal(const Multivector<S>& m) {
    if (m.is_zero()) throw std::domain_error("factor_maximal_orthogonal: M = 0");
    auto b = detail::blade_of_subspace(inner_space(m));
    auto n = lcontr(b, m) / norm_sq(b);
    return classify_factorization(m, b, n);
}

// The unique N in the algebra over V with M = B ^ N, for an inner blade B of M
// and a complement V of [B].
template <class S>
Multivector<S> factor_in_complement(const Multivector<S>& m, const Multivector<S>& b,
                                    const Subspace<S>& v) {
    auto span = detail::blade_span(b);
    if (!inner_space(m).contains(span)) throw std::domain_error("not an inner blade");
    detail::check_transversal(v, span, "factor_in_complement: V meets [B]");
    auto basis = detail::subset_wedge_basis(v);
    std::vector<Multivector<S>> images;
    for (const auto& e : basis) images.push_back(wedge(b, e));
    auto coeffs = detail::solve_in_span(images, m);
    if (!coeffs) throw std::domain_error("factor_in_complement: no solution");
    Multivector<S> n(m.dim());
    for (std::size_t j = 0; j < basis.size(); ++j) n = n + (*coeffs)[j] * basis[j];
    return n;
}

// Minimal internal carving: B spans the outer space of M, and
// N = (B rcontr M) / |B|^2.
template <class S>
Carving<S> carve_minimal_internal(const Multivector<S>& m) {
    if (m.is_zero()) throw std::domain_error("carve_minimal_internal: M = 0");
    auto b = detail::blade_of_subspace(outer_space(m));
    auto n = rcontr(b, m) / norm_sq(b);
    return classify_carving(m, b, n);
}

// The unique N in the algebra over V with M = N lcontr B, for an outer blade B
// of M and a complement V of [B]^perp.
template <class S>
Multivector<S> carve_in_complement(const Multivector<S>& m, const Multivector<S>& b,
                                   const Subspace<S>& v) {
    auto span = detail::blade_span(b);
    if (!span.contains(outer_space(m))) throw std::domain_error("not an outer blade");
    detail::check_transversal(v, span.orth_complement(),
                              "carve_in_complement: V meets [B]^perp");
    auto basis = detail::subset_wedge_basis(v);
    std::vector<Multivector<S>> images;
    for (const auto& e : basis) images.push_back(lcontr(e, b));
    // N -> N lcontr B is conjugate-linear, so solve for the conjugated
    // coordinates and conjugate them back.
    auto coeffs = detail::solve_in_span(images, m);
    if (!coeffs) throw std::domain_error("carve_in_complement: no solution");
    Multivector<S> n(m.dim());
    for (std::size_t j = 0; j < basis.size(); ++j) n = n + conj((*coeffs)[j]) * basis[j];
    return n;
}

// Balanced blade decomposition: factor M = B ^ N maximally and orthogonally,
// expand N over subset wedges of the canonical basis of its outer space, wedge
// each term back onto B, and merge parallel blades.
template <class S>
std::vector<Multivector<S>> balanced_blade_decomposition(const Multivector<S>& m) {
    if (m.is_zero()) throw std::domain_error("balanced_blade_decomposition: M = 0");
    auto f = factor_maximal_orthogonal(m);
    auto basis = detail::subset_wedge_basis(outer_space(f.N));
    auto coeffs = detail::solve_in_span(basis, f.N);
    if (!coeffs) throw std::domain_error("balanced_blade_decomposition: expansion failed");
    std::vector<Multivector<S>> blades;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (is_zero((*coeffs)[j])) continue;
        auto term = wedge(f.B, (*coeffs)[j] * basis[j]);
        if (term.is_zero()) continue;
        // merge with an existing parallel blade, if any
        bool merged = false;
        for (auto& blade : blades) {
            S ratio = inner(blade, term) / norm_sq(blade);
            if (!is_zero(ratio) && ratio * blade == term) {
                blade = blade + term;
                merged = true;
                break;
            }
        }
        if (!merged) blades.push_back(std::move(term));
    }
    return blades;
}

// Largest k with the k-fold wedge power of H nonzero; for a bivector this is
// the number of blades in a minimal blade decomposition.
template <class S>
int bivector_rank(const Multivector<S>& h) {
    if (h.is_zero()) throw std::domain_error("bivector_rank: zero input");
    for (const auto& [mask, c] : h.terms())
        if (mask_grade(mask) != 2) throw std::domain_error("bivector_rank: not a bivector");
    int k = 0;
    auto power = Multivector<S>::scalar(h.dim(), S(1));
    while (true) {
        power = wedge(power, h);
        if (power.is_zero()) return k;
        ++k;
    }
}

}  // namespace exalg

#endif
