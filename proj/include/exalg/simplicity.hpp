#ifndef EXALG_SIMPLICITY_HPP
#define EXALG_SIMPLICITY_HPP

#include <compare>
#include <map>
#include <numeric>
#include <tuple>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "exalg/multivector.hpp"
#include "exalg/spaces.hpp"

namespace exalg {

// M is simple (a blade) iff its inner and outer spaces coincide.
template <class S>
bool is_simple(const Multivector<S>& m) {
    if (m.is_zero()) throw std::domain_error("is_simple: undefined for 0");
    return inner_space(m) == outer_space(m);
}

namespace detail {

template <class S>
int homogeneous_grade(const Multivector<S>& h, const char* what) {
    if (h.is_zero()) throw std::domain_error(std::string(what) + ": undefined for 0");
    int p = -1;
    for (const auto& [mask, c] : h.terms()) {
        int g = mask_grade(mask);
        if (p == -1) p = g;
        if (g != p) throw std::domain_error(std::string(what) + ": input not homogeneous");
    }
    return p;
}

}  // namespace detail

// First-order blade criteria for a homogeneous H of grade p.  All three are
// equivalent; `criterion` selects which one to evaluate:
//   1: (F lcontr H) ^ H = 0 for all F of grade p-1;
//   2: (H lcontr G) lcontr H = 0 for all G of grade p+1;
//   3: <F lcontr H, H lcontr G> = 0 for all such F, G.
template <class S>
bool cartan_first_order(const Multivector<S>& h, int criterion) {
    int p = detail::homogeneous_grade(h, "cartan_first_order");
    int n = h.dim();
    if (criterion < 1 || criterion > 3) throw std::domain_error("cartan_first_order: criterion must be 1..3");
    if (p == 0 || (p == n && criterion == 2)) return true;
    auto fs = p >= 1 ? increasing_tuples(n, p - 1) : std::vector<IndexTuple>{};
    auto gs = p + 1 <= n ? increasing_tuples(n, p + 1) : std::vector<IndexTuple>{};
    if (criterion == 1) {
        for (const auto& f : fs)
            if (!wedge(lcontr(Multivector<S>::basis_blade(n, mask_of(f)), h), h).is_zero())
                return false;
        return true;
    }
    if (criterion == 2) {
        for (const auto& g : gs)
            if (!lcontr(lcontr(h, Multivector<S>::basis_blade(n, mask_of(g))), h).is_zero())
                return false;
        return true;
    }
    for (const auto& f : fs) {
        auto fh = lcontr(Multivector<S>::basis_blade(n, mask_of(f)), h);
        for (const auto& g : gs)
            if (!is_zero(inner(fh, lcontr(h, Multivector<S>::basis_blade(n, mask_of(g))))))
                return false;
    }
    return true;
}

// Second-order blade criterion: (F lcontr H) ^ H = 0 for all F of grade p-2
// (equivalently with G of grade p+2).  Grade 0 and 1 inputs are simple.
template <class S>
bool cartan_second_order(const Multivector<S>& h) {
    int p = detail::homogeneous_grade(h, "cartan_second_order");
    int n = h.dim();
    if (p < 2) return true;
    bool ok = true;
    for (const auto& f : increasing_tuples(n, p - 2)) {
        if (!wedge(lcontr(Multivector<S>::basis_blade(n, mask_of(f)), h), h).is_zero()) {
            ok = false;
            break;
        }
    }
    if (p + 2 <= n) {
        bool ok2 = true;
        for (const auto& g : increasing_tuples(n, p + 2)) {
            if (!lcontr(lcontr(h, Multivector<S>::basis_blade(n, mask_of(g))), h).is_zero()) {
                ok2 = false;
                break;
            }
        }
        if (ok2 != ok) throw std::logic_error("cartan_second_order: criteria disagree");
    }
    return ok;
}

// Seeded one-sided sampler: H simple implies B lcontr H simple for every
// r-blade B, so a failed sample proves non-simplicity; an all-pass result is
// evidence only.
template <class S>
bool eastwood_sample(const Multivector<S>& h, int r, int trials, unsigned seed) {
    int p = detail::homogeneous_grade(h, "eastwood_sample");
    if (p < 3 || r < 1 || r > p - 2) throw std::domain_error("eastwood_sample: need 1 <= r <= p-2");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    int n = h.dim();
    for (int t = 0; t < trials; ++t) {
        auto b = Multivector<S>::scalar(n, S(1));
        for (int f = 0; f < r; ++f) {
            Multivector<S> v(n);
            for (int i = 1; i <= n; ++i) v.add_term(BladeMask{1} << (i - 1), S(d(rng)));
            b = wedge(b, v);
        }
        if (b.is_zero()) continue;
        auto bh = lcontr(b, h);
        if (!bh.is_zero() && !is_simple(bh)) return false;
    }
    return true;
}

// One quadratic relation on the grade-p coefficients lambda_i: the sum of
// coeff * lambda_a * lambda_b over its monomials.  Canonical form: a <= b,
// equal monomials combined, monomials sorted, leading coefficient positive.
struct PluckerMonomial {
    long long coeff;
    IndexTuple a, b;
    friend auto operator<=>(const PluckerMonomial&, const PluckerMonomial&) = default;
};

struct PluckerRelation {
    std::vector<PluckerMonomial> monomials;
    friend auto operator<=>(const PluckerRelation&, const PluckerRelation&) = default;

    void add(long long coeff, IndexTuple a, IndexTuple b) {
        if (b < a) std::swap(a, b);
        monomials.push_back({coeff, std::move(a), std::move(b)});
    }

    void canonicalize() {
        std::sort(monomials.begin(), monomials.end(),
                  [](const PluckerMonomial& x, const PluckerMonomial& y) {
                      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
                  });
        std::vector<PluckerMonomial> out;
        for (auto& m : monomials) {
            if (!out.empty() && out.back().a == m.a && out.back().b == m.b) {
                out.back().coeff += m.coeff;
                if (out.back().coeff == 0) out.pop_back();
            } else if (m.coeff != 0) {
                out.push_back(std::move(m));
            }
        }
        if (!out.empty() && out.front().coeff < 0)
            for (auto& m : out) m.coeff = -m.coeff;
        monomials = std::move(out);
    }

    bool trivial() const { return monomials.empty(); }

    // The same relation with coefficients divided by their gcd, for
    // comparisons that should ignore uniform doubling.
    PluckerRelation primitive() const {
        long long g = 0;
        for (const auto& m : monomials) g = std::gcd(g, m.coeff < 0 ? -m.coeff : m.coeff);
        PluckerRelation r = *this;
        if (g > 1)
            for (auto& m : r.monomials) m.coeff /= g;
        return r;
    }
};

enum class PluckerForm { Classical, ClassicalSigned, Reduced, ReducedExpanded };

// Quadratic relation systems on grade-p coefficients in dimension n, vanishing
// simultaneously exactly on the simple multivectors:
//   Classical:        over (j,k) with |j| = p-1, |k| = p+1,
//                     sum over single k0 in k\j of
//                     (-1)^<j triangle k | k0> lambda_{j+k0} lambda_{k-k0};
//   ClassicalSigned:  same system written with permutation-sign coefficients
//                     sum_i (-1)^i lambda_{j k_i} lambda_{k \ k_i};
//   Reduced:          over (j,k) with |j| = p-2, |k| = p+2, summing over index
//                     pairs k2 in k\j (terms double up when j is inside k);
//   ReducedExpanded:  the same system written with permutation signs
//                     sum_{i<l} (-1)^{i+l} lambda_{j k_i k_l} lambda_{k \ k_i k_l}.
inline std::vector<PluckerRelation> plucker_generate(int p, int n, PluckerForm form) {
    if (p < 1 || p > n || n > kMaxDim) throw std::domain_error("plucker_generate: need 1 <= p <= n");
    std::vector<PluckerRelation> out;
    bool reduced = form == PluckerForm::Reduced || form == PluckerForm::ReducedExpanded;
    int jsize = reduced ? p - 2 : p - 1;
    int ksize = reduced ? p + 2 : p + 1;
    if (jsize < 0 || ksize > n) return out;
    for (const auto& j : increasing_tuples(n, jsize)) {
        for (const auto& k : increasing_tuples(n, ksize)) {
            PluckerRelation rel;
            switch (form) {
                case PluckerForm::Classical: {
                    auto sym = ordered_symmetric_difference(j, k);
                    for (int k0 : ordered_difference(k, j)) {
                        IndexTuple single{k0};
                        rel.add(parity_sign(pairs_gt(sym, single)), ordered_union(j, single),
                                ordered_difference(k, single));
                    }
                    break;
                }
                case PluckerForm::ClassicalSigned: {
                    for (int i = 0; i < (int)k.size(); ++i) {
                        int ki = k[i];
                        if (std::binary_search(j.begin(), j.end(), ki)) continue;
                        IndexTuple concat = j;
                        concat.push_back(ki);
                        auto [sorted, eps] = sort_with_sign(concat);
                        IndexTuple single{ki};
                        rel.add((long long)parity_sign(i) * eps, sorted,
                                ordered_difference(k, single));
                    }
                    break;
                }
                case PluckerForm::Reduced: {
                    auto sym = ordered_symmetric_difference(j, k);
                    auto rest = ordered_difference(k, j);
                    for (std::size_t x = 0; x < rest.size(); ++x)
                        for (std::size_t y = x + 1; y < rest.size(); ++y) {
                            IndexTuple k2{rest[x], rest[y]};
                            rel.add(parity_sign(pairs_gt(sym, k2)), ordered_union(j, k2),
                                    ordered_difference(k, k2));
                        }
                    break;
                }
                case PluckerForm::ReducedExpanded: {
                    for (int i = 0; i < (int)k.size(); ++i)
                        for (int l = i + 1; l < (int)k.size(); ++l) {
                            IndexTuple pair{k[i], k[l]};
                            if (!ordered_intersection(j, pair).empty()) continue;
                            IndexTuple concat = j;
                            concat.push_back(k[i]);
                            concat.push_back(k[l]);
                            auto [sorted, eps] = sort_with_sign(concat);
                            rel.add((long long)parity_sign(i + l) * eps, sorted,
                                    ordered_difference(k, pair));
                        }
                    break;
                }
            }
            rel.canonicalize();
            if (!rel.trivial()) out.push_back(std::move(rel));
        }
    }
    return out;
}

// Remove duplicate relations and sort the survivors deterministically.
// Besides exact canonical-form equality, relations that agree monomial by
// monomial up to the orientation of each product (same unordered factor pair,
// same coefficient magnitude) are counted once: reordering the two grade-p
// factors of a monomial only changes bookkeeping signs, and index choices that
// swap one generator index between j and k reproduce the same relation in a
// different monomial orientation.  The representative kept is the smallest
// canonical form in each class, itself a generated relation.
inline std::vector<PluckerRelation> plucker_dedupe(std::vector<PluckerRelation> rels) {
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    using Signature = std::vector<std::tuple<long long, IndexTuple, IndexTuple>>;
    std::map<Signature, PluckerRelation> classes;
    for (auto& rel : rels) {
        Signature sig;
        for (const auto& m : rel.monomials)
            sig.emplace_back(m.coeff < 0 ? -m.coeff : m.coeff, m.a, m.b);
        auto [it, inserted] = classes.emplace(std::move(sig), rel);
        if (!inserted && rel < it->second) it->second = rel;
    }
    std::vector<PluckerRelation> out;
    out.reserve(classes.size());
    for (auto& [sig, rel] : classes) out.push_back(std::move(rel));
    std::sort(out.begin(), out.end());
    return out;
}

// Substitute the coefficients of a homogeneous grade-p H into each relation.
// The relations constrain the conjugated coefficients, so each lambda is
// conjugated on substitution (a no-op over the rationals).
template <class S>
std::vector<S> plucker_evaluate(const std::vector<PluckerRelation>& rels,
                                const Multivector<S>& h) {
    int p = detail::homogeneous_grade(h, "plucker_evaluate");
    (void)p;
    std::vector<S> out;
    out.reserve(rels.size());
    for (const auto& rel : rels) {
        S value(0);
        for (const auto& m : rel.monomials) {
            if ((int)m.a.size() != p || (int)m.b.size() != p)
                throw std::domain_error("plucker_evaluate: grade mismatch");
            auto ma = mask_of(m.a), mb = mask_of(m.b);
            if ((ma >> h.dim()) || (mb >> h.dim()))
                throw std::domain_error("plucker_evaluate: dimension mismatch");
            value += S(m.coeff) * conj(h.coeff(ma)) * conj(h.coeff(mb));
        }
        out.push_back(std::move(value));
    }
    return out;
}

template <class S>
bool plucker_all_zero(const std::vector<PluckerRelation>& rels, const Multivector<S>& h) {
    for (const auto& v : plucker_evaluate(rels, h))
        if (!is_zero(v)) return false;
    return true;
}

}  // namespace exalg

#endif
