#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exalg/decompose.hpp"
#include "exalg/spaces.hpp"
#include "test_util.hpp"

using namespace exalg;

namespace {

Multivector<> mk(int n, std::initializer_list<std::pair<BladeMask, int>> terms) {
    Multivector<> m(n);
    for (const auto& [mask, c] : terms) m.add_term(mask, Rational(c));
    return m;
}
BladeMask bm(std::initializer_list<int> idx) { return mask_of(IndexTuple(idx)); }

// M = v134 - v145 + v345 + v1235 in dimension 5.
Multivector<> sample_m5() {
    return mk(5, {{bm({1, 3, 4}), 1}, {bm({1, 4, 5}), -1}, {bm({3, 4, 5}), 1}, {bm({1, 2, 3, 5}), 1}});
}

// M = v123 + 2 v145 - v146 in dimension 6.
Multivector<> sample_m6() {
    return mk(6, {{bm({1, 2, 3}), 1}, {bm({1, 4, 5}), 2}, {bm({1, 4, 6}), -1}});
}

bool proportional(const Multivector<>& a, const Multivector<>& b) {
    if (a.is_zero() || b.is_zero()) return a == b;
    Rational ratio = inner(b, a) / norm_sq(b);
    return a == ratio * b;
}

}  // namespace

TEST_CASE("maximal orthogonal factorization of the running example") {
    auto m = sample_m5();
    auto f = factor_maximal_orthogonal(m);
    // B spans the inner space span{v1-v3, v3+v5}
    auto expected_span = Subspace<Rational>::span(5, {{1, 0, -1, 0, 0}, {0, 0, 1, 0, 1}});
    CHECK(inner_space(f.B) == expected_span);
    auto b_expected = wedge(mk(5, {{bm({1}), 1}, {bm({3}), -1}}), mk(5, {{bm({3}), 1}, {bm({5}), 1}}));
    CHECK(f.B == b_expected);
    // N = (3 v4 - v25 + v23 - v12) / 3
    auto third = Rational(1) / 3;
    CHECK(f.N == third * mk(5, {{bm({4}), 3}, {bm({2, 5}), -1}, {bm({2, 3}), 1}, {bm({1, 2}), -1}}));
    CHECK(wedge(f.B, f.N) == m);
    CHECK(f.tight);
    CHECK(f.orthogonal);
    CHECK(f.maximal);
    CHECK(inner_space(f.B).orth_complement().contains(outer_space(f.N)));
}

TEST_CASE("factorization of degenerate inputs") {
    auto blade = mk(4, {{bm({1, 2, 3}), 2}});
    auto f = factor_maximal_orthogonal(blade);
    CHECK(inner_space(f.B) == Subspace<Rational>::span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
    CHECK(f.N.terms().size() == 1);
    CHECK(f.N.coeff(0) != Rational(0));

    auto no_inner = mk(4, {{bm({1, 2}), 1}, {bm({3, 4}), 1}});
    auto g = factor_maximal_orthogonal(no_inner);
    CHECK(g.B == Multivector<>::scalar(4, Rational(1)));
    CHECK(g.N == no_inner);
    CHECK(g.maximal);
    CHECK(g.tight);
    CHECK(g.orthogonal);

    CHECK_THROWS_AS(factor_maximal_orthogonal(Multivector<>(3)), std::domain_error);
}

TEST_CASE("factorization in a chosen complement") {
    auto m = sample_m5();
    auto b = wedge(mk(5, {{bm({1}), 1}, {bm({3}), -1}}), mk(5, {{bm({3}), 1}, {bm({5}), 1}}));
    // complement chosen to reproduce the tight cofactor v4 + v23
    auto v = Subspace<Rational>::span(5, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});
    auto n_tight = factor_in_complement(m, b, v);
    CHECK(n_tight == mk(5, {{bm({4}), 1}, {bm({2, 3}), 1}}));
    auto f = classify_factorization(m, b, n_tight);
    CHECK(f.maximal);
    CHECK(f.tight);
    CHECK_FALSE(f.orthogonal);

    auto e12 = mk(2, {{bm({1, 2}), 1}});
    auto e1 = mk(2, {{bm({1}), 1}});
    CHECK(factor_in_complement(e12, e1, Subspace<Rational>::span(2, {{0, 1}})) ==
          mk(2, {{bm({2}), 1}}));
    CHECK(factor_in_complement(e12, e1, Subspace<Rational>::span(2, {{1, 1}})) ==
          mk(2, {{bm({1}), 1}, {bm({2}), 1}}));

    // not an inner blade
    CHECK_THROWS_WITH_AS(factor_in_complement(e12, mk(2, {{bm({2}), 1}}) + e1 + e12, v),
                         "blade_span: not a blade", std::domain_error);
    CHECK_THROWS_WITH_AS(
        factor_in_complement(mk(2, {{bm({2}), 1}}), e1, Subspace<Rational>::span(2, {{0, 1}})),
        "not an inner blade", std::domain_error);
    // overlapping V is not a valid complement
    CHECK_THROWS_AS(factor_in_complement(e12, e1, Subspace<Rational>::span(2, {{1, 0}})),
                    std::domain_error);
}

TEST_CASE("classification of factorization variants") {
    auto m = sample_m5();
    auto b = wedge(mk(5, {{bm({1}), 1}, {bm({3}), -1}}), mk(5, {{bm({3}), 1}, {bm({5}), 1}}));

    // N' + v15 still factors M (B ^ v15 = 0): maximal but not tight
    auto n_loose = mk(5, {{bm({4}), 1}, {bm({2, 3}), 1}, {bm({1, 5}), 1}});
    auto f1 = classify_factorization(m, b, n_loose);
    CHECK(f1.maximal);
    CHECK_FALSE(f1.tight);
    CHECK_FALSE(f1.orthogonal);

    // B' = v1 - v3: orthogonal but non-maximal, with i(N'') = [B' lcontr B]
    auto b_small = mk(5, {{bm({1}), 1}, {bm({3}), -1}});
    auto n2 = lcontr(b_small, m) / norm_sq(b_small);
    auto half = Rational(1) / 2;
    CHECK(n2 == half * mk(5, {{bm({3, 4}), 1}, {bm({4, 5}), -2}, {bm({1, 4}), 1}, {bm({2, 3, 5}), 1}, {bm({1, 2, 5}), -1}}));
    auto f2 = classify_factorization(m, b_small, n2);
    CHECK(f2.orthogonal);
    CHECK(f2.tight);
    CHECK_FALSE(f2.maximal);
    CHECK(inner_space(n2) == Subspace<Rational>::span(5, {{1, 0, 1, 0, 2}}));
    CHECK(inner_space(n2) == inner_space(lcontr(b_small, b)));

    // e12 = e1 ^ e2 is tight and orthogonal, but not maximal: the inner space
    // of the blade e12 is the whole plane, strictly larger than [e1].
    auto f3 = classify_factorization(mk(2, {{bm({1, 2}), 1}}), mk(2, {{bm({1}), 1}}),
                                     mk(2, {{bm({2}), 1}}));
    CHECK(f3.tight);
    CHECK(f3.orthogonal);
    CHECK_FALSE(f3.maximal);
    auto f4 = classify_factorization(mk(2, {{bm({1, 2}), 1}}), mk(2, {{bm({1, 2}), 1}}),
                                     Multivector<>::scalar(2, Rational(1)));
    CHECK(f4.tight);
    CHECK(f4.orthogonal);
    CHECK(f4.maximal);

    CHECK_THROWS_WITH_AS(classify_factorization(m, b, b), "not a factorization of M",
                         std::domain_error);
}

TEST_CASE("non-maximal factorization with trivial inner cofactor") {
    // v123 = v1 ^ (v1 + v23): not maximal although the cofactor has zero inner space
    auto m = mk(3, {{bm({1, 2, 3}), 1}});
    auto b = mk(3, {{bm({1}), 1}});
    auto n = mk(3, {{bm({1}), 1}, {bm({2, 3}), 1}});
    auto f = classify_factorization(m, b, n);
    CHECK_FALSE(f.maximal);
    CHECK_FALSE(f.tight);
    CHECK(inner_space(n).dim() == 0);
}

TEST_CASE("minimal internal carving of the second running example") {
    auto m = sample_m6();
    auto c = carve_minimal_internal(m);
    auto b_expected = wedge(mk(6, {{bm({1, 2, 3, 4}), 1}}), mk(6, {{bm({6}), 1}, {bm({5}), -2}}));
    CHECK(inner_space(c.B) == inner_space(b_expected));
    CHECK(lcontr(c.N, c.B) == m);
    CHECK(c.minimal);
    CHECK(c.internal);
    CHECK(c.tight);

    // with the exact blade from the worked example, N = (v46 - 2 v45 - 5 v23)/5
    auto n_expected = rcontr(b_expected, m) / norm_sq(b_expected);
    auto fifth = Rational(1) / 5;
    CHECK(n_expected == fifth * mk(6, {{bm({4, 6}), 1}, {bm({4, 5}), -2}, {bm({2, 3}), -5}}));
    auto cp = classify_carving(m, b_expected, n_expected);
    CHECK(cp.minimal);
    CHECK(cp.internal);
    CHECK(cp.tight);

    // scalar input: empty outer space, B = 1, N = M
    auto cs = carve_minimal_internal(Multivector<>::scalar(3, Rational(2)));
    CHECK(cs.B == Multivector<>::scalar(3, Rational(1)));
    CHECK(cs.N == Multivector<>::scalar(3, Rational(2)));
    CHECK(cs.minimal);
    CHECK(cs.internal);

    CHECK_THROWS_AS(carve_minimal_internal(Multivector<>(3)), std::domain_error);
}

TEST_CASE("classification of carving variants") {
    auto m = sample_m6();
    auto b = wedge(mk(6, {{bm({1, 2, 3, 4}), 1}}), mk(6, {{bm({6}), 1}, {bm({5}), -2}}));

    // N' = v46 - v23: minimal and tight but not internal
    auto n_tight = mk(6, {{bm({4, 6}), 1}, {bm({2, 3}), -1}});
    auto c1 = classify_carving(m, b, n_tight);
    CHECK(c1.minimal);
    CHECK(c1.tight);
    CHECK_FALSE(c1.internal);

    // N' + v15 + 2 v16: minimal but not tight
    auto n_loose = n_tight + mk(6, {{bm({1, 5}), 1}, {bm({1, 6}), 2}});
    auto c2 = classify_carving(m, b, n_loose);
    CHECK(c2.minimal);
    CHECK_FALSE(c2.tight);
    CHECK_FALSE(c2.internal);
    CHECK(outer_space(n_loose) == Subspace<Rational>::full(6));

    // B' = v123456: internal but non-minimal, with i(N'') = [B lcontr B']
    auto b_big = mk(6, {{bm({1, 2, 3, 4, 5, 6}), 1}});
    auto n2 = rcontr(b_big, m);
    CHECK(n2 == mk(6, {{bm({4, 5, 6}), -1}, {bm({2, 3, 6}), -2}, {bm({2, 3, 5}), -1}}));
    auto c3 = classify_carving(m, b_big, n2);
    CHECK(c3.internal);
    CHECK(c3.tight);
    CHECK_FALSE(c3.minimal);
    CHECK(inner_space(n2) == Subspace<Rational>::span(6, {{0, 0, 0, 0, 1, 2}}));
    CHECK(inner_space(n2) == inner_space(lcontr(b, b_big)));

    CHECK_THROWS_WITH_AS(classify_carving(m, b, b), "not a carving of M", std::domain_error);
}

TEST_CASE("non-minimal carving with trivial inner cofactor") {
    // 1 = (v1 + v23) lcontr v23: not minimal although the cofactor has zero inner space
    auto b = mk(3, {{bm({2, 3}), 1}});
    auto n = mk(3, {{bm({1}), 1}, {bm({2, 3}), 1}});
    auto m = lcontr(n, b);
    CHECK(m == Multivector<>::scalar(3, Rational(1)));
    auto c = classify_carving(m, b, n);
    CHECK_FALSE(c.minimal);
    CHECK_FALSE(c.tight);
    CHECK(inner_space(n).dim() == 0);
}

TEST_CASE("carving in a chosen complement") {
    auto m = sample_m6();
    auto b = wedge(mk(6, {{bm({1, 2, 3, 4}), 1}}), mk(6, {{bm({6}), 1}, {bm({5}), -2}}));
    // complement of [B]^perp chosen to reproduce N' = v46 - v23
    auto v = Subspace<Rational>::span(6, {{1, 0, 0, 0, 0, 0},
                                          {0, 1, 0, 0, 0, 0},
                                          {0, 0, 1, 0, 0, 0},
                                          {0, 0, 0, 1, 0, 0},
                                          {0, 0, 0, 0, 0, 1}});
    auto n = carve_in_complement(m, b, v);
    CHECK(n == mk(6, {{bm({4, 6}), 1}, {bm({2, 3}), -1}}));
    CHECK(lcontr(n, b) == m);

    auto e12 = mk(2, {{bm({1, 2}), 1}});
    auto e2 = mk(2, {{bm({2}), 1}});
    auto n2 = carve_in_complement(e2, e12, Subspace<Rational>::span(2, {{1, 0}}));
    CHECK(lcontr(n2, e12) == e2);
    CHECK(n2 == mk(2, {{bm({1}), 1}}));

    // identity carving
    CHECK(carve_in_complement(b, b, inner_space(b)) == Multivector<>::scalar(6, Rational(1)));

    // not an outer blade
    CHECK_THROWS_WITH_AS(carve_in_complement(m, mk(6, {{bm({1, 2, 3, 4, 5}), 1}}), v),
                         "not an outer blade", std::domain_error);
    // V meeting [B]^perp is rejected
    CHECK_THROWS_AS(carve_in_complement(m, b, Subspace<Rational>::span(6, {{0, 0, 0, 0, 1, 2}})),
                    std::domain_error);
}

TEST_CASE("balanced blade decomposition") {
    auto m = sample_m5();
    auto parts = balanced_blade_decomposition(m);
    CHECK(parts.size() == 2);
    Multivector<> total(5);
    for (const auto& p : parts) {
        total = total + p;
        CHECK(inner_space(p) == outer_space(p));  // each part is a blade
    }
    CHECK(total == m);
    CHECK(is_inner_balanced(parts));
    CHECK(is_outer_balanced(parts));

    auto single = balanced_blade_decomposition(mk(4, {{bm({1, 2, 3}), 2}}));
    CHECK(single.size() == 1);
    CHECK(single[0] == mk(4, {{bm({1, 2, 3}), 2}}));

    auto two = balanced_blade_decomposition(mk(4, {{bm({1, 2}), 1}, {bm({3, 4}), 1}}));
    CHECK(two.size() == 2);
    CHECK(is_inner_balanced(two));
    CHECK(is_outer_balanced(two));

    CHECK_THROWS_AS(balanced_blade_decomposition(Multivector<>(3)), std::domain_error);
}

TEST_CASE("bivector rank") {
    CHECK(bivector_rank(mk(4, {{bm({1, 2}), 1}})) == 1);
    CHECK(bivector_rank(mk(4, {{bm({1, 2}), 1}, {bm({3, 4}), 1}})) == 2);
    CHECK(bivector_rank(mk(6, {{bm({1, 2}), 1}, {bm({3, 4}), 1}, {bm({5, 6}), 1}})) == 3);
    CHECK_THROWS_AS(bivector_rank(Multivector<>(4)), std::domain_error);
    CHECK_THROWS_AS(bivector_rank(mk(4, {{bm({1}), 1}})), std::domain_error);
    CHECK_THROWS_AS(bivector_rank(mk(4, {{bm({1, 2}), 1}, {bm({3}), 1}})), std::domain_error);
}

TEST_CASE("minimal bivector decompositions are balanced") {
    for (int k = 1; k <= 3; ++k) {
        std::vector<Multivector<>> parts;
        Multivector<> h(6);
        for (int i = 1; i <= k; ++i) {
            auto blade = mk(6, {{bm({2 * i - 1, 2 * i}), 1}});
            parts.push_back(blade);
            h = h + blade;
        }
        CHECK(bivector_rank(h) == k);
        CHECK(is_inner_balanced(parts));
        CHECK(is_outer_balanced(parts));
        CHECK((int)balanced_blade_decomposition(h).size() == k);
    }
}

TEST_CASE("factorization properties on random instances") {
    std::mt19937 rng(421);
    std::uniform_int_distribution<int> grade(1, 2);
    int done = 0;
    while (done < 60) {
        int n = 4 + (int)(rng() % 2);
        auto b = testutil::rand_blade<Rational>(rng, n, grade(rng));
        auto nn = testutil::rand_mv<Rational>(rng, n, 3);
        auto m = wedge(b, nn);
        if (m.is_zero()) continue;
        ++done;
        auto f = classify_factorization(m, b, nn);
        auto span = inner_space(b);
        auto im = inner_space(m), om = outer_space(m);
        auto in = inner_space(nn), on = outer_space(nn);

        // tight <=> both spaces split as direct sums
        bool split = (om == span + on) && (intersect(span, on).dim() == 0) &&
                     (im == span + in) && (intersect(span, in).dim() == 0);
        CHECK(f.tight == split);

        // orthogonal <=> N is the contraction cofactor
        CHECK(f.orthogonal == (nn == lcontr(b, m) / norm_sq(b)));

        // maximal => trivial inner cofactor; converse under tightness
        if (f.maximal) CHECK(in.dim() == 0);
        if (f.tight && in.dim() == 0) CHECK(f.maximal);

        // comparison against a maximal factorization
        auto fmax = factor_maximal_orthogonal(m);
        auto span_max = inner_space(fmax.B);
        CHECK(span_max.contains(span));
        if (f.tight) {
            CHECK(span_max == span + in);
            CHECK(intersect(span, in).dim() == 0);
        }
        if (f.orthogonal) {
            auto rest = lcontr(b, fmax.B);
            CHECK_FALSE(rest.is_zero());
            CHECK(in == inner_space(rest));
        }
        if (f.maximal) CHECK(proportional(b, fmax.B));

        // duality: factorization of M <-> carving of *M on the dual blade
        auto c = classify_carving(hodge_right(m), hodge_right(b), nn);
        CHECK(c.tight == f.tight);
        CHECK(c.internal == f.orthogonal);
        CHECK(c.minimal == f.maximal);
    }
}

TEST_CASE("carving properties on random instances") {
    std::mt19937 rng(733);
    std::uniform_int_distribution<int> grade(2, 4);
    int done = 0;
    while (done < 60) {
        int n = 4 + (int)(rng() % 2);
        auto b = testutil::rand_blade<Rational>(rng, n, grade(rng));
        auto nn = testutil::rand_mv<Rational>(rng, n, 3);
        auto m = lcontr(nn, b);
        if (m.is_zero()) continue;
        ++done;
        auto c = classify_carving(m, b, nn);
        auto span = inner_space(b);
        auto im = inner_space(m), om = outer_space(m);
        auto in = inner_space(nn), on = outer_space(nn);

        // tight => both spaces are recovered as intersections inside [B]
        if (c.tight) {
            CHECK(om == intersect(in.orth_complement(), span));
            CHECK(im == intersect(on.orth_complement(), span));
        }

        // internal <=> N is the right-contraction cofactor
        CHECK(c.internal == (nn == rcontr(b, m) / norm_sq(b)));

        // minimal => trivial inner cofactor; converse under tightness
        if (c.minimal) CHECK(in.dim() == 0);
        if (c.tight && in.dim() == 0) CHECK(c.minimal);

        // comparison against a minimal carving
        auto cmin = carve_minimal_internal(m);
        auto span_min = inner_space(cmin.B);
        CHECK(span.contains(span_min));
        if (c.tight) CHECK(span_min == intersect(in.orth_complement(), span));
        if (c.internal) {
            auto rest = lcontr(cmin.B, b);
            CHECK_FALSE(rest.is_zero());
            CHECK(in == inner_space(rest));
        }
        if (c.minimal) CHECK(proportional(b, cmin.B));
    }
}

TEST_CASE("factorizations and carvings propagate balance") {
    std::mt19937 rng(97);
    int done = 0;
    while (done < 40) {
        int n = 5;
        auto m = testutil::rand_mv_nonzero<Rational>(rng, n, 4);
        ++done;

        // maximal factorization: any split of N gives an inner balanced sum
        auto f = factor_maximal_orthogonal(m);
        std::vector<Multivector<>> split;
        Multivector<> part1(n), part2(n);
        for (const auto& [mask, c] : f.N.terms())
            ((rng() % 2) ? part1 : part2).add_term(mask, c);
        std::vector<Multivector<>> parts;
        if (!part1.is_zero()) parts.push_back(wedge(f.B, part1));
        if (!part2.is_zero()) parts.push_back(wedge(f.B, part2));
        if (!parts.empty()) CHECK(is_inner_balanced(parts));

        // minimal carving: any split of N gives an outer balanced sum
        auto c = carve_minimal_internal(m);
        Multivector<> q1(n), q2(n);
        for (const auto& [mask, s] : c.N.terms()) ((rng() % 2) ? q1 : q2).add_term(mask, s);
        std::vector<Multivector<>> cparts;
        if (!lcontr(q1, c.B).is_zero()) cparts.push_back(lcontr(q1, c.B));
        if (!lcontr(q2, c.B).is_zero()) cparts.push_back(lcontr(q2, c.B));
        if (!cparts.empty()) CHECK(is_outer_balanced(cparts));
    }
}

TEST_CASE("constructive complements reproduce the canonical cofactors") {
    std::mt19937 rng(555);
    int done = 0;
    while (done < 30) {
        int n = 4;
        auto m = testutil::rand_mv_nonzero<Rational>(rng, n, 3);
        ++done;
        auto f = factor_maximal_orthogonal(m);
        auto span = inner_space(f.B);
        if (span.dim() > 0 && span.dim() < n)
            CHECK(factor_in_complement(m, f.B, span.orth_complement()) == f.N);
        auto c = carve_minimal_internal(m);
        auto cspan = inner_space(c.B);
        if (cspan.dim() > 0) CHECK(carve_in_complement(m, c.B, cspan) == c.N);
    }
}
