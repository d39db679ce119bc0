#ifndef EXALG_MULTIVECTOR_HPP
#define EXALG_MULTIVECTOR_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "exalg/indices.hpp"
#include "exalg/matrix.hpp"
#include "exalg/scalar.hpp"

namespace exalg {

inline constexpr int kMaxDim = 32;

// Sparse multivector over an exact field: map from basis blade (bitmask over
// {1..n}) to nonzero coefficient.  Immutable value semantics; stored zero
// coefficients are pruned so equality is term-map equality.
template <class S = Rational>
class Multivector {
public:
    explicit Multivector(int dim) : n_(check_dim(dim)) {}

    static Multivector scalar(int dim, S v) {
        Multivector m(dim);
        m.add_term(0, std::move(v));
        return m;
    }
    static Multivector basis_vector(int dim, int i) {
        if (i < 1 || i > dim) throw std::domain_error("basis_vector: index out of range");
        return basis_blade(dim, BladeMask{1} << (i - 1));
    }
    static Multivector basis_blade(int dim, BladeMask mask, S coeff = S(1)) {
        Multivector m(dim);
        if (mask >> dim) throw std::domain_error("basis_blade: blade exceeds dimension");
        m.add_term(mask, std::move(coeff));
        return m;
    }
    static Multivector from_vector(int dim, const std::vector<S>& coords) {
        if ((int)coords.size() != dim) throw std::domain_error("from_vector: bad size");
        Multivector m(dim);
        for (int i = 0; i < dim; ++i) m.add_term(BladeMask{1} << i, coords[i]);
        return m;
    }
    static Multivector pseudoscalar(int dim) {
        return basis_blade(dim, dim == 32 ? ~BladeMask{0} : (BladeMask{1} << dim) - 1);
    }

    int dim() const { return n_; }
    const std::map<BladeMask, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coeff(BladeMask mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add_term(BladeMask mask, S v) {
        if (mask >> n_ != 0) throw std::domain_error("Multivector: blade exceeds dimension");
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            if (!exalg::is_zero(v)) terms_.emplace(mask, std::move(v));
        } else {
            it->second += v;
            if (exalg::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        check_same(a, b);
        Multivector r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        check_same(a, b);
        Multivector r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Multivector operator-(const Multivector& a) {
        Multivector r(a.n_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Multivector operator*(const S& s, const Multivector& a) {
        Multivector r(a.n_);
        if (exalg::is_zero(s)) return r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
        return r;
    }
    friend Multivector operator/(const Multivector& a, const S& s) { return (S(1) / s) * a; }

    static void check_same(const Multivector& a, const Multivector& b) {
        if (a.n_ != b.n_) throw std::domain_error("Multivector: dimension mismatch");
    }

private:
    static int check_dim(int dim) {
        if (dim < 1) throw std::domain_error("Multivector: dimension must be >= 1");
        if (dim > kMaxDim) throw std::length_error("Multivector: dimension cap is 32");
        return dim;
    }

    int n_;
    std::map<BladeMask, S> terms_;
};

// M ^ N, bilinear extension of v_r ^ v_s = eps * v_{<rs>} on disjoint supports.
template <class S>
Multivector<S> wedge(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S>::check_same(a, b);
    Multivector<S> r(a.dim());
    for (const auto& [rm, rc] : a.terms())
        for (const auto& [sm, sc] : b.terms()) {
            if (rm & sm) continue;
            S v = rc * sc;
            if (mask_concat_sign(rm, sm) < 0) v = -v;
            r.add_term(rm | sm, std::move(v));
        }
    return r;
}

// Left contraction M ⌟ N; conjugate-linear in M.
template <class S>
Multivector<S> lcontr(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S>::check_same(a, b);
    Multivector<S> r(a.dim());
    for (const auto& [rm, rc] : a.terms())
        for (const auto& [sm, sc] : b.terms()) {
            if (rm & ~sm) continue;
            BladeMask t = sm & ~rm;
            S v = conj(rc) * sc;
            if (mask_concat_sign(rm, t) < 0) v = -v;
            r.add_term(t, std::move(v));
        }
    return r;
}

// Right contraction M ⌞ N; conjugate-linear in N.  Sign convention is the
// mirror of lcontr, which makes star(M rcontr N) == N wedge star(M) hold.
template <class S>
Multivector<S> rcontr(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S>::check_same(a, b);
    Multivector<S> r(a.dim());
    for (const auto& [sm, sc] : a.terms())
        for (const auto& [rm, rc] : b.terms()) {
            if (rm & ~sm) continue;
            BladeMask t = sm & ~rm;
            S v = sc * conj(rc);
            if (mask_concat_sign(t, rm) < 0) v = -v;
            r.add_term(t, std::move(v));
        }
    return r;
}

// Hermitian pairing with orthonormal basis blades; conjugate-linear in the
// first argument.
template <class S>
S inner(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S>::check_same(a, b);
    S r(0);
    for (const auto& [m, c] : a.terms()) {
        S other = b.coeff(m);
        if (!is_zero(other)) r += conj(c) * other;
    }
    return r;
}

template <class S>
S norm_sq(const Multivector<S>& a) {
    return inner(a, a);
}

// Geometric product, Euclidean signature (orthonormal basis vectors square to 1).
template <class S>
Multivector<S> clifford(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S>::check_same(a, b);
    Multivector<S> r(a.dim());
    for (const auto& [rm, rc] : a.terms())
        for (const auto& [sm, sc] : b.terms()) {
            S v = rc * sc;
            if (mask_concat_sign(rm, sm) < 0) v = -v;
            r.add_term(rm ^ sm, std::move(v));
        }
    return r;
}

template <class S>
Multivector<S> grade_part(const Multivector<S>& a, int p) {
    Multivector<S> r(a.dim());
    for (const auto& [m, c] : a.terms())
        if (mask_grade(m) == p) r.add_term(m, c);
    return r;
}

template <class S>
Multivector<S> grade_involution(const Multivector<S>& a) {
    Multivector<S> r(a.dim());
    for (const auto& [m, c] : a.terms()) r.add_term(m, mask_grade(m) % 2 ? -c : c);
    return r;
}

template <class S>
Multivector<S> grade_involution_k(const Multivector<S>& a, int k) {
    return (k % 2 == 0) ? a : grade_involution(a);
}

template <class S>
Multivector<S> reversion(const Multivector<S>& a) {
    Multivector<S> r(a.dim());
    for (const auto& [m, c] : a.terms()) {
        int p = mask_grade(m);
        r.add_term(m, (p * (p - 1) / 2) % 2 ? -c : c);
    }
    return r;
}

// Right dual *M = M ⌟ Omega and left dual Omega ⌞ M.
template <class S>
Multivector<S> hodge_right(const Multivector<S>& a) {
    return lcontr(a, Multivector<S>::pseudoscalar(a.dim()));
}

template <class S>
Multivector<S> hodge_left(const Multivector<S>& a) {
    return rcontr(Multivector<S>::pseudoscalar(a.dim()), a);
}

template <class S>
Multivector<S> hodge_right_inverse(const Multivector<S>& a) {
    int n = a.dim();
    Multivector<S> r(n);
    // star is a signed bijection on basis blades; invert termwise
    for (const auto& [m, c] : a.terms()) {
        BladeMask pre = (n == 32 ? ~BladeMask{0} : (BladeMask{1} << n) - 1) & ~m;
        int sign = mask_concat_sign(pre, m);
        r.add_term(pre, sign < 0 ? -conj(c) : conj(c));
    }
    return r;
}

// Outermorphism extension of a linear map given by its matrix (target dim =
// rows, source dim = cols): T(v_r) = T v_{i1} ^ ... ^ T v_{ip}, T(1) = 1.
template <class S>
Multivector<S> outermorphism_apply(const Matrix<S>& t, const Multivector<S>& a) {
    if ((int)t.cols() != a.dim()) throw std::domain_error("outermorphism_apply: dimension mismatch");
    int m = (int)t.rows();
    std::vector<Multivector<S>> images;
    for (int j = 0; j < a.dim(); ++j) {
        Multivector<S> img(m);
        for (int i = 0; i < m; ++i) img.add_term(BladeMask{1} << i, t.at(i, j));
        images.push_back(std::move(img));
    }
    Multivector<S> r(m);
    for (const auto& [mask, c] : a.terms()) {
        Multivector<S> w = Multivector<S>::scalar(m, S(1));
        for (int i : tuple_of(mask)) w = wedge(w, images[i - 1]);
        r = r + c * w;
    }
    return r;
}

}  // namespace exalg

#endif
