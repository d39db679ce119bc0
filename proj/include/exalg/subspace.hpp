#ifndef EXALG_SUBSPACE_HPP
#define EXALG_SUBSPACE_HPP

#include <vector>

#include "exalg/matrix.hpp"
#include "exalg/multivector.hpp"

namespace exalg {

// Subspace of X in canonical form: reduced row-echelon basis, pivot columns
// ascending.  Two Subspace values are equal iff they are the same subspace.
template <class S = Rational>
class Subspace {
public:
    static Subspace zero(int ambient) { return Subspace(ambient, {}); }

    static Subspace full(int ambient) {
        std::vector<std::vector<S>> rows(ambient, std::vector<S>(ambient, S(0)));
        for (int i = 0; i < ambient; ++i) rows[i][i] = S(1);
        return Subspace(ambient, std::move(rows));
    }

    static Subspace span(int ambient, std::vector<std::vector<S>> rows) {
        for (const auto& r : rows)
            if ((int)r.size() != ambient) throw std::domain_error("Subspace::span: bad vector size");
        Matrix<S> m(rows.size(), ambient);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < ambient; ++j) m.at(i, j) = rows[i][j];
        auto pivots = m.rref();
        std::vector<std::vector<S>> basis;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::vector<S> v(ambient);
            for (int j = 0; j < ambient; ++j) v[j] = m.at(i, j);
            basis.push_back(std::move(v));
        }
        return Subspace(ambient, std::move(basis));
    }

    static Subspace span_of(const std::vector<Multivector<S>>& vecs, int ambient) {
        std::vector<std::vector<S>> rows;
        for (const auto& v : vecs) {
            std::vector<S> row(ambient, S(0));
            for (const auto& [m, c] : v.terms()) {
                if (mask_grade(m) != 1) throw std::domain_error("Subspace::span_of: not a vector");
                row[tuple_of(m)[0] - 1] = c;
            }
            rows.push_back(std::move(row));
        }
        return span(ambient, std::move(rows));
    }

    int ambient() const { return n_; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<std::vector<S>>& basis() const { return basis_; }

    std::vector<Multivector<S>> basis_vectors() const {
        std::vector<Multivector<S>> out;
        for (const auto& row : basis_) out.push_back(Multivector<S>::from_vector(n_, row));
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    bool contains(const std::vector<S>& v) const {
        Matrix<S> m(basis_.size() + 1, n_);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (int j = 0; j < n_; ++j) m.at(i, j) = basis_[i][j];
        for (int j = 0; j < n_; ++j) m.at(basis_.size(), j) = v[j];
        return m.rank() == basis_.size();
    }

    bool contains(const Subspace& other) const {
        if (n_ != other.n_) throw std::domain_error("Subspace: ambient mismatch");
        for (const auto& v : other.basis_)
            if (!contains(v)) return false;
        return true;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.n_ != b.n_) throw std::domain_error("Subspace: ambient mismatch");
        auto rows = a.basis_;
        rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
        return span(a.n_, std::move(rows));
    }

    // Orthogonal complement w.r.t. the canonical (Hermitian) inner product.
    Subspace orth_complement() const {
        Matrix<S> m(basis_.size(), n_);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (int j = 0; j < n_; ++j) m.at(i, j) = conj(basis_[i][j]);
        auto ker = m.kernel_basis();
        return span(n_, std::move(ker));
    }

    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        return (a.orth_complement() + b.orth_complement()).orth_complement();
    }

    // Orthogonal projector onto this subspace, as an n x n matrix:
    // P = A^T (conj(A) A^T)^-1 conj(A) for basis rows A, so that
    // P x = sum_i c_i a_i with Gram conditions <a_i, x - P x> = 0.
    Matrix<S> projector() const {
        Matrix<S> a(basis_.size(), n_);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (int j = 0; j < n_; ++j) a.at(i, j) = conj(basis_[i][j]);
        Matrix<S> ah = a.conj_transpose();
        auto gram_inv = (a * ah).inverse();
        if (!gram_inv) throw std::domain_error("Subspace::projector: degenerate Gram matrix");
        return ah * (*gram_inv) * a;
    }

private:
    Subspace(int ambient, std::vector<std::vector<S>> basis)
        : n_(ambient), basis_(std::move(basis)) {
        if (ambient < 1 || ambient > kMaxDim) throw std::length_error("Subspace: bad ambient dimension");
    }

    int n_;
    std::vector<std::vector<S>> basis_;
};

// Partial orthogonality U ⋔ V: V^perp ∩ U != {0}.
template <class S>
bool is_pperp(const Subspace<S>& u, const Subspace<S>& v) {
    if (u.ambient() != v.ambient()) throw std::domain_error("is_pperp: ambient mismatch");
    return intersect(v.orth_complement(), u).dim() > 0;
}

// Outermorphism extension of the orthogonal projection onto V.
template <class S>
Multivector<S> project(const Multivector<S>& m, const Subspace<S>& v) {
    if (m.dim() != v.ambient()) throw std::domain_error("project: dimension mismatch");
    if (v.dim() == 0) return Multivector<S>::scalar(m.dim(), m.coeff(0));
    return outermorphism_apply(v.projector(), m);
}

}  // namespace exalg

#endif
