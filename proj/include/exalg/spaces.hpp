#ifndef EXALG_SPACES_HPP
#define EXALG_SPACES_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "exalg/multivector.hpp"
#include "exalg/subspace.hpp"

namespace exalg {

namespace detail {

// Kernel of the linear map c -> sum_i c_i images[i] between coordinate space
// and Lambda X, by exact elimination on the blades actually present.
template <class S>
std::vector<std::vector<S>> map_kernel(const std::vector<Multivector<S>>& images) {
    std::vector<BladeMask> support;
    for (const auto& img : images)
        for (const auto& [m, c] : img.terms()) support.push_back(m);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::map<BladeMask, std::size_t> row_of;
    for (std::size_t i = 0; i < support.size(); ++i) row_of[support[i]] = i;

    Matrix<S> a(support.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [m, c] : images[j].terms()) a.at(row_of[m], j) = c;
    return a.kernel_basis();
}

}  // namespace detail

// i(M) = {v : v ^ M = 0}; the exception i(0) = X falls out of the kernel.
template <class S>
Subspace<S> inner_space(const Multivector<S>& m) {
    int n = m.dim();
    std::vector<Multivector<S>> images;
    for (int i = 1; i <= n; ++i) images.push_back(wedge(Multivector<S>::basis_vector(n, i), m));
    return Subspace<S>::span(n, detail::map_kernel(images));
}

// o(M) = {v : v ⌟ M = 0}^perp.  lcontr is conjugate-linear in v, so the
// kernel is solved in conjugated coordinates and conjugated back.
template <class S>
Subspace<S> outer_space(const Multivector<S>& m) {
    int n = m.dim();
    std::vector<Multivector<S>> images;
    for (int i = 1; i <= n; ++i) images.push_back(lcontr(Multivector<S>::basis_vector(n, i), m));
    auto ker = detail::map_kernel(images);
    for (auto& v : ker)
        for (auto& c : v) c = conj(c);
    return Subspace<S>::span(n, std::move(ker)).orth_complement();
}

struct GradeProfile {
    int igrade, bgrade, tgrade, ograde;
    friend bool operator==(const GradeProfile&, const GradeProfile&) = default;
};

template <class S>
GradeProfile grade_profile(const Multivector<S>& m) {
    if (m.is_zero()) throw std::domain_error("grade_profile: grades undefined at zero");
    int bg = kMaxDim + 1, tg = -1;
    for (const auto& [mask, c] : m.terms()) {
        int g = mask_grade(mask);
        bg = std::min(bg, g);
        tg = std::max(tg, g);
    }
    return {inner_space(m).dim(), bg, tg, outer_space(m).dim()};
}

template <class S>
bool is_inner_balanced(const std::vector<Multivector<S>>& parts) {
    if (parts.empty()) throw std::domain_error("is_inner_balanced: empty decomposition");
    Multivector<S> total = parts[0];
    Subspace<S> meet = inner_space(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        total = total + parts[i];
        meet = intersect(meet, inner_space(parts[i]));
    }
    return inner_space(total) == meet;
}

template <class S>
bool is_outer_balanced(const std::vector<Multivector<S>>& parts) {
    if (parts.empty()) throw std::domain_error("is_outer_balanced: empty decomposition");
    Multivector<S> total = parts[0];
    Subspace<S> join = outer_space(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        total = total + parts[i];
        join = join + outer_space(parts[i]);
    }
    return outer_space(total) == join;
}

}  // namespace exalg

#endif
