#include "homeology/chain.hpp"

#include <algorithm>

#include "homeology/error.hpp"
#include "homeology/lattice.hpp"

namespace hml {

namespace {

// d_k without range checks: empty shapes outside the complex.
IntMatrix raw_boundary(const SimplicialComplex& k, int degree, bool reduced) {
    const int lowest = reduced ? -1 : 0;
    const auto& cols = k.faces(degree);
    const int rows = degree - 1 >= lowest ? static_cast<int>(k.faces(degree - 1).size()) : 0;
    IntMatrix m(rows, static_cast<int>(cols.size()));
    if (degree - 1 < lowest || degree < lowest) return m;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& s = cols[j];
        SparseVec col;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<long>(i));
            col.push_back({k.index_of(f), (i % 2 == 0) ? 1 : -1});
        }
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        m.col(static_cast<int>(j)) = std::move(col);
    }
    return m;
}

void check_degree(const SimplicialComplex& k, int degree, bool reduced) {
    const int lowest = reduced ? -1 : 0;
    if (degree < lowest || degree > std::max(k.dim(), lowest)) {
        throw Error(ErrorKind::InvalidInput, "chain degree " + std::to_string(degree) + " out of range");
    }
}

AbelianGroup subquotient_group(const IntMatrix& out, const IntMatrix& in, const Domain& dom) {
    return Subquotient(kernel_basis(out, dom), in, dom).group();
}

}  // namespace

IntMatrix boundary_matrix(const SimplicialComplex& k, int degree, bool reduced) {
    check_degree(k, degree, reduced);
    return raw_boundary(k, degree, reduced);
}

IntMatrix coboundary_matrix(const SimplicialComplex& k, int degree, bool reduced) {
    check_degree(k, degree, reduced);
    return raw_boundary(k, degree + 1, reduced).transpose();
}

GradedGroup homology(const SimplicialComplex& k, const Coefficients& coeffs, bool reduced) {
    GradedGroup out;
    const Domain dom = coeffs.domain();
    const int lowest = reduced ? -1 : 0;
    for (int d = lowest; d <= std::max(k.dim(), lowest); ++d) {
        out[d] = coeffs.finalize(subquotient_group(raw_boundary(k, d, reduced), raw_boundary(k, d + 1, reduced), dom));
    }
    return out;
}

GradedGroup cohomology(const SimplicialComplex& k, const Coefficients& coeffs, bool reduced) {
    GradedGroup out;
    const Domain dom = coeffs.domain();
    const int lowest = reduced ? -1 : 0;
    for (int d = lowest; d <= std::max(k.dim(), lowest); ++d) {
        out[d] = coeffs.finalize(subquotient_group(raw_boundary(k, d + 1, reduced).transpose(),
                                                   raw_boundary(k, d, reduced).transpose(), dom));
    }
    return out;
}

Subquotient reduced_cohomology_group(const SimplicialComplex& k, int degree, const Domain& dom) {
    const int n = static_cast<int>(k.faces(degree).size());
    if (degree < -1 || n == 0) return Subquotient(IntMatrix(0, 0), IntMatrix(0, 0), dom);
    IntMatrix out = raw_boundary(k, degree + 1, true).transpose();
    IntMatrix in = raw_boundary(k, degree, true).transpose();
    return Subquotient(kernel_basis(out, dom), in, dom);
}

LinkCohomology reduced_link_cohomology(const SimplicialComplex& k, const Simplex& sigma, int q,
                                       const Coefficients& coeffs) {
    if (sigma.empty()) throw Error(ErrorKind::InvalidInput, "link cohomology needs a nonempty simplex");
    LinkCohomology out;
    out.link = link(k, sigma);
    out.degree = q - static_cast<int>(sigma.size());
    out.group = reduced_cohomology_group(out.link, out.degree, coeffs.domain());
    return out;
}

}  // namespace hml
