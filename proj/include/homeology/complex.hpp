#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hml {

/// Vertex ords in strictly increasing order; the empty vector is the empty simplex.
using Simplex = std::vector<int>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::size_t h = s.size();
        for (int v : s) h = h * 1000003u ^ static_cast<std::size_t>(v + 1);
        return h;
    }
};

/// Sign of the permutation sorting seq, or 0 if seq has a repeated entry.
int permutation_sign(std::vector<int> seq);

/// Finite abstract simplicial complex. Vertex ord = position in labels().
/// Faces are stored per dimension in lexicographic order, the empty simplex included.
class SimplicialComplex {
public:
    /// The complex {∅}.
    SimplicialComplex();

    static SimplicialComplex from_facets(const std::vector<std::string>& vertex_order,
                                         const std::vector<std::vector<std::string>>& facets);
    /// Downward closure of the given simplices (ords into labels). Every label becomes a vertex.
    static SimplicialComplex from_simplices(std::vector<std::string> labels, const std::vector<Simplex>& simplices);

    int dim() const { return static_cast<int>(faces_.size()) - 2; }
    int num_vertices() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    /// -1 if absent.
    int vertex_index(std::string_view label) const;

    /// Faces of dimension d (d = -1 gives {∅}); empty outside [-1, dim].
    const std::vector<Simplex>& faces(int d) const;
    const std::vector<Simplex>& facets() const { return facets_; }
    /// Number of nonempty faces.
    std::size_t num_faces() const { return static_cast<std::size_t>(offsets_.back()) - 1; }

    /// Index within faces(dim s), or -1.
    int index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s) >= 0; }
    /// Global id: dimensions ascending from -1, lexicographic within a dimension. -1 if absent.
    int face_id(const Simplex& s) const;
    int total_ids() const { return offsets_.back(); }
    int id_offset(int d) const { return offsets_[static_cast<std::size_t>(d + 1)]; }
    const Simplex& face_by_id(int id) const;

    /// Sorted simplex from labels; throws Error(InvalidInput) on unknown or repeated labels.
    Simplex simplex_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(const Simplex& s) const;
    std::string to_string(const Simplex& s) const;
    std::string to_string() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.labels_ == b.labels_ && a.faces_ == b.faces_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> label_index_;
    std::vector<std::vector<Simplex>> faces_;  // faces_[d + 1]
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
    std::vector<int> offsets_;
    std::vector<Simplex> facets_;
};

/// Subcomplex of K spanned by the closure of the given K-simplices, on the vertices it uses.
SimplicialComplex subcomplex(const SimplicialComplex& k, const std::vector<Simplex>& simplices);
/// True if every face of L (matched by label) is a face of K.
bool is_subcomplex_of(const SimplicialComplex& l, const SimplicialComplex& k);
/// K-face corresponding to an L-face by label.
Simplex translate(const SimplicialComplex& from, const Simplex& s, const SimplicialComplex& to);

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);
SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma);
SimplicialComplex skeleton(const SimplicialComplex& k, int n);

/// Smallest unused label of the form "w<k>".
std::string fresh_label(const SimplicialComplex& k);
SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Simplex& sigma, const std::string& new_label);

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
SimplicialComplex disjoint_union(const SimplicialComplex& k, const SimplicialComplex& l);

struct GlueResult {
    SimplicialComplex complex;
    SimplicialComplex intersection;  // K ∩ L inside the result
};
/// Identify vertices of L with vertices of K (L label -> K label).
GlueResult glue(const SimplicialComplex& k, const SimplicialComplex& l,
                const std::map<std::string, std::string>& identification);
/// Join with n isolated points: cone for n = 1, suspension for n = 2.
SimplicialComplex cone_points(const SimplicialComplex& k, int n);
/// Staircase triangulation of |K1| x |K2|; vertex "(a,b)" ordered lexicographically.
SimplicialComplex cartesian_product(const SimplicialComplex& k1, const SimplicialComplex& k2);
std::string product_label(const std::string& a, const std::string& b);

long euler_characteristic(const SimplicialComplex& k);

namespace shapes {
SimplicialComplex point();
SimplicialComplex simplex(int n);           // Δ^n on "0".."n"
SimplicialComplex simplex_boundary(int n);  // ∂Δ^n, an (n-1)-sphere
SimplicialComplex path(int n);              // I_n: n edges
SimplicialComplex cycle(int n);
/// Two copies of K glued at one vertex (the first vertex of each).
SimplicialComplex wedge(const SimplicialComplex& k, const SimplicialComplex& l);
/// Square torus triangulated as in the standard 3x3 grid (9 vertices).
SimplicialComplex torus();
}  // namespace shapes

}  // namespace hml
