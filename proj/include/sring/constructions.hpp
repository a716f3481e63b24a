#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sring/complex.hpp"

namespace sring {

/// How build_gtp picks the facet to stack at each vertex cut.
struct FacetPolicy {
    enum class Kind { LexLeast, SeededRandom };
    Kind kind = Kind::LexLeast;
    std::uint64_t seed = 0;

    static FacetPolicy lex() { return {}; }
    static FacetPolicy random(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }
};

/// Type (k; n_1, ..., n_r) of a generalized truncation polytope
/// vc^k(Δ^{n_1} × ... × Δ^{n_r}).
struct GtpSpec {
    int k = 0;
    std::vector<int> dims;
    FacetPolicy policy;

    int r() const { return static_cast<int>(dims.size()); }
    int d() const;
    int m() const { return d() + r() + k; }
    /// Number of factors equal to Δ^1.
    int a() const;

    /// Throws InvalidInput unless dims is non-empty, non-increasing, positive
    /// and k >= 0.
    void validate() const;
};

/// ∂Δ^n on {1..n+1}.
SimplicialComplex boundary_simplex(int n);

/// Full simplex on {1..m}.
SimplicialComplex full_simplex(int m);

/// Join with K2's labels shifted past K1's largest label.
SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2);

struct StackResult {
    SimplicialComplex complex;
    Label new_vertex;
};

/// Stellar subdivision of the facet F: a new vertex (largest label + 1) is
/// coned over ∂F. Requires K pure with F a facet.
StackResult stack(const SimplicialComplex& K, const Face& F);

/// Dual boundary complex of the (k; dims) polytope: the join of the simplex
/// boundaries, stacked k times. Meta records type, k, dims, strategy, seed
/// and the stacked vertices.
SimplicialComplex build_gtp(const GtpSpec& spec);

/// Restriction of K to J; members of J that are ghosts in K stay ghosts.
SimplicialComplex full_subcomplex(const SimplicialComplex& K, const std::vector<Label>& J);
SimplicialComplex full_subcomplex_mask(const SimplicialComplex& K, Mask J);

SimplicialComplex delete_vertex(const SimplicialComplex& K, Label v);

/// Disjoint union with sigma2's vertices identified to sigma1's in sorted
/// order. K1 keeps its labels; the remaining K2 vertices are numbered after
/// K1's largest label, preserving their order.
SimplicialComplex glue(const SimplicialComplex& K1, const SimplicialComplex& K2,
                       const Face& sigma1, const Face& sigma2);

/// Generators of the Stanley–Reisner ideal, lexicographically sorted.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& K);
std::vector<Mask> minimal_nonface_masks(const SimplicialComplex& K);

/// Boundary of the cyclic polytope C(m, n) by Gale's evenness condition.
SimplicialComplex cyclic_boundary(int m, int n);

/// (f_{-1}, f_0, ..., f_dim).
std::vector<std::uint64_t> f_vector(const SimplicialComplex& K);

struct ChordalityResult {
    bool chordal = true;
    /// Induced cycle of length >= 4, starting at its smallest label and
    /// continuing towards the smaller of that vertex's two cycle neighbours.
    std::optional<std::vector<Label>> induced_cycle;
};

ChordalityResult one_skeleton_chordal(const SimplicialComplex& K);

}  // namespace sring
