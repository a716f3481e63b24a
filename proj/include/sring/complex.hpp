#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

namespace sring {

/// 1-based vertex label. Labels survive deletion and restriction, so a
/// complex's ground set need not be {1..m}.
using Label = std::uint32_t;

/// Strictly increasing label sequence.
using Face = std::vector<Label>;

/// Subset of a complex's ground set, bit t standing for the t-th smallest
/// label.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGroundSize = 64;

inline int popcount(Mask x) noexcept { return __builtin_popcountll(x); }

/// Lexicographic order of the sorted position sequences of two subsets of
/// equal size.
inline bool lex_less_same_size(Mask a, Mask b) noexcept {
    const Mask diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

/// Finite abstract simplicial complex on a labeled ground set, stored by its
/// maximal faces. Immutable once built.
///
/// The facet list is always a normalized antichain sorted lexicographically.
/// A complex with no vertices in any face has the single facet {} (the empty
/// simplex), so every complex contains the empty face. Ground-set members
/// that lie in no facet are ghost vertices.
class SimplicialComplex {
public:
    SimplicialComplex();
    SimplicialComplex(std::vector<Label> ground, std::vector<Face> facets,
                      nlohmann::json meta = nullptr);

    /// Complex on the ground set {1..m}.
    static SimplicialComplex on_range(std::size_t m, std::vector<Face> facets,
                                      nlohmann::json meta = nullptr);

    const std::vector<Label>& ground() const noexcept { return ground_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    const std::vector<Mask>& facet_masks() const noexcept { return facet_masks_; }
    const nlohmann::json& meta() const noexcept { return meta_; }

    std::size_t num_vertices() const noexcept { return ground_.size(); }
    Mask full_mask() const noexcept;

    /// -1 for the complex {∅}.
    int dimension() const noexcept;
    bool is_pure() const noexcept;
    bool is_face(std::span<const Label> face) const;
    bool is_face_mask(Mask face) const noexcept;
    bool has_vertex(Label v) const noexcept;
    std::vector<Label> ghost_vertices() const;

    std::size_t position(Label v) const;
    Mask to_mask(std::span<const Label> labels) const;
    Face to_face(Mask mask) const;

    SimplicialComplex with_meta(nlohmann::json meta) const;

    /// Ground sets and facets agree; metadata is ignored.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.ground_ == b.ground_ && a.facets_ == b.facets_;
    }

private:
    std::vector<Label> ground_;
    std::vector<Face> facets_;
    std::vector<Mask> facet_masks_;
    nlohmann::json meta_;
};

/// Inclusion-maximal members of `masks`, sorted by size descending then
/// lexicographically. An empty input yields {0}.
std::vector<Mask> normalize_antichain(std::vector<Mask> masks);

/// All faces of K, grouped by dimension: element p+1 holds the p-faces in
/// lexicographic order. Element 0 is {∅}.
std::vector<std::vector<Mask>> enumerate_faces(const SimplicialComplex& K);

}  // namespace sring
