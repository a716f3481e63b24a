#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sring/complex.hpp"
#include "sring/hochster.hpp"
#include "sring/homology.hpp"
#include "sring/linalg.hpp"

namespace sring {

/// Product H̃^p(K_I) ⊗ H̃^q(K_J) -> H̃^{p+q+1}(K_{I∪J}); I and J are masks
/// over K's ground positions.
struct ProductQuery {
    Mask I = 0;
    Mask J = 0;
    int p = 0;
    int q = 0;
};

/// The product on chosen cohomology bases. images[s][t] holds the
/// coordinates of α_s · β_t in the basis of the target group.
struct ProductBlock {
    int p = 0;
    int q = 0;
    std::size_t source_left = 0;
    std::size_t source_right = 0;
    std::size_t target_dim = 0;
    std::vector<std::vector<std::vector<BigRational>>> images;
    std::size_t rank = 0;  // dimension of the span of all images
};

/// Cochain-level product on the Hochster ring of one complex. Cohomology
/// bases are computed on demand and cached; safe to query concurrently.
class HochsterProducts {
public:
    explicit HochsterProducts(const SimplicialComplex& K);

    const SimplicialComplex& complex() const noexcept { return engine_.complex(); }

    /// Sign of the permutation sorting the concatenation L, M.
    static int shuffle_sign(Mask L, Mask M);

    /// ε(L,M)·(L∪M) summed over the two cochains, dropping non-faces.
    SparseVec<Mask, BigInt> cochain_product(const SparseVec<Mask, BigInt>& a,
                                            const SparseVec<Mask, BigInt>& b) const;

    ProductBlock block(const ProductQuery& query) const;

    /// First basis pair (s, t) whose product is nonzero in cohomology.
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero(const ProductQuery& query) const;

    std::shared_ptr<const CohomologyBasis> basis(Mask J, int p) const;

private:
    SubcomplexHomology engine_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Mask, int>, std::shared_ptr<const CohomologyBasis>> cache_;
};

/// All products from K_I ⊗ K_J, one block per (p, q) where both factors are
/// nonzero. I and J are vertex labels and must be disjoint.
std::vector<ProductBlock> cup_product_map(const SimplicialComplex& K, const Face& I, const Face& J);

struct GolodWitness {
    Face I, J;
    int p = 0;
    int q = 0;
    std::size_t left_class = 0;
    std::size_t right_class = 0;
    /// Coordinates of the product in the basis of H̃^{p+q+1}(K_{I∪J}).
    std::vector<BigRational> product;
};

enum class GolodVerdict {
    RingGolod,
    RingNonGolod,
    MinimallyNonGolod,
    NotMinimallyNonGolod,
};

std::string verdict_name(GolodVerdict v);

struct PrefilterInfo {
    bool enabled = false;
    std::optional<std::vector<Label>> induced_cycle;
    bool decided = false;  // the verdict came from the cycle's product
};

struct NeighbourlyCertificate {
    int n = 0;
    bool holds = false;
};

struct GolodReport {
    GolodVerdict verdict = GolodVerdict::RingGolod;
    std::optional<GolodWitness> witness;
    PrefilterInfo prefilter;
    std::uint64_t queries = 0;

    // minimal non-Golodness only
    std::vector<Label> failing_vertices;
    std::map<Label, GolodWitness> deletion_witnesses;
    std::optional<NeighbourlyCertificate> neighbourly;

    static constexpr const char* caveat = "massey-untested";
};

struct GolodOptions {
    SubsetScanOptions scan;
    bool prefilter = true;
};

/// Induced cycle of length >= 4 in the 1-skeleton, if any.
std::optional<std::vector<Label>> chordal_prefilter(const SimplicialComplex& K);

/// Ring-level Golodness: every product of positive-degree classes of the
/// Hochster ring vanishes.
GolodReport is_ring_golod(const SimplicialComplex& K, const GolodOptions& options = {});

/// Ring-level minimal non-Golodness: K is not ring-Golod and every K - v is.
/// All failing vertices are listed.
GolodReport is_minimally_non_golod(const SimplicialComplex& K, const GolodOptions& options = {});

/// True iff every ⌊n/2⌋-subset of the ground set is a face.
bool neighbourly_degree_argument(const SimplicialComplex& K, int n);

/// A nonzero product of positive-degree classes whose supports do not cover
/// the ground set, i.e. one landing below the top degree of the
/// moment-angle complex.
std::optional<GolodWitness> non_top_product(const SimplicialComplex& K,
                                            const SubsetScanOptions& options = {});

nlohmann::json witness_to_json(const GolodWitness& w);
nlohmann::json golod_to_json(const GolodReport& report);

}  // namespace sring
