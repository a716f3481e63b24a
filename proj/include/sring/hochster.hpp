#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sring/betti_table.hpp"
#include "sring/complex.hpp"
#include "sring/homology.hpp"

namespace sring {

/// Settings shared by every engine that walks all 2^m full subcomplexes.
struct SubsetScanOptions {
    unsigned threads = 1;
    /// Largest ground set accepted; raise explicitly to go beyond.
    std::size_t max_vertices = 24;
};

/// One full subcomplex with nonzero reduced cohomology.
struct HochsterSummand {
    Mask J = 0;
    Face vertices;
    std::map<int, std::uint32_t> ranks;  // degree -> dim H̃^deg(K_J), nonzero only
};

/// β^{-i,2j}(k[K]) = Σ_{|J|=j} dim H̃^{j-i-1}(K_J), over all J ⊆ ground(K)
/// including J = ∅. With integer coefficients the free ranks are used and
/// torsion_detected records whether any K_J had torsion.
BigradedBettiTable bigraded_betti(const SimplicialComplex& K,
                                  Coefficients coeff = Coefficients::Rational,
                                  const SubsetScanOptions& options = {});

/// Every nonempty J with some nonzero reduced cohomology, ordered by size
/// then lexicographically.
std::vector<HochsterSummand> nontrivial_summands(const SimplicialComplex& K,
                                                 const SubsetScanOptions& options = {});

/// First full subcomplex (in mask order) whose integral homology has
/// torsion, if any.
std::optional<std::pair<Face, ReducedHomologySummary>> hochster_torsion_witness(
    const SimplicialComplex& K, const SubsetScanOptions& options = {});

bool hochster_torsion_free(const SimplicialComplex& K, const SubsetScanOptions& options = {});

/// Polytope dimension recorded in a complex's construction metadata.
std::optional<int> polytope_dimension(const SimplicialComplex& K);

/// Splits [0, total) into contiguous chunks processed by `threads` workers;
/// `body(begin, end, chunk)` is called once per chunk. Chunk boundaries do
/// not depend on the thread count.
void for_each_chunk(std::uint64_t total, unsigned threads,
                    const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& body,
                    std::size_t chunk_count);

void check_vertex_bound(const SimplicialComplex& K, const SubsetScanOptions& options);

}  // namespace sring
