#pragma once

#include <cstdint>
#include <vector>

#include "sring/betti_table.hpp"
#include "sring/complex.hpp"

namespace sring {

/// Squarefree monomial generators, given by their supports (an antichain).
struct MonomialSet {
    std::size_t m = 0;  // number of variables
    std::vector<Mask> generators;
};

/// Generators of the Stanley–Reisner ideal of K.
MonomialSet stanley_reisner_generators(const SimplicialComplex& K);

/// Taylor complex of a monomial ideal after tensoring with the residue
/// field. Basis elements are generator subsets S (bit t = generator t); the
/// homological degree is |S| and the internal degree |lcm support(S)|.
struct TaylorComplexData {
    std::vector<Mask> generators;
    std::vector<Mask> lcm;  // indexed by S

    std::size_t size() const { return lcm.size(); }
    /// Terms (S \ {g_t}, ±1) that survive tensoring, i.e. those whose lcm
    /// support equals that of S. Sign (-1)^{t+1} for the t-th generator of S
    /// counted from 1.
    std::vector<std::pair<std::uint32_t, int>> differential(std::uint32_t S) const;
};

TaylorComplexData taylor_complex(const MonomialSet& gens, std::size_t max_generators = 18);

struct TaylorOptions {
    /// Ideals with more generators are rejected unless nerve_beyond_bound.
    std::size_t max_generators = 18;
    /// Multidegree strands with more generators than max_generators are
    /// computed through the nerve of the strand's non-covering subcomplex
    /// instead of by enumerating their generator subsets.
    bool nerve_beyond_bound = false;
};

struct TaylorStats {
    std::uint64_t direct_strands = 0;
    std::uint64_t nerve_strands = 0;
};

/// Bigraded Tor ranks of k[K] from the Taylor complex, aggregated from
/// squarefree multidegrees U to (i, |U|).
BigradedBettiTable taylor_betti(const SimplicialComplex& K, const TaylorOptions& options = {},
                                TaylorStats* stats = nullptr);

}  // namespace sring
