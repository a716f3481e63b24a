#include "sring/taylor.hpp"

#include <algorithm>
#include <string>

#include "sring/constructions.hpp"
#include "sring/error.hpp"
#include "sring/linalg.hpp"

namespace sring {

MonomialSet stanley_reisner_generators(const SimplicialComplex& K) {
    return {K.num_vertices(), minimal_nonface_masks(K)};
}

std::vector<std::pair<std::uint32_t, int>> TaylorComplexData::differential(std::uint32_t S) const {
    std::vector<std::pair<std::uint32_t, int>> out;
    int t = 0;
    for (std::uint32_t rest = S; rest != 0; rest &= rest - 1) {
        ++t;
        const std::uint32_t face = S & ~(rest & -rest);
        if (lcm[face] == lcm[S]) out.emplace_back(face, t % 2 == 1 ? 1 : -1);
    }
    return out;
}

namespace {

std::vector<Mask> subset_unions(const std::vector<Mask>& gens) {
    std::vector<Mask> lcm(std::size_t{1} << gens.size(), 0);
    for (std::size_t S = 1; S < lcm.size(); ++S)
        lcm[S] = lcm[S & (S - 1)] | gens[static_cast<std::size_t>(__builtin_ctzll(S))];
    return lcm;
}

// Homology ranks of a chain complex whose cells are grouped by degree;
// boundary(cell) lists (face, sign) in the degree below.
template <class Boundary>
std::vector<std::uint64_t> chain_homology(const std::vector<std::vector<Mask>>& cells,
                                          const Boundary& boundary) {
    const std::size_t levels = cells.size();
    std::vector<std::size_t> ranks(levels + 1, 0);  // ranks[i] = rank of d: level i -> i-1
    for (std::size_t i = 1; i < levels; ++i) {
        if (cells[i].empty() || cells[i - 1].empty()) continue;
        ranks[i] = with_exact_rationals([&]<class Scalar>() {
            EchelonBasis<Mask, Scalar> basis;
            for (Mask c : cells[i]) {
                SparseVec<Mask, Scalar> v;
                for (auto [face, sign] : boundary(c)) v.emplace_back(face, Scalar(sign));
                std::sort(v.begin(), v.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                basis.insert(std::move(v));
            }
            return basis.rank();
        });
    }
    std::vector<std::uint64_t> h(levels, 0);
    for (std::size_t i = 0; i < levels; ++i) h[i] = cells[i].size() - ranks[i] - ranks[i + 1];
    return h;
}

// Tor_i in multidegree U from the Taylor strand: generator subsets whose
// union is exactly U.
std::vector<std::uint64_t> direct_strand(const std::vector<Mask>& local, Mask U) {
    const auto lcm = subset_unions(local);
    std::vector<std::vector<Mask>> cells(local.size() + 1);
    for (std::size_t T = 0; T < lcm.size(); ++T)
        if (lcm[T] == U) cells[static_cast<std::size_t>(popcount(T))].push_back(T);
    return chain_homology(cells, [&](Mask T) {
        std::vector<std::pair<Mask, int>> out;
        int t = 0;
        for (Mask rest = T; rest != 0; rest &= rest - 1) {
            ++t;
            const Mask face = T & ~(rest & -rest);
            if (lcm[face] == U) out.emplace_back(face, t % 2 == 1 ? 1 : -1);
        }
        return out;
    });
}

// The non-covering subsets of the strand form a complex covered by the
// simplices {g : u not in g}, u in U; its nerve lives on U and
// Tor_i(U) = H̃_{i-2}(nerve).
std::vector<std::uint64_t> nerve_strand(const std::vector<Mask>& local, Mask U) {
    const int u = popcount(U);
    std::vector<std::vector<Mask>> cells(static_cast<std::size_t>(u) + 1);
    for (Mask T = U;; T = (T - 1) & U) {
        const bool face = std::any_of(local.begin(), local.end(), [&](Mask g) { return (g & T) == 0; });
        if (face) cells[static_cast<std::size_t>(popcount(T))].push_back(T);
        if (T == 0) break;
    }
    const auto h = chain_homology(cells, [](Mask T) {
        std::vector<std::pair<Mask, int>> out;
        int t = 0;
        for (Mask rest = T; rest != 0; rest &= rest - 1, ++t)
            out.emplace_back(T & ~(rest & -rest), t % 2 == 0 ? 1 : -1);
        return out;
    });
    // cells of size s carry H̃_{s-1}, which lands in Tor_{s+1}.
    std::vector<std::uint64_t> tor(static_cast<std::size_t>(u) + 2, 0);
    for (std::size_t s = 0; s < h.size(); ++s) tor[s + 1] = h[s];
    return tor;
}

}  // namespace

TaylorComplexData taylor_complex(const MonomialSet& gens, std::size_t max_generators) {
    if (gens.generators.size() > max_generators)
        throw BoundExceeded("Taylor complex has " + std::to_string(gens.generators.size()) +
                            " generators; the bound is " + std::to_string(max_generators));
    if (gens.generators.size() > 31) throw BoundExceeded("Taylor complex needs at most 31 generators");
    return {gens.generators, subset_unions(gens.generators)};
}

BigradedBettiTable taylor_betti(const SimplicialComplex& K, const TaylorOptions& options,
                                TaylorStats* stats) {
    const auto gens = stanley_reisner_generators(K);
    if (gens.m >= 63) throw BoundExceeded("Taylor oracle needs fewer than 63 vertices");
    if (gens.generators.size() > options.max_generators && !options.nerve_beyond_bound)
        throw BoundExceeded("Stanley-Reisner ideal has " + std::to_string(gens.generators.size()) +
                            " generators; the Taylor oracle is limited to " +
                            std::to_string(options.max_generators));

    BigradedBettiTable table;
    table.m = gens.m;
    const Mask full = gens.m == 0 ? 0 : (Mask{1} << gens.m) - 1;
    TaylorStats local_stats;
    for (Mask U = 0; U <= full; ++U) {
        std::vector<Mask> local;
        Mask covered = 0;
        for (Mask g : gens.generators)
            if ((g & ~U) == 0) {
                local.push_back(g);
                covered |= g;
            }
        const int j = popcount(U);
        if (covered != U) {
            // no generator subset has union U (U = ∅ gives Tor_0 = 1 below)
        } else if (U == 0) {
            table.add(0, 0, 1);
        } else if (local.size() <= options.max_generators) {
            ++local_stats.direct_strands;
            const auto tor = direct_strand(local, U);
            for (std::size_t i = 0; i < tor.size(); ++i) table.add(static_cast<int>(i), j, tor[i]);
        } else {
            ++local_stats.nerve_strands;
            const auto tor = nerve_strand(local, U);
            for (std::size_t i = 0; i < tor.size(); ++i) table.add(static_cast<int>(i), j, tor[i]);
        }
        if (U == full) break;
    }
    if (stats) *stats = local_stats;
    return table;
}

}  // namespace sring
