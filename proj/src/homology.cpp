#include "sring/homology.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace sring {

struct SubcomplexHomology::Lattice {
    std::vector<Mask> mask;                 // global face id -> mask
    std::vector<std::uint32_t> dim_begin;   // ids of dim p: [dim_begin[p+1], dim_begin[p+2])
    std::vector<std::uint32_t> bnd_begin;   // CSR boundary, sorted by id
    std::vector<std::uint32_t> bnd_ids;
    std::vector<std::int8_t> bnd_sign;
    std::vector<std::uint32_t> cob_begin;   // CSR coboundary, sorted by id
    std::vector<std::uint32_t> cob_ids;
    std::vector<std::int8_t> cob_sign;

    std::size_t size() const { return mask.size(); }
};

namespace {

using Id = std::uint32_t;

// Ids of the p-faces of K_J, per dimension (index p+1), ascending.
std::vector<std::vector<Id>> select_faces(const SubcomplexHomology::Lattice& L, int top, Mask J) {
    std::vector<std::vector<Id>> sel(static_cast<std::size_t>(top + 2));
    for (int p = -1; p <= top; ++p) {
        auto& out = sel[static_cast<std::size_t>(p + 1)];
        for (Id id = L.dim_begin[static_cast<std::size_t>(p + 1)];
             id < L.dim_begin[static_cast<std::size_t>(p + 2)]; ++id)
            if ((L.mask[id] & ~J) == 0) out.push_back(id);
        if (out.empty()) {
            sel.resize(static_cast<std::size_t>(p + 1));
            break;
        }
    }
    return sel;
}

template <class Scalar>
SparseVec<Id, Scalar> boundary_column(const SubcomplexHomology::Lattice& L, Id id) {
    SparseVec<Id, Scalar> v;
    v.reserve(L.bnd_begin[id + 1] - L.bnd_begin[id]);
    for (auto e = L.bnd_begin[id]; e < L.bnd_begin[id + 1]; ++e)
        v.emplace_back(L.bnd_ids[e], Scalar(L.bnd_sign[e]));
    return v;
}

template <class Scalar>
SparseVec<Id, Scalar> coboundary_column(const SubcomplexHomology::Lattice& L, Id id, Mask J) {
    SparseVec<Id, Scalar> v;
    for (auto e = L.cob_begin[id]; e < L.cob_begin[id + 1]; ++e)
        if ((L.mask[L.cob_ids[e]] & ~J) == 0) v.emplace_back(L.cob_ids[e], Scalar(L.cob_sign[e]));
    return v;
}

// Ranks of ∂_p on K_J, p = 0..top(J), by column reduction from the top
// dimension down. A p-face that is the pivot of a reduced (p+1)-column has a
// column that reduces to zero, so it is skipped.
template <class Scalar>
std::vector<std::uint32_t> boundary_ranks(const SubcomplexHomology::Lattice& L,
                                          const std::vector<std::vector<Id>>& sel) {
    const int topJ = static_cast<int>(sel.size()) - 2;
    std::vector<std::uint32_t> rank(static_cast<std::size_t>(std::max(topJ + 1, 0)), 0);
    std::vector<std::int32_t> pivot_col(L.size(), -1);
    std::vector<std::uint8_t> cleared(L.size(), 0);
    std::vector<SparseVec<Id, Scalar>> reduced;
    SparseVec<Id, Scalar> scratch;

    for (int p = topJ; p >= 0; --p) {
        for (Id c : sel[static_cast<std::size_t>(p + 1)]) {
            if (cleared[c]) continue;
            auto v = boundary_column<Scalar>(L, c);
            while (!v.empty()) {
                const std::int32_t pc = pivot_col[v.back().first];
                if (pc < 0) break;
                const auto& col = reduced[static_cast<std::size_t>(pc)];
                const Scalar coeff = v.back().second / col.back().second;
                sparse_axpy(v, coeff, col, scratch);
            }
            if (v.empty()) continue;
            const Id low = v.back().first;
            pivot_col[low] = static_cast<std::int32_t>(reduced.size());
            cleared[low] = 1;
            reduced.push_back(std::move(v));
            ++rank[static_cast<std::size_t>(p)];
        }
    }
    return rank;
}

struct IntegerRank {
    std::uint64_t rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1
};

IntegerRank smith_route(const SubcomplexHomology::Lattice& L, const std::vector<Id>& cols,
                        const std::vector<Id>& rows) {
    std::unordered_map<Id, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    IntMatrix M(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Id c = cols[j];
        for (auto e = L.bnd_begin[c]; e < L.bnd_begin[c + 1]; ++e)
            M.at(row_index.at(L.bnd_ids[e]), j) = L.bnd_sign[e];
    }
    IntegerRank out;
    for (auto& d : smith_invariant_factors(std::move(M))) {
        ++out.rank;
        if (d > 1) out.torsion.push_back(d);
    }
    return out;
}

// Integer column reduction. If every pivot ends up a unit, the reduced
// matrix has a unimodular maximal minor, so all invariant factors are 1.
// Otherwise fall back to the Smith normal form.
IntegerRank integer_rank(const SubcomplexHomology::Lattice& L, const std::vector<Id>& cols,
                         const std::vector<Id>& rows) {
    try {
        std::unordered_map<Id, std::size_t> pivot_of;
        std::vector<SparseVec<Id, std::int64_t>> reduced;
        SparseVec<Id, std::int64_t> scratch;
        for (Id c : cols) {
            auto v = boundary_column<std::int64_t>(L, c);
            while (!v.empty()) {
                auto it = pivot_of.find(v.back().first);
                if (it == pivot_of.end()) break;
                const auto& col = reduced[it->second];
                const std::int64_t a = col.back().second;
                const std::int64_t b = v.back().second;
                if (b % a != 0) return smith_route(L, cols, rows);
                // sparse_axpy on int64 does unchecked multiply; do it by hand.
                scratch.clear();
                const std::int64_t q = b / a;
                std::size_t i = 0, j = 0;
                while (i < v.size() || j < col.size()) {
                    if (j == col.size() || (i < v.size() && v[i].first < col[j].first)) {
                        scratch.push_back(v[i++]);
                    } else if (i == v.size() || col[j].first < v[i].first) {
                        scratch.emplace_back(col[j].first, checked_sub(0, checked_mul(q, col[j].second)));
                        ++j;
                    } else {
                        const std::int64_t s = checked_sub(v[i].second, checked_mul(q, col[j].second));
                        if (s != 0) scratch.emplace_back(v[i].first, s);
                        ++i;
                        ++j;
                    }
                }
                v.swap(scratch);
            }
            if (v.empty()) continue;
            if (v.back().second != 1 && v.back().second != -1) return smith_route(L, cols, rows);
            pivot_of.emplace(v.back().first, reduced.size());
            reduced.push_back(std::move(v));
        }
        return IntegerRank{reduced.size(), {}};
    } catch (const ArithmeticOverflow&) {
        return smith_route(L, cols, rows);
    }
}

BigRational to_big(const Fraction& f) { return BigRational(BigInt(f.num()), BigInt(f.den())); }
BigRational to_big(const BigRational& q) { return q; }

template <class Scalar>
SparseVec<Mask, BigInt> integerize(const SparseVec<Id, Scalar>& v,
                                   const SubcomplexHomology::Lattice& L) {
    BigInt lcm = 1, g = 0;
    std::vector<BigRational> vals;
    for (const auto& [id, x] : v) {
        vals.push_back(to_big(x));
        lcm = boost::multiprecision::lcm(lcm, denominator(vals.back()));
    }
    for (auto& q : vals) {
        q *= lcm;
        g = boost::multiprecision::gcd(g, numerator(q));
    }
    SparseVec<Mask, BigInt> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.emplace_back(L.mask[v[i].first], numerator(vals[i]) / (g == 0 ? BigInt(1) : g));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

template <class Scalar>
CohomologyBasis basis_impl(const SubcomplexHomology::Lattice& L,
                           const std::vector<std::vector<Id>>& sel, Mask J, int p) {
    CohomologyBasis out;
    out.degree = p;
    const int topJ = static_cast<int>(sel.size()) - 2;
    if (p < -1 || p > topJ) return out;

    // Kernel of δ^p with the column operations recorded.
    std::vector<SparseVec<Id, Scalar>> kernel;
    {
        std::unordered_map<Id, std::size_t> pivot_of;
        std::vector<std::pair<SparseVec<Id, Scalar>, SparseVec<Id, Scalar>>> reduced;
        SparseVec<Id, Scalar> scratch;
        for (Id sigma : sel[static_cast<std::size_t>(p + 1)]) {
            auto r = coboundary_column<Scalar>(L, sigma, J);
            SparseVec<Id, Scalar> track{{sigma, Scalar(1)}};
            while (!r.empty()) {
                auto it = pivot_of.find(r.back().first);
                if (it == pivot_of.end()) break;
                const auto& [pr, pv] = reduced[it->second];
                const Scalar c = r.back().second / pr.back().second;
                sparse_axpy(r, c, pr, scratch);
                sparse_axpy(track, c, pv, scratch);
            }
            if (r.empty()) {
                kernel.push_back(std::move(track));
            } else {
                pivot_of.emplace(r.back().first, reduced.size());
                reduced.emplace_back(std::move(r), std::move(track));
            }
        }
    }

    EchelonBasis<Id, Scalar> classes;
    if (p >= 0) {
        for (Id tau : sel[static_cast<std::size_t>(p)]) {
            auto col = coboundary_column<Scalar>(L, tau, J);
            if (classes.insert(col)) out.coboundaries.push_back(integerize(col, L));
        }
    }
    for (auto& z : kernel) {
        if (classes.insert(z)) out.representatives.push_back(integerize(z, L));
    }
    return out;
}

}  // namespace

SubcomplexHomology::SubcomplexHomology(const SimplicialComplex& K)
    : K_(K), top_(K.dimension()) {
    auto L = std::make_shared<Lattice>();
    const auto layers = enumerate_faces(K);
    std::unordered_map<Mask, Id> id_of;
    L->dim_begin.push_back(0);
    for (const auto& layer : layers) {
        for (Mask m : layer) {
            id_of.emplace(m, static_cast<Id>(L->mask.size()));
            L->mask.push_back(m);
        }
        L->dim_begin.push_back(static_cast<Id>(L->mask.size()));
    }
    const std::size_t F = L->mask.size();

    std::vector<std::vector<std::pair<Id, std::int8_t>>> cob(F);
    L->bnd_begin.push_back(0);
    std::vector<std::pair<Id, std::int8_t>> entries;
    for (Id id = 0; id < F; ++id) {
        entries.clear();
        const Mask tau = L->mask[id];
        int position = 0;
        for (Mask rest = tau; rest; rest &= rest - 1, ++position) {
            const Mask sigma = tau & ~(rest & (~rest + 1));
            const auto sign = static_cast<std::int8_t>(position % 2 == 0 ? 1 : -1);
            const Id sid = id_of.at(sigma);
            entries.emplace_back(sid, sign);
            cob[sid].emplace_back(id, sign);
        }
        std::sort(entries.begin(), entries.end());
        for (auto [sid, sign] : entries) {
            L->bnd_ids.push_back(sid);
            L->bnd_sign.push_back(sign);
        }
        L->bnd_begin.push_back(static_cast<Id>(L->bnd_ids.size()));
    }
    L->cob_begin.push_back(0);
    for (Id id = 0; id < F; ++id) {
        std::sort(cob[id].begin(), cob[id].end());
        for (auto [cid, sign] : cob[id]) {
            L->cob_ids.push_back(cid);
            L->cob_sign.push_back(sign);
        }
        L->cob_begin.push_back(static_cast<Id>(L->cob_ids.size()));
    }
    lattice_ = std::move(L);
}

std::vector<std::uint32_t> SubcomplexHomology::rational_betti(Mask J) const {
    const auto sel = select_faces(*lattice_, top_, J);
    const auto rank = with_exact_rationals(
        [&]<class Scalar>() { return boundary_ranks<Scalar>(*lattice_, sel); });
    const std::size_t levels = sel.size();  // dims -1..topJ
    std::vector<std::uint32_t> betti(static_cast<std::size_t>(top_ + 2), 0);
    for (std::size_t lvl = 0; lvl < levels; ++lvl) {
        // lvl = p + 1; rank of ∂_p sits at rank[p].
        const auto n = static_cast<std::int64_t>(sel[lvl].size());
        const std::int64_t out_rank = lvl >= 1 ? rank[lvl - 1] : 0;
        const std::int64_t in_rank = lvl < rank.size() ? rank[lvl] : 0;
        betti[lvl] = static_cast<std::uint32_t>(n - out_rank - in_rank);
    }
    return betti;
}

ReducedHomologySummary SubcomplexHomology::integer_homology(Mask J) const {
    const auto sel = select_faces(*lattice_, top_, J);
    const std::size_t levels = sel.size();
    std::vector<IntegerRank> ranks(levels);  // ranks[p] for ∂_p, p = 0..topJ
    for (std::size_t lvl = 1; lvl < levels; ++lvl) ranks[lvl - 1] = integer_rank(*lattice_, sel[lvl], sel[lvl - 1]);

    ReducedHomologySummary h;
    for (int p = -1; p <= top_; ++p) h.ranks[p] = 0;
    for (std::size_t lvl = 0; lvl < levels; ++lvl) {
        const auto n = static_cast<std::int64_t>(sel[lvl].size());
        const std::int64_t out_rank = lvl >= 1 ? static_cast<std::int64_t>(ranks[lvl - 1].rank) : 0;
        const std::int64_t in_rank = lvl < levels - 1 ? static_cast<std::int64_t>(ranks[lvl].rank) : 0;
        h.ranks[static_cast<int>(lvl) - 1] = static_cast<std::uint64_t>(n - out_rank - in_rank);
        // Torsion of H̃_{p-1} comes from ∂_p; here p = lvl - 1.
        if (lvl >= 1 && !ranks[lvl - 1].torsion.empty())
            h.torsion[static_cast<int>(lvl) - 2] = ranks[lvl - 1].torsion;
    }
    return h;
}

CohomologyBasis SubcomplexHomology::cohomology_basis(Mask J, int p) const {
    const auto sel = select_faces(*lattice_, top_, J);
    return with_exact_rationals(
        [&]<class Scalar>() { return basis_impl<Scalar>(*lattice_, sel, J, p); });
}

std::vector<Mask> SubcomplexHomology::faces_in(Mask J, int p) const {
    std::vector<Mask> out;
    if (p < -1 || p > top_) return out;
    const auto& L = *lattice_;
    for (Id id = L.dim_begin[static_cast<std::size_t>(p + 1)];
         id < L.dim_begin[static_cast<std::size_t>(p + 2)]; ++id)
        if ((L.mask[id] & ~J) == 0) out.push_back(L.mask[id]);
    return out;
}

int SubcomplexHomology::subcomplex_dimension(Mask J) const {
    int dim = -1;
    for (Mask f : K_.facet_masks()) dim = std::max(dim, popcount(f & J) - 1);
    return dim;
}

std::uint64_t ReducedHomologySummary::rank(int degree) const {
    auto it = ranks.find(degree);
    return it == ranks.end() ? 0 : it->second;
}

bool ReducedHomologySummary::is_trivial() const {
    return torsion.empty() &&
           std::all_of(ranks.begin(), ranks.end(), [](const auto& kv) { return kv.second == 0; });
}

nlohmann::json homology_to_json(const ReducedHomologySummary& h) {
    nlohmann::json j;
    j["ranks"] = nlohmann::json::object();
    for (auto [p, r] : h.ranks) j["ranks"][std::to_string(p)] = r;
    j["torsion"] = nlohmann::json::object();
    for (const auto& [p, factors] : h.torsion) {
        auto& arr = j["torsion"][std::to_string(p)];
        arr = nlohmann::json::array();
        for (const auto& d : factors) arr.push_back(d.str());
    }
    return j;
}

ChainBoundaryStack boundary_matrices(const SimplicialComplex& K) {
    ChainBoundaryStack s;
    s.faces = enumerate_faces(K);
    for (std::size_t lvl = 1; lvl < s.faces.size(); ++lvl) {
        const auto& rows = s.faces[lvl - 1];
        std::unordered_map<Mask, std::uint32_t> row_of;
        for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], static_cast<std::uint32_t>(i));
        ChainBoundaryStack::Matrix M;
        M.rows = rows.size();
        for (Mask tau : s.faces[lvl]) {
            SparseVec<std::uint32_t, std::int64_t> col;
            int position = 0;
            for (Mask rest = tau; rest; rest &= rest - 1, ++position) {
                const Mask sigma = tau & ~(rest & (~rest + 1));
                col.emplace_back(row_of.at(sigma), position % 2 == 0 ? 1 : -1);
            }
            std::sort(col.begin(), col.end());
            M.cols.push_back(std::move(col));
        }
        s.boundary.push_back(std::move(M));
    }
    return s;
}

ReducedHomologySummary reduced_homology(const SimplicialComplex& K, Coefficients coeff) {
    SubcomplexHomology engine(K);
    if (coeff == Coefficients::Integer) return engine.integer_homology(K.full_mask());
    const auto betti = engine.rational_betti(K.full_mask());
    ReducedHomologySummary h;
    for (std::size_t lvl = 0; lvl < betti.size(); ++lvl) h.ranks[static_cast<int>(lvl) - 1] = betti[lvl];
    return h;
}

CohomologyBasis cohomology_basis(const SimplicialComplex& K, int p) {
    return SubcomplexHomology(K).cohomology_basis(K.full_mask(), p);
}

bool is_torsion_free(const SimplicialComplex& K) {
    return !reduced_homology(K, Coefficients::Integer).has_torsion();
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& K) {
    std::int64_t chi = 0;
    const auto layers = enumerate_faces(K);
    for (std::size_t lvl = 0; lvl < layers.size(); ++lvl) {
        const auto n = static_cast<std::int64_t>(layers[lvl].size());
        chi += (lvl % 2 == 1) ? n : -n;  // lvl = p + 1
    }
    return chi;
}

}  // namespace sring
