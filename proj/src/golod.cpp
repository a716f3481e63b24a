#include "sring/golod.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <unordered_map>

#include "sring/constructions.hpp"
#include "sring/error.hpp"

namespace sring {

namespace {

template <class Scalar>
Scalar to_scalar(const BigInt& x) {
    if constexpr (std::is_same_v<Scalar, Fraction>) {
        if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
            throw ArithmeticOverflow();
        return Fraction(static_cast<std::int64_t>(x));
    } else {
        return Scalar(x);
    }
}

template <class Scalar>
BigRational to_big(const Scalar& x) {
    if constexpr (std::is_same_v<Scalar, Fraction>)
        return BigRational(x.num()) / BigRational(x.den());
    else
        return x;
}

template <class Key, class Scalar>
SparseVec<Key, Scalar> convert(const SparseVec<Mask, BigInt>& v, Key offset = 0) {
    SparseVec<Key, Scalar> out;
    out.reserve(v.size());
    for (const auto& [k, x] : v) out.emplace_back(static_cast<Key>(k) + offset, to_scalar<Scalar>(x));
    return out;
}

// Product cochains of every basis pair, in (s, t) order.
std::vector<SparseVec<Mask, BigInt>> all_products(const HochsterProducts& hp, const CohomologyBasis& a,
                                                  const CohomologyBasis& b) {
    std::vector<SparseVec<Mask, BigInt>> out;
    for (const auto& x : a.representatives)
        for (const auto& y : b.representatives) out.push_back(hp.cochain_product(x, y));
    return out;
}

}  // namespace

HochsterProducts::HochsterProducts(const SimplicialComplex& K) : engine_(K) {
    if (K.num_vertices() >= kMaxGroundSize)
        throw BoundExceeded("product engine needs fewer than 64 vertices");
}

int HochsterProducts::shuffle_sign(Mask L, Mask M) {
    int inversions = 0;
    for (Mask rest = L; rest; rest &= rest - 1) {
        const Mask below = (rest & (~rest + 1)) - 1;
        inversions += popcount(M & below);
    }
    return inversions % 2 == 0 ? 1 : -1;
}

SparseVec<Mask, BigInt> HochsterProducts::cochain_product(const SparseVec<Mask, BigInt>& a,
                                                          const SparseVec<Mask, BigInt>& b) const {
    const auto& K = engine_.complex();
    std::map<Mask, BigInt> acc;
    for (const auto& [L, x] : a)
        for (const auto& [M, y] : b) {
            const Mask face = L | M;
            if (!K.is_face_mask(face)) continue;
            BigInt c = x * y;
            if (shuffle_sign(L, M) < 0) c = -c;
            acc[face] += c;
        }
    SparseVec<Mask, BigInt> out;
    for (auto& [k, v] : acc)
        if (v != 0) out.emplace_back(k, std::move(v));
    return out;
}

std::shared_ptr<const CohomologyBasis> HochsterProducts::basis(Mask J, int p) const {
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find({J, p});
        if (it != cache_.end()) return it->second;
    }
    auto b = std::make_shared<const CohomologyBasis>(engine_.cohomology_basis(J, p));
    std::lock_guard lock(mutex_);
    return cache_.emplace(std::make_pair(J, p), std::move(b)).first->second;
}

std::optional<std::pair<std::size_t, std::size_t>> HochsterProducts::first_nonzero(
    const ProductQuery& query) const {
    const auto a = basis(query.I, query.p);
    const auto b = basis(query.J, query.q);
    if (a->rank() == 0 || b->rank() == 0) return std::nullopt;
    const auto target = basis(query.I | query.J, query.p + query.q + 1);
    if (target->rank() == 0) return std::nullopt;
    return with_exact_rationals([&]<class Scalar>() -> std::optional<std::pair<std::size_t, std::size_t>> {
        EchelonBasis<Mask, Scalar> boundaries;
        for (const auto& c : target->coboundaries) boundaries.insert(convert<Mask, Scalar>(c));
        for (std::size_t s = 0; s < a->rank(); ++s)
            for (std::size_t t = 0; t < b->rank(); ++t) {
                auto v = convert<Mask, Scalar>(cochain_product(a->representatives[s], b->representatives[t]));
                boundaries.reduce(v);
                if (!v.empty()) return std::make_pair(s, t);
            }
        return std::nullopt;
    });
}

ProductBlock HochsterProducts::block(const ProductQuery& query) const {
    const auto a = basis(query.I, query.p);
    const auto b = basis(query.J, query.q);
    const auto target = basis(query.I | query.J, query.p + query.q + 1);
    ProductBlock out;
    out.p = query.p;
    out.q = query.q;
    out.source_left = a->rank();
    out.source_right = b->rank();
    out.target_dim = target->rank();
    const auto products = all_products(*this, *a, *b);
    const std::size_t n = target->rank();

    // Face keys are offset past the tag keys 0..n-1 of the target
    // representatives, so reducing a cocycle leaves minus its coordinates on
    // the tags.
    const auto [images, rank] = with_exact_rationals([&]<class Scalar>() {
        using Vec = SparseVec<Mask, Scalar>;
        EchelonBasis<Mask, Scalar> span;
        for (const auto& c : target->coboundaries) span.insert(convert<Mask, Scalar>(c, n));
        for (std::size_t k = 0; k < n; ++k) {
            Vec v = convert<Mask, Scalar>(target->representatives[k], n);
            v.insert(v.begin(), {static_cast<Mask>(k), Scalar(1)});
            span.insert(std::move(v));
        }
        EchelonBasis<Mask, Scalar> image_span;
        std::vector<std::vector<BigRational>> coords;
        for (const auto& prod : products) {
            Vec v = convert<Mask, Scalar>(prod, n);
            span.reduce(v);
            std::vector<BigRational> c(n);
            for (const auto& [key, x] : v) {
                if (key >= n) throw std::logic_error("product is not a cocycle");
                c[key] = -to_big(x);
            }
            image_span.insert(std::move(v));
            coords.push_back(std::move(c));
        }
        return std::make_pair(std::move(coords), image_span.rank());
    });
    out.rank = rank;
    out.images.assign(a->rank(), {});
    for (std::size_t s = 0; s < a->rank(); ++s)
        for (std::size_t t = 0; t < b->rank(); ++t) out.images[s].push_back(images[s * b->rank() + t]);
    return out;
}

std::vector<ProductBlock> cup_product_map(const SimplicialComplex& K, const Face& I, const Face& J) {
    const Mask mI = K.to_mask(I), mJ = K.to_mask(J);
    if (mI & mJ) throw InvalidInput("cup_product_map: I and J overlap");
    const HochsterProducts hp(K);
    const SubcomplexHomology engine(K);
    const auto bi = engine.rational_betti(mI);
    const auto bj = engine.rational_betti(mJ);
    std::vector<ProductBlock> out;
    for (std::size_t x = 0; x < bi.size(); ++x)
        for (std::size_t y = 0; y < bj.size(); ++y) {
            if (bi[x] == 0 || bj[y] == 0) continue;
            out.push_back(hp.block({mI, mJ, static_cast<int>(x) - 1, static_cast<int>(y) - 1}));
        }
    return out;
}

std::string verdict_name(GolodVerdict v) {
    switch (v) {
        case GolodVerdict::RingGolod: return "ring-golod";
        case GolodVerdict::RingNonGolod: return "ring-non-golod";
        case GolodVerdict::MinimallyNonGolod: return "minimally-non-golod(ring-level)";
        case GolodVerdict::NotMinimallyNonGolod: return "not-minimally-non-golod(ring-level)";
    }
    return "";
}

std::optional<std::vector<Label>> chordal_prefilter(const SimplicialComplex& K) {
    return one_skeleton_chordal(K).induced_cycle;
}

namespace {

GolodWitness make_witness(const HochsterProducts& hp, const ProductQuery& q, std::size_t s, std::size_t t) {
    const auto& K = hp.complex();
    GolodWitness w;
    w.I = K.to_face(q.I);
    w.J = K.to_face(q.J);
    w.p = q.p;
    w.q = q.q;
    w.left_class = s;
    w.right_class = t;
    w.product = hp.block(q).images[s][t];
    return w;
}

// Every query whose target group is nonzero, grouped by target summand.
// I < J numerically: products are graded commutative.
struct Target {
    Mask T;
    int degree;
};

std::vector<Target> product_targets(const std::vector<HochsterSummand>& summands) {
    std::vector<Target> out;
    for (const auto& s : summands) {
        if (popcount(s.J) < 2) continue;
        for (const auto& [deg, rank] : s.ranks)
            if (deg >= 1) out.push_back({s.J, deg});
    }
    return out;
}

template <class Visit>
bool for_each_query(const Target& target, const std::unordered_map<Mask, const HochsterSummand*>& index,
                    Visit&& visit) {
    for (Mask I = (target.T - 1) & target.T; I != 0; I = (I - 1) & target.T) {
        const Mask J = target.T & ~I;
        if (I > J) continue;
        auto a = index.find(I), b = index.find(J);
        if (a == index.end() || b == index.end()) continue;
        for (const auto& [p, rp] : a->second->ranks) {
            const int q = target.degree - 1 - p;
            if (!b->second->ranks.contains(q)) continue;
            if (visit(ProductQuery{I, J, p, q})) return true;
        }
    }
    return false;
}

struct ScanResult {
    std::optional<GolodWitness> witness;
    std::uint64_t queries = 0;
};

// Scans product queries (optionally only those whose target misses part of
// the ground set) and returns the first nonzero product in target order.
ScanResult scan_products(const SimplicialComplex& K, const HochsterProducts& hp,
                         const SubsetScanOptions& options, bool below_top_only) {
    const auto summands = nontrivial_summands(K, options);
    std::unordered_map<Mask, const HochsterSummand*> index;
    for (const auto& s : summands) index.emplace(s.J, &s);
    auto targets = product_targets(summands);
    if (below_top_only)
        std::erase_if(targets, [&](const Target& t) { return t.T == K.full_mask(); });

    constexpr std::size_t kChunks = 64;
    std::vector<std::optional<std::tuple<ProductQuery, std::size_t, std::size_t>>> found(kChunks);
    std::vector<std::uint64_t> counts(kChunks, 0);
    std::atomic<std::size_t> best{kChunks};
    for_each_chunk(
        targets.size(), options.threads,
        [&](std::uint64_t begin, std::uint64_t end, std::size_t chunk) {
            for (std::uint64_t x = begin; x < end; ++x) {
                if (chunk > best.load()) return;
                const bool hit = for_each_query(targets[x], index, [&](const ProductQuery& q) {
                    ++counts[chunk];
                    if (auto st = hp.first_nonzero(q)) {
                        found[chunk] = std::make_tuple(q, st->first, st->second);
                        return true;
                    }
                    return false;
                });
                if (hit) {
                    std::size_t cur = best.load();
                    while (chunk < cur && !best.compare_exchange_weak(cur, chunk)) {
                    }
                    return;
                }
            }
        },
        kChunks);

    ScanResult result;
    for (auto c : counts) result.queries += c;
    for (const auto& f : found)
        if (f) {
            const auto& [q, s, t] = *f;
            result.witness = make_witness(hp, q, s, t);
            break;
        }
    return result;
}

}  // namespace

GolodReport is_ring_golod(const SimplicialComplex& K, const GolodOptions& options) {
    check_vertex_bound(K, options.scan);
    const HochsterProducts hp(K);
    GolodReport report;
    report.prefilter.enabled = options.prefilter;
    if (options.prefilter) {
        report.prefilter.induced_cycle = chordal_prefilter(K);
        if (const auto& cycle = report.prefilter.induced_cycle) {
            // two non-adjacent cycle vertices against the rest of the cycle
            Face I{(*cycle)[0], (*cycle)[2]};
            std::sort(I.begin(), I.end());
            Face J;
            for (std::size_t x = 0; x < cycle->size(); ++x)
                if (x != 0 && x != 2) J.push_back((*cycle)[x]);
            std::sort(J.begin(), J.end());
            ProductQuery q{K.to_mask(I), K.to_mask(J), 0, 0};
            if (q.I > q.J) std::swap(q.I, q.J);
            ++report.queries;
            if (auto st = hp.first_nonzero(q)) {
                report.verdict = GolodVerdict::RingNonGolod;
                report.witness = make_witness(hp, q, st->first, st->second);
                report.prefilter.decided = true;
                return report;
            }
        }
    }
    auto scan = scan_products(K, hp, options.scan, false);
    report.queries += scan.queries;
    report.witness = std::move(scan.witness);
    report.verdict = report.witness ? GolodVerdict::RingNonGolod : GolodVerdict::RingGolod;
    return report;
}

GolodReport is_minimally_non_golod(const SimplicialComplex& K, const GolodOptions& options) {
    GolodReport report = is_ring_golod(K, options);
    if (const auto n = polytope_dimension(K)) report.neighbourly = {*n, neighbourly_degree_argument(K, *n)};
    if (report.verdict == GolodVerdict::RingGolod) {
        report.verdict = GolodVerdict::NotMinimallyNonGolod;
        return report;
    }
    for (Label v : K.ground()) {
        const auto deletion = is_ring_golod(delete_vertex(K, v), options);
        report.queries += deletion.queries;
        if (deletion.verdict != GolodVerdict::RingGolod) {
            report.failing_vertices.push_back(v);
            report.deletion_witnesses.emplace(v, *deletion.witness);
        }
    }
    report.verdict = report.failing_vertices.empty() ? GolodVerdict::MinimallyNonGolod
                                                     : GolodVerdict::NotMinimallyNonGolod;
    return report;
}

bool neighbourly_degree_argument(const SimplicialComplex& K, int n) {
    const int h = n / 2;
    const int m = static_cast<int>(K.num_vertices());
    if (h <= 0) return true;
    if (h > m) return false;
    // walk all h-subsets of positions in colex order (Gosper's hack)
    Mask s = (Mask{1} << h) - 1;
    const Mask limit = Mask{1} << m;
    while (s < limit) {
        if (!K.is_face_mask(s)) return false;
        const Mask c = s & (~s + 1);
        const Mask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return true;
}

std::optional<GolodWitness> non_top_product(const SimplicialComplex& K, const SubsetScanOptions& options) {
    check_vertex_bound(K, options);
    const HochsterProducts hp(K);
    return scan_products(K, hp, options, true).witness;
}

nlohmann::json witness_to_json(const GolodWitness& w) {
    nlohmann::json j;
    j["I"] = w.I;
    j["J"] = w.J;
    j["p"] = w.p;
    j["q"] = w.q;
    j["classes"] = {w.left_class, w.right_class};
    j["product"] = nlohmann::json::array();
    for (const auto& x : w.product) j["product"].push_back(x.str());
    return j;
}

nlohmann::json golod_to_json(const GolodReport& report) {
    nlohmann::json j;
    j["verdict"] = verdict_name(report.verdict);
    j["ring_level"] = true;
    j["witness"] = report.witness ? witness_to_json(*report.witness) : nlohmann::json(nullptr);
    nlohmann::json pre;
    pre["enabled"] = report.prefilter.enabled;
    pre["induced_cycle"] = report.prefilter.induced_cycle ? nlohmann::json(*report.prefilter.induced_cycle)
                                                          : nlohmann::json(nullptr);
    pre["decided"] = report.prefilter.decided;
    j["prefilter"] = pre;
    if (report.verdict == GolodVerdict::MinimallyNonGolod ||
        report.verdict == GolodVerdict::NotMinimallyNonGolod) {
        j["failing_vertices"] = report.failing_vertices;
        nlohmann::json dw = nlohmann::json::object();
        for (const auto& [v, w] : report.deletion_witnesses) dw[std::to_string(v)] = witness_to_json(w);
        j["deletion_witnesses"] = dw;
        if (report.neighbourly)
            j["neighbourly"] = {{"n", report.neighbourly->n}, {"holds", report.neighbourly->holds}};
    }
    j["caveat"] = GolodReport::caveat;
    return j;
}

}  // namespace sring
