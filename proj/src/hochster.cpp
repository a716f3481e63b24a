#include "sring/hochster.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "sring/error.hpp"

namespace sring {

void for_each_chunk(std::uint64_t total, unsigned threads,
                    const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& body,
                    std::size_t chunk_count) {
    if (total == 0) return;
    chunk_count = static_cast<std::size_t>(std::clamp<std::uint64_t>(chunk_count, 1, total));
    const std::uint64_t step = (total + chunk_count - 1) / chunk_count;
    chunk_count = static_cast<std::size_t>((total + step - 1) / step);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t c = next.fetch_add(1);
            if (c >= chunk_count) return;
            const std::uint64_t begin = c * step;
            const std::uint64_t end = std::min(total, begin + step);
            try {
                body(begin, end, c);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(chunk_count);
            }
        }
    };
    const unsigned n = std::max(1u, threads);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

void check_vertex_bound(const SimplicialComplex& K, const SubsetScanOptions& options) {
    if (K.num_vertices() > options.max_vertices)
        throw BoundExceeded("complex has " + std::to_string(K.num_vertices()) +
                            " vertices; the subset scan is limited to " +
                            std::to_string(options.max_vertices) +
                            " (raise the bound explicitly to override)");
    if (K.num_vertices() >= 63) throw BoundExceeded("subset scan needs fewer than 63 vertices");
}

namespace {

constexpr std::size_t kChunks = 256;

}  // namespace

std::optional<int> polytope_dimension(const SimplicialComplex& K) {
    const auto& meta = K.meta();
    if (!meta.is_object()) return std::nullopt;
    const auto type = meta.value("type", std::string{});
    if (type == "gtp" && meta.contains("dims")) {
        int d = 0;
        for (const auto& n : meta.at("dims")) d += n.get<int>();
        return d;
    }
    if (type == "cyclic" && meta.contains("n")) return meta.at("n").get<int>();
    if (meta.contains("d")) return meta.at("d").get<int>();
    return std::nullopt;
}

BigradedBettiTable bigraded_betti(const SimplicialComplex& K, Coefficients coeff,
                                  const SubsetScanOptions& options) {
    check_vertex_bound(K, options);
    const SubcomplexHomology engine(K);
    const std::uint64_t total = std::uint64_t{1} << K.num_vertices();

    std::vector<BigradedBettiTable> partial(kChunks);
    std::vector<std::uint8_t> torsion(kChunks, 0);
    for_each_chunk(
        total, options.threads,
        [&](std::uint64_t begin, std::uint64_t end, std::size_t chunk) {
            auto& local = partial[chunk];
            for (Mask J = begin; J < end; ++J) {
                const int j = popcount(J);
                if (coeff == Coefficients::Rational) {
                    const auto betti = engine.rational_betti(J);
                    for (std::size_t lvl = 0; lvl < betti.size(); ++lvl) {
                        const int deg = static_cast<int>(lvl) - 1;
                        local.add(j - deg - 1, j, betti[lvl]);
                    }
                } else {
                    const auto h = engine.integer_homology(J);
                    for (auto [deg, rank] : h.ranks) local.add(j - deg - 1, j, rank);
                    if (h.has_torsion()) torsion[chunk] = 1;
                }
            }
        },
        kChunks);

    BigradedBettiTable table;
    table.m = K.num_vertices();
    table.d = polytope_dimension(K);
    for (const auto& local : partial)
        for (const auto& [ij, beta] : local.entries) table.add(ij.first, ij.second, beta);
    if (coeff == Coefficients::Integer)
        table.torsion_detected = std::any_of(torsion.begin(), torsion.end(), [](auto t) { return t != 0; });
    return table;
}

std::vector<HochsterSummand> nontrivial_summands(const SimplicialComplex& K,
                                                 const SubsetScanOptions& options) {
    check_vertex_bound(K, options);
    const SubcomplexHomology engine(K);
    const std::uint64_t total = std::uint64_t{1} << K.num_vertices();
    std::vector<std::vector<HochsterSummand>> partial(kChunks);
    for_each_chunk(
        total, options.threads,
        [&](std::uint64_t begin, std::uint64_t end, std::size_t chunk) {
            for (Mask J = std::max<Mask>(begin, 1); J < end; ++J) {
                const auto betti = engine.rational_betti(J);
                HochsterSummand s;
                for (std::size_t lvl = 0; lvl < betti.size(); ++lvl)
                    if (betti[lvl] != 0) s.ranks[static_cast<int>(lvl) - 1] = betti[lvl];
                if (s.ranks.empty()) continue;
                s.J = J;
                s.vertices = K.to_face(J);
                partial[chunk].push_back(std::move(s));
            }
        },
        kChunks);
    std::vector<HochsterSummand> out;
    for (auto& chunk : partial)
        for (auto& s : chunk) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(), [](const HochsterSummand& a, const HochsterSummand& b) {
        const int pa = popcount(a.J), pb = popcount(b.J);
        if (pa != pb) return pa < pb;
        return lex_less_same_size(a.J, b.J);
    });
    return out;
}

std::optional<std::pair<Face, ReducedHomologySummary>> hochster_torsion_witness(
    const SimplicialComplex& K, const SubsetScanOptions& options) {
    check_vertex_bound(K, options);
    const SubcomplexHomology engine(K);
    const std::uint64_t total = std::uint64_t{1} << K.num_vertices();
    std::vector<std::optional<std::pair<Face, ReducedHomologySummary>>> found(kChunks);
    for_each_chunk(
        total, options.threads,
        [&](std::uint64_t begin, std::uint64_t end, std::size_t chunk) {
            for (Mask J = begin; J < end; ++J) {
                auto h = engine.integer_homology(J);
                if (h.has_torsion()) {
                    found[chunk] = std::make_pair(K.to_face(J), std::move(h));
                    return;
                }
            }
        },
        kChunks);
    for (auto& f : found)
        if (f) return f;
    return std::nullopt;
}

bool hochster_torsion_free(const SimplicialComplex& K, const SubsetScanOptions& options) {
    return !hochster_torsion_witness(K, options).has_value();
}

}  // namespace sring
