#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "sring/constructions.hpp"
#include "sring/homology.hpp"

using namespace sring;

namespace {

std::vector<SimplicialComplex> corpus() {
    std::vector<SimplicialComplex> out = {
        oracle::four_cycle(),
        boundary_simplex(3),
        join(boundary_simplex(2), boundary_simplex(1)),
        build_gtp({2, {2, 1}, FacetPolicy::lex()}),
        build_gtp({1, {1, 1, 1}, FacetPolicy::lex()}),
        cyclic_boundary(7, 4),
        oracle::projective_plane(),
        SimplicialComplex({1, 2, 3, 4}, {{1, 2}}),
    };
    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) out.push_back(oracle::random_complex(rng, 6));
    return out;
}

std::map<Mask, BigInt> as_map(const SparseVec<Mask, BigInt>& v) { return {v.begin(), v.end()}; }

std::size_t rank_of(const std::vector<SparseVec<Mask, BigInt>>& vecs) {
    std::map<Mask, std::size_t> col;
    for (const auto& v : vecs)
        for (const auto& [k, x] : v) col.emplace(k, 0);
    std::size_t n = 0;
    for (auto& [k, c] : col) c = n++;
    std::vector<std::vector<oracle::cpp_rational>> rows;
    for (const auto& v : vecs) {
        std::vector<oracle::cpp_rational> r(n);
        for (const auto& [k, x] : v) r[col[k]] = oracle::cpp_rational(x);
        rows.push_back(r);
    }
    return oracle::dense_rank(rows);
}

}  // namespace

TEST_CASE("boundary matrices of an edge") {
    const auto s = boundary_matrices(full_simplex(2));
    REQUIRE(s.boundary.size() == 2);
    CHECK(s.boundary[0].cols == std::vector<SparseVec<std::uint32_t, std::int64_t>>{{{0, 1}}, {{0, 1}}});
    CHECK(s.boundary[1].cols == std::vector<SparseVec<std::uint32_t, std::int64_t>>{{{0, -1}, {1, 1}}});
}

TEST_CASE("boundary of a boundary vanishes") {
    for (const auto& K : corpus()) {
        const auto s = boundary_matrices(K);
        for (std::size_t p = 1; p < s.boundary.size(); ++p) {
            const auto& hi = s.boundary[p];
            const auto& lo = s.boundary[p - 1];
            for (const auto& col : hi.cols) {
                std::map<std::uint32_t, std::int64_t> acc;
                for (auto [r, x] : col)
                    for (auto [r2, y] : lo.cols[r]) acc[r2] += x * y;
                for (auto [r2, v] : acc) CHECK(v == 0);
            }
        }
    }
}

TEST_CASE("four-cycle boundary rank") {
    const auto s = boundary_matrices(oracle::four_cycle());
    std::vector<std::vector<oracle::cpp_rational>> dense(s.boundary[1].rows,
                                                         std::vector<oracle::cpp_rational>(s.boundary[1].cols.size()));
    for (std::size_t c = 0; c < s.boundary[1].cols.size(); ++c)
        for (auto [r, x] : s.boundary[1].cols[c]) dense[r][c] = x;
    CHECK(oracle::dense_rank(dense) == 3);
}

TEST_CASE("reduced homology examples") {
    const auto sq = reduced_homology(oracle::four_cycle(), Coefficients::Integer);
    CHECK(sq.ranks == std::map<int, std::uint64_t>{{-1, 0}, {0, 0}, {1, 1}});
    CHECK_FALSE(sq.has_torsion());

    const auto s2 = reduced_homology(join(boundary_simplex(2), boundary_simplex(1)), Coefficients::Rational);
    CHECK(s2.rank(2) == 1);
    CHECK(s2.rank(0) == 0);
    CHECK(s2.rank(1) == 0);

    const auto rp2 = reduced_homology(oracle::projective_plane(), Coefficients::Integer);
    CHECK(rp2.rank(1) == 0);
    CHECK(rp2.rank(2) == 0);
    REQUIRE(rp2.torsion.contains(1));
    CHECK(rp2.torsion.at(1) == std::vector<BigInt>{2});
    CHECK(rp2.torsion.size() == 1);

    const auto empty = reduced_homology(SimplicialComplex({1, 2}, {}), Coefficients::Rational);
    CHECK(empty.ranks == std::map<int, std::uint64_t>{{-1, 1}});

    CHECK(homology_to_json(rp2)["torsion"]["1"] == nlohmann::json::array({"2"}));
}

TEST_CASE("homology agrees with the dense oracle on every full subcomplex") {
    for (const auto& K : corpus()) {
        const SubcomplexHomology engine(K);
        for (Mask J = 0; J <= K.full_mask(); ++J) {
            std::set<std::uint32_t> within;
            for (auto v : K.to_face(J)) within.insert(v);
            const auto expected = oracle::reduced_betti(K.facets(), within);
            const auto got = engine.rational_betti(J);
            for (std::size_t lvl = 0; lvl < got.size(); ++lvl) {
                const int p = static_cast<int>(lvl) - 1;
                const std::size_t want = expected.contains(p) ? expected.at(p) : 0;
                CHECK(got[lvl] == want);
            }
            const auto integral = engine.integer_homology(J);
            for (auto [p, r] : integral.ranks) CHECK(r == (expected.contains(p) ? expected.at(p) : 0u));
            if (J == K.full_mask()) break;
        }
    }
}

TEST_CASE("Euler characteristic matches the alternating Betti sum") {
    for (const auto& K : corpus()) {
        const auto h = reduced_homology(K, Coefficients::Rational);
        std::int64_t alt = 0;
        for (auto [p, r] : h.ranks) alt += (p % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(r);
        CHECK(alt == reduced_euler_characteristic(K));
    }
}

TEST_CASE("cohomology bases") {
    const auto two = SimplicialComplex::on_range(2, {{1}, {2}});
    CHECK(cohomology_basis(two, 0).rank() == 1);
    const auto sq = cohomology_basis(oracle::four_cycle(), 1);
    CHECK(sq.rank() == 1);
    CHECK(sq.representatives[0].size() == 1);
    const auto cone = join(oracle::four_cycle(), full_simplex(1));
    for (int p = 0; p <= 2; ++p) CHECK(cohomology_basis(cone, p).rank() == 0);
}

TEST_CASE("cohomology representatives are independent cocycles") {
    for (const auto& K : corpus()) {
        const auto h = reduced_homology(K, Coefficients::Rational);
        for (int p = 0; p <= K.dimension(); ++p) {
            const auto b = cohomology_basis(K, p);
            CHECK(b.rank() == h.rank(p));
            for (const auto& rep : b.representatives) CHECK(oracle::coboundary(K, as_map(rep), p, K.full_mask()).empty());
            auto all = b.coboundaries;
            const std::size_t base = rank_of(all);
            CHECK(base == all.size());
            all.insert(all.end(), b.representatives.begin(), b.representatives.end());
            CHECK(rank_of(all) == base + b.rank());
        }
    }
}

TEST_CASE("torsion freeness of single complexes") {
    CHECK(is_torsion_free(build_gtp({1, {2, 2}, FacetPolicy::lex()})));
    CHECK_FALSE(is_torsion_free(oracle::projective_plane()));
    CHECK(is_torsion_free(oracle::four_cycle()));
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        const auto K = oracle::random_complex(rng, 7);
        std::vector<Face> edges;
        for (Mask f : K.facet_masks())
            for (Mask a = f; a; a &= a - 1)
                for (Mask b = a & (a - 1); b; b &= b - 1) edges.push_back(K.to_face((a & -a) | (b & -b)));
        const SimplicialComplex graph(K.ground(), edges);
        CHECK(is_torsion_free(graph));
    }
}

TEST_CASE("exact rationals fall back to big integers") {
    CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), ArithmeticOverflow);
    const auto big = with_exact_rationals([]<class Scalar>() -> std::string {
        Scalar x(std::int64_t{1} << 62);
        x = x * Scalar(4);
        return std::is_same_v<Scalar, Fraction> ? "fraction" : "big";
    });
    CHECK(big == "big");
}

TEST_CASE("smith invariant factors") {
    IntMatrix M(2, 2);
    M.at(0, 0) = 2;
    M.at(0, 1) = 4;
    M.at(1, 0) = 6;
    M.at(1, 1) = 8;
    CHECK(smith_invariant_factors(M) == std::vector<BigInt>{2, 4});
    IntMatrix Z(2, 3);
    CHECK(smith_invariant_factors(Z).empty());
}
