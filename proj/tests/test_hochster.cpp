#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sring/betti_table.hpp"
#include "sring/constructions.hpp"
#include "sring/error.hpp"
#include "sring/hochster.hpp"

using namespace sring;

namespace {

BigradedBettiTable table_of(std::size_t m, std::map<std::pair<int, int>, std::uint64_t> entries) {
    BigradedBettiTable t;
    t.m = m;
    for (auto [ij, v] : entries) t.add(ij.first, ij.second, v);
    return t;
}

// Rows l = 1..8 of the (1;4,3,2) table, columns i = 1..3.
const int kExampleRows[8][3] = {{3, 3, 1}, {1, 1, 0}, {1, 1, 0}, {1, 1, 0},
                                {0, 1, 1}, {0, 1, 1}, {0, 1, 1}, {1, 3, 3}};

BigradedBettiTable example_table() {
    BigradedBettiTable t;
    t.m = 13;
    t.add(0, 0, 1);
    t.add(4, 13, 1);
    for (int l = 1; l <= 8; ++l)
        for (int i = 1; i <= 3; ++i)
            if (kExampleRows[l - 1][i - 1]) t.add(i, i + l, static_cast<std::uint64_t>(kExampleRows[l - 1][i - 1]));
    return t;
}

}  // namespace

TEST_CASE("four-cycle bigraded table") {
    const auto t = bigraded_betti(oracle::four_cycle());
    CHECK(t == table_of(4, {{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}}));
    const auto b = ordinary_betti(t);
    CHECK(b.b == std::map<int, std::uint64_t>{{0, 1}, {3, 2}, {6, 1}});
    CHECK(duality_check(t, 4, 2).holds);
}

TEST_CASE("full simplex has a trivial table") {
    for (int m = 1; m <= 6; ++m) CHECK(bigraded_betti(full_simplex(m)) == table_of(m, {{{0, 0}, 1}}));
    CHECK(ordinary_betti(table_of(3, {{{0, 0}, 1}})).b == std::map<int, std::uint64_t>{{0, 1}});
}

TEST_CASE("the (1;4,3,2) table") {
    const auto K = build_gtp({1, {4, 3, 2}, FacetPolicy::lex()});
    const auto t = bigraded_betti(K);
    CHECK(t == example_table());
    CHECK(t.d == 9);
    CHECK(duality_check(example_table(), 13, 9).holds);
}

TEST_CASE("ordinary Betti numbers of (1;4,3)") {
    const auto b = ordinary_betti(bigraded_betti(build_gtp({1, {4, 3}, FacetPolicy::lex()})));
    CHECK(b.at(3) == 2);
    CHECK(b.at(4) == 1);
    CHECK(b.at(5) == 0);
    CHECK(b.at(6) == 0);
    CHECK(b.at(7) == 1);
    CHECK(b.at(8) == 1);
    CHECK(b.total_dimension == 17);
}

TEST_CASE("duality check reports perturbations") {
    auto t = example_table();
    t.add(1, 2, 1);
    const auto rep = duality_check(t, 13, 9);
    CHECK_FALSE(rep.holds);
    REQUIRE_FALSE(rep.violations.empty());
    const auto& v = rep.violations.front();
    CHECK(((v.i == 1 && v.j == 2 && v.dual_i == 3 && v.dual_j == 11) ||
           (v.i == 3 && v.j == 11 && v.dual_i == 1 && v.dual_j == 2)));
    CHECK(v.beta != v.dual_beta);
}

TEST_CASE("nontrivial summands") {
    const auto sq = nontrivial_summands(oracle::four_cycle());
    REQUIRE(sq.size() == 3);
    CHECK(sq[0].vertices == Face{1, 3});
    CHECK(sq[1].vertices == Face{2, 4});
    CHECK(sq[2].vertices == Face{1, 2, 3, 4});
    CHECK(sq[0].ranks == std::map<int, std::uint32_t>{{0, 1}});
    CHECK(sq[2].ranks == std::map<int, std::uint32_t>{{1, 1}});

    for (int n = 1; n <= 5; ++n) {
        const auto s = nontrivial_summands(boundary_simplex(n));
        REQUIRE(s.size() == 1);
        CHECK(s[0].J == boundary_simplex(n).full_mask());
        CHECK(s[0].ranks == std::map<int, std::uint32_t>{{n - 1, 1}});
    }

    const auto g = nontrivial_summands(build_gtp({0, {2, 2}, FacetPolicy::lex()}));
    REQUIRE(g.size() == 3);
    CHECK(g[0].vertices == Face{1, 2, 3});
    CHECK(g[1].vertices == Face{4, 5, 6});
    CHECK(g[2].vertices == Face{1, 2, 3, 4, 5, 6});
    CHECK(g[0].ranks == std::map<int, std::uint32_t>{{1, 1}});
    CHECK(g[2].ranks == std::map<int, std::uint32_t>{{3, 1}});
}

TEST_CASE("summands reassemble the table") {
    for (const auto& spec : corpus::gtp_specs(9)) {
        const auto K = build_gtp(spec);
        BigradedBettiTable t;
        t.m = K.num_vertices();
        t.add(0, 0, 1);
        for (const auto& s : nontrivial_summands(K)) {
            const int j = popcount(s.J);
            for (auto [deg, r] : s.ranks) t.add(j - deg - 1, j, r);
        }
        CHECK(t == bigraded_betti(K));
    }
}

TEST_CASE("torsion in a full subcomplex") {
    auto facets = oracle::projective_plane().facets();
    for (auto& f : facets) f.push_back(7);
    facets.push_back({8});
    const auto K = SimplicialComplex::on_range(8, facets);
    CHECK(is_torsion_free(K));
    const auto w = hochster_torsion_witness(K);
    REQUIRE(w.has_value());
    CHECK(w->first == Face{1, 2, 3, 4, 5, 6});
    CHECK(w->second.torsion.at(1) == std::vector<BigInt>{2});
    CHECK_FALSE(hochster_torsion_free(K));
    const auto t = bigraded_betti(K, Coefficients::Integer);
    CHECK(t.torsion_detected == true);
    CHECK(t == bigraded_betti(K, Coefficients::Rational));
}

TEST_CASE("graphs and gtp complexes are torsion free everywhere") {
    CHECK(hochster_torsion_free(oracle::four_cycle()));
    CHECK(hochster_torsion_free(SimplicialComplex::on_range(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}})));
    for (const auto& spec : corpus::gtp_specs(9)) CHECK(hochster_torsion_free(build_gtp(spec)));
}

TEST_CASE("engine agrees with the brute-force oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        const auto K = oracle::random_complex(rng, 3 + t % 5);
        const auto expected = oracle::hochster_table(K);
        CHECK(bigraded_betti(K) == expected);
        CHECK(bigraded_betti(K, Coefficients::Integer) == expected);
    }
    CHECK(bigraded_betti(oracle::projective_plane()) == oracle::hochster_table(oracle::projective_plane()));
}

TEST_CASE("results do not depend on the thread count") {
    for (const GtpSpec& spec : {GtpSpec{2, {3, 2}, FacetPolicy::lex()}, GtpSpec{1, {2, 1, 1}, FacetPolicy::random(3)}}) {
        const auto K = build_gtp(spec);
        const auto one = bigraded_betti(K, Coefficients::Rational, {1, 24});
        for (unsigned threads : {2u, 3u, 4u, 8u}) {
            CHECK(bigraded_betti(K, Coefficients::Rational, {threads, 24}) == one);
            CHECK(table_to_json(bigraded_betti(K, Coefficients::Rational, {threads, 24}), "hochster") ==
                  table_to_json(one, "hochster"));
        }
        const auto s1 = nontrivial_summands(K, {1, 24});
        const auto s4 = nontrivial_summands(K, {4, 24});
        REQUIRE(s1.size() == s4.size());
        for (std::size_t x = 0; x < s1.size(); ++x) {
            CHECK(s1[x].J == s4[x].J);
            CHECK(s1[x].ranks == s4[x].ranks);
        }
    }
}

TEST_CASE("vertex bound") {
    const auto K = build_gtp({3, {3, 2}, FacetPolicy::lex()});
    CHECK_THROWS_AS(bigraded_betti(K, Coefficients::Rational, {1, 9}), BoundExceeded);
    CHECK_THROWS_AS(nontrivial_summands(K, {1, 9}), BoundExceeded);
    CHECK_NOTHROW(bigraded_betti(K, Coefficients::Rational, {1, 10}));
}

TEST_CASE("gtp tables satisfy the corner and duality properties") {
    for (const auto& spec : corpus::gtp_specs(10)) {
        const auto K = build_gtp(spec);
        const auto t = bigraded_betti(K);
        const int m = spec.m(), d = spec.d();
        INFO("k=" << spec.k << " r=" << spec.r() << " d=" << d);
        CHECK(t.at(0, 0) == 1);
        CHECK(t.at(m - d, m) == 1);
        CHECK(duality_check(t, m, d).holds);
        const auto b = ordinary_betti(t);
        CHECK(b.at(0) == 1);
        CHECK(b.at(m + d) == 1);
        CHECK(b.b.rbegin()->first == m + d);
        for (auto [ij, v] : t.entries) {
            CHECK(ij.first <= ij.second);
            CHECK(ij.second <= m);
        }
    }
}

TEST_CASE("two-factor full subcomplexes vanish outside the expected degrees") {
    for (const auto& spec : corpus::gtp_specs(12)) {
        if (spec.r() != 2) continue;
        const auto K = build_gtp(spec);
        const SubcomplexHomology engine(K);
        const std::set<int> allowed{0, spec.dims[0] - 1, spec.dims[1] - 1, spec.d() - 2};
        INFO("k=" << spec.k << " dims=" << spec.dims[0] << "," << spec.dims[1]);
        for (Mask W = 1; W < K.full_mask(); ++W) {
            const auto betti = engine.rational_betti(W);
            for (std::size_t lvl = 0; lvl < betti.size(); ++lvl)
                if (betti[lvl] != 0) CHECK(allowed.contains(static_cast<int>(lvl) - 1));
        }
    }
}

TEST_CASE("table serialization") {
    const auto t = example_table();
    const auto j = table_to_json(t, "hochster");
    CHECK(j["m"] == 13);
    CHECK(j["engine"] == "hochster");
    CHECK(j["entries"][0] == nlohmann::json{{"i", 0}, {"j", 0}, {"beta", 1}});
    CHECK(table_from_json(j) == t);
    const auto text = render_table([&] {
        auto x = t;
        x.d = 9;
        return x;
    }());
    CHECK(text ==
          "m = 13, d = 9\n"
          "i,l   | i=1 i=2 i=3\n"
          "l=1   |   3   3   1\n"
          "l=2   |   1   1   0\n"
          "l=3   |   1   1   0\n"
          "l=4   |   1   1   0\n"
          "l=5   |   0   1   1\n"
          "l=6   |   0   1   1\n"
          "l=7   |   0   1   1\n"
          "l=8   |   1   3   3\n"
          "beta^{0,0} = 1\n"
          "beta^{-4,26} = 1\n");
}
