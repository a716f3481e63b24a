// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "sring/betti_table.hpp"
#include "sring/constructions.hpp"
#include "sring/formulas.hpp"
#include "sring/golod.hpp"
#include "sring/hochster.hpp"
#include "sring/homology.hpp"
#include "sring/taylor.hpp"

using namespace sring;

namespace {

// Wall-clock limits in seconds.
constexpr double kExampleLimit = 60.0;
constexpr double kGridLimit = 600.0;
constexpr double kGolodLimit = 900.0;

constexpr int kGridMaxM = 14;
constexpr std::uint64_t kGridSeeds[] = {1, 2, 3};
constexpr int kTaylorGtpMaxM = 10;
constexpr int kTaylorRandomCount = 50;
constexpr std::size_t kTaylorRandomMaxM = 7;
constexpr int kGolodMaxM = 10;
constexpr std::size_t kGluingMaxM = 8;
constexpr int kStackingMaxM = 9;
constexpr int kTorsionMaxM = 12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string type_name(const GtpSpec& s) {
    std::string out = "(" + std::to_string(s.k) + ";";
    for (std::size_t i = 0; i < s.dims.size(); ++i) out += (i ? "," : "") + std::to_string(s.dims[i]);
    out += ")";
    if (s.policy.kind == FacetPolicy::Kind::SeededRandom) out += "/seed" + std::to_string(s.policy.seed);
    return out;
}

// k in 0..3, r in 1..3, 1 <= n_i <= 4 non-increasing, d >= 3, m <= 14; the
// lex policy and each seed.
std::vector<GtpSpec> grid() {
    std::vector<GtpSpec> out;
    std::vector<int> dims;
    std::function<void()> rec = [&] {
        if (!dims.empty())
            for (int k = 0; k <= 3; ++k) {
                GtpSpec s{k, dims, FacetPolicy::lex()};
                if (s.d() < 3 || s.m() > kGridMaxM) continue;
                out.push_back(s);
                if (k > 0)
                    for (auto seed : kGridSeeds) out.push_back({k, dims, FacetPolicy::random(seed)});
            }
        if (dims.size() == 3) return;
        for (int n = 1; n <= (dims.empty() ? 4 : dims.back()); ++n) {
            dims.push_back(n);
            rec();
            dims.pop_back();
        }
    };
    rec();
    return out;
}

bool minimally_non_golod(const SimplicialComplex& K) {
    return is_minimally_non_golod(K).verdict == GolodVerdict::MinimallyNonGolod;
}

bool ring_golod(const SimplicialComplex& K) { return is_ring_golod(K).verdict == GolodVerdict::RingGolod; }

std::map<int, std::uint64_t> first_row(const BigradedBettiTable& t) {
    std::map<int, std::uint64_t> row;
    for (auto [ij, v] : t.entries)
        if (ij.second == ij.first + 1) row[ij.first] = v;
    return row;
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    Outcome() { detail << std::fixed << std::setprecision(2); }

    void fail(const std::string& what) {
        if (pass) detail << what;
        pass = false;
    }
};

using Check = std::function<void(Outcome&)>;

struct Criterion {
    int id;
    std::string text;
    Check check;
};

// Tables from the grid, shared by the formula and duality criteria.
struct GridTables {
    std::vector<GtpSpec> specs;
    std::vector<BigradedBettiTable> tables;
    double seconds = 0;
};

const GridTables& grid_tables() {
    static const GridTables g = [] {
        GridTables out;
        const auto start = Clock::now();
        out.specs = grid();
        for (const auto& s : out.specs) out.tables.push_back(bigraded_betti(build_gtp(s)));
        out.seconds = seconds_since(start);
        return out;
    }();
    return g;
}

void example_table(Outcome& o) {
    const auto start = Clock::now();
    const auto t = bigraded_betti(build_gtp({1, {4, 3, 2}, FacetPolicy::lex()}));
    const double secs = seconds_since(start);
    BigradedBettiTable expected;
    expected.m = 13;
    const int rows[8][3] = {{3, 3, 1}, {1, 1, 0}, {1, 1, 0}, {1, 1, 0}, {0, 1, 1}, {0, 1, 1}, {0, 1, 1}, {1, 3, 3}};
    expected.add(0, 0, 1);
    expected.add(4, 13, 1);
    for (int l = 1; l <= 8; ++l)
        for (int i = 1; i <= 3; ++i)
            if (rows[l - 1][i - 1]) expected.add(i, i + l, static_cast<std::uint64_t>(rows[l - 1][i - 1]));
    if (!(t == expected)) o.fail("table differs: " + render_table(t));
    if (secs >= kExampleLimit) o.fail("took " + std::to_string(secs) + " s");
    o.detail << (o.pass ? "" : "; ") << secs << " s";
}

void formula_grid(Outcome& o) {
    const auto& g = grid_tables();
    for (std::size_t x = 0; x < g.specs.size(); ++x)
        if (!(gtp_formula_table(g.specs[x]).table == g.tables[x])) o.fail("mismatch at " + type_name(g.specs[x]));
    if (g.seconds >= kGridLimit) o.fail("took " + std::to_string(g.seconds) + " s");
    o.detail << (o.pass ? "" : "; ") << g.specs.size() << " complexes, " << g.seconds << " s";
}

void duality_grid(Outcome& o) {
    const auto& g = grid_tables();
    for (std::size_t x = 0; x < g.specs.size(); ++x)
        if (!duality_check(g.tables[x], g.specs[x].m(), g.specs[x].d()).holds)
            o.fail("violation at " + type_name(g.specs[x]));
    o.detail << (o.pass ? "" : "; ") << g.specs.size() << " tables";
}

void taylor_vs_hochster(Outcome& o) {
    std::size_t count = 0;
    for (const auto& s : corpus::gtp_specs(kTaylorGtpMaxM)) {
        const auto K = build_gtp(s);
        if (!(taylor_betti(K, {18, true}) == bigraded_betti(K))) o.fail("mismatch at " + type_name(s));
        ++count;
    }
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(2, kTaylorRandomMaxM);
    std::uniform_int_distribution<std::uint64_t> pick(1, 127);
    std::uniform_int_distribution<int> facets(1, 6);
    for (int t = 0; t < kTaylorRandomCount; ++t) {
        const auto m = size(rng);
        std::vector<Face> fs;
        for (int x = facets(rng); x > 0; --x) {
            Face f;
            const auto bits = pick(rng);
            for (std::size_t b = 0; b < m; ++b)
                if (bits >> b & 1u) f.push_back(static_cast<Label>(b + 1));
            if (!f.empty()) fs.push_back(f);
        }
        const auto K = SimplicialComplex::on_range(m, fs);
        if (!(taylor_betti(K, {18, true}) == bigraded_betti(K))) o.fail("mismatch on random complex " + std::to_string(t));
        ++count;
    }
    o.detail << (o.pass ? "" : "; ") << count << " complexes";
}

void small_families(Outcome& o) {
    for (int k = 0; k <= 6; ++k)
        if (!(polygon_formula_table(k).table == bigraded_betti(build_gtp({k, {2}, FacetPolicy::lex()}))))
            o.fail("polygon k=" + std::to_string(k));
    for (int n = 3; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k) {
            const GtpSpec spec{k, {n}, FacetPolicy::lex()};
            const auto t = truncation_formula_table(k, n).table;
            if (!(t == bigraded_betti(build_gtp(spec))) || !(t == gtp_formula_table(spec).table))
                o.fail("truncation " + type_name(spec));
        }
    std::size_t steps = 0;
    for (const auto& spec : corpus::gtp_specs(12)) {
        if (spec.d() < 3 || spec.k != 0) continue;
        auto K = build_gtp(spec);
        auto table = bigraded_betti(K);
        for (int m = spec.m(); m < 12; ++m) {
            const auto next = stack(K, K.facets()[static_cast<std::size_t>(m) % K.facets().size()]).complex;
            const auto next_table = bigraded_betti(next);
            if (truncation_recurrence(table, m, spec.d()) != first_row(next_table))
                o.fail("recurrence from " + type_name(spec) + " at m=" + std::to_string(m));
            K = next;
            table = next_table;
            ++steps;
        }
    }
    o.detail << (o.pass ? "" : "; ") << steps << " recurrence steps";
}

void identity(Outcome& o) {
    for (int k = 0; k <= 50; ++k)
        if (!remark_identity(k)) o.fail("k=" + std::to_string(k));
}

void golod_classification(Outcome& o) {
    const auto start = Clock::now();
    std::size_t count = 0;
    for (const auto& s : corpus::gtp_specs(kGolodMaxM)) {
        if (s.r() == 1 && s.k == 0) continue;  // simplex boundary
        const bool expect = s.r() <= 2;
        if (minimally_non_golod(build_gtp(s)) != expect) o.fail("wrong verdict for " + type_name(s));
        ++count;
    }
    const auto cut = delete_vertex(build_gtp({1, {1, 1, 1}, FacetPolicy::lex()}), 7);
    const auto report = is_ring_golod(cut);
    if (report.verdict != GolodVerdict::RingNonGolod) o.fail("(1;1,1,1) - 7 is ring-Golod");
    if (!report.prefilter.induced_cycle || report.prefilter.induced_cycle->size() != 4)
        o.fail("(1;1,1,1) - 7 has no induced 4-cycle");
    const double secs = seconds_since(start);
    if (secs >= kGolodLimit) o.fail("took " + std::to_string(secs) + " s");
    o.detail << (o.pass ? "" : "; ") << count << " types, " << secs << " s";
}

void closure(Outcome& o) {
    const auto pieces = corpus::golod_pieces(ring_golod);
    const auto cases = corpus::gluing_cases(pieces, kGluingMaxM);
    for (const auto& c : cases)
        if (!ring_golod(glue(pieces[c.left], pieces[c.right], c.sigma1, c.sigma2))) {
            o.fail("gluing of pieces " + std::to_string(c.left) + " and " + std::to_string(c.right) + " is not Golod");
            break;
        }

    std::vector<SimplicialComplex> mng;
    for (const auto& s : corpus::gtp_specs(kStackingMaxM))
        if (s.r() <= 2 && !(s.r() == 1 && s.k == 0)) mng.push_back(build_gtp(s));
    for (int m = 6; m <= kStackingMaxM; ++m) mng.push_back(cyclic_boundary(m, 4));
    std::size_t stacked = 0;
    for (const auto& K : mng) {
        if (!minimally_non_golod(K)) {
            o.fail("corpus member is not minimally non-Golod");
            continue;
        }
        for (const auto& F : K.facets()) {
            if (!minimally_non_golod(stack(K, F).complex)) o.fail("stacking broke minimal non-Golodness");
            ++stacked;
        }
    }
    o.detail << (o.pass ? "" : "; ") << cases.size() << " gluings, " << stacked << " stackings";
}

void mcgavran(Outcome& o) {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            const GtpSpec spec{k, {n}, FacetPolicy::lex()};
            const auto predicted = connected_sum_betti(mcgavran_decomposition(k, n), spec.m() + spec.d());
            if (!(predicted == ordinary_betti(bigraded_betti(build_gtp(spec))))) o.fail("mismatch at " + type_name(spec));
        }
}

void sphere_list(Outcome& o) {
    const GtpSpec spec{1, {4, 3}, FacetPolicy::lex()};
    const auto table = bigraded_betti(build_gtp(spec));
    const auto r = sphere_list_from_table(table, spec.m(), spec.d(), spec.r());
    const SphereProductList expected{{3, 14, 2}, {4, 13, 1}, {7, 10, 1}, {8, 9, 1}};
    if (!r.list || *r.list != expected) o.fail("sphere list differs");
    const auto b = ordinary_betti(table);
    if (b.at(5) != 0 || b.at(6) != 0) o.fail("b5 or b6 nonzero");
}

void neighbourly(Outcome& o) {
    for (int m = 6; m <= 8; ++m) {
        const auto K = cyclic_boundary(m, 4);
        if (!minimally_non_golod(K)) o.fail("cyclic(" + std::to_string(m) + ",4) not minimally non-Golod");
        if (bigraded_betti(K).at(1, 2) != 0) o.fail("cyclic(" + std::to_string(m) + ",4) has a missing edge");
    }
    const auto& g = grid_tables();
    for (std::size_t x = 0; x < g.specs.size(); ++x)
        if (g.specs[x].k >= 1 && g.tables[x].at(1, 2) == 0) o.fail(type_name(g.specs[x]) + " has no missing edge");
}

void torsion(Outcome& o) {
    std::size_t count = 0;
    for (const auto& s : corpus::gtp_specs(kTorsionMaxM)) {
        if (!hochster_torsion_free(build_gtp(s))) o.fail("torsion in " + type_name(s));
        ++count;
    }
    const auto rp2 = SimplicialComplex::on_range(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                     {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
    const auto h = reduced_homology(rp2, Coefficients::Integer);
    if (h.torsion != std::map<int, std::vector<BigInt>>{{1, {BigInt(2)}}}) o.fail("RP^2 torsion is not Z/2 in degree 1");
    if (hochster_torsion_free(rp2)) o.fail("RP^2 reported torsion-free");
    o.detail << (o.pass ? "" : "; ") << count << " types";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Betti table of (1;4,3,2) matches the worked example within 60 s", example_table},
        {2, "gtp formula equals Hochster over the grid (lex + 3 seeds) within 600 s", formula_grid},
        {3, "bigraded duality holds on every grid table", duality_grid},
        {4, "Taylor resolution equals Hochster (gtp m<=10, 50 random m<=7)", taylor_vs_hochster},
        {5, "polygon, truncation and l=1 recurrence agree with brute force", small_families},
        {6, "binomial identity holds for k<=50", identity},
        {7, "Golod classification for gtp m<=10 and the (1;1,1,1)-7 witness within 900 s", golod_classification},
        {8, "Golodness closed under gluing; stacking keeps minimal non-Golodness", closure},
        {9, "McGavran decomposition matches ordinary Betti numbers", mcgavran},
        {10, "(1;4,3) sphere list and vanishing b5, b6", sphere_list},
        {11, "neighbourly cyclic(m,4) vs gtp missing edges", neighbourly},
        {12, "gtp complexes m<=12 torsion-free; RP^2 has Z/2", torsion},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = Clock::now();
        try {
            c.check(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = seconds_since(start);
        if (!o.pass) ++failures;
        std::printf("%s %d %s [%s] (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.text.c_str(), o.detail.str().c_str(),
                    secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
