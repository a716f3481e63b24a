#include "sring/formulas.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "sring/error.hpp"

namespace sring {

BigInt binomial(long b, long c) {
    if (c < 0 || b < 0 || b < c) return 0;
    c = std::min(c, b - c);
    BigInt r = 1;
    for (long t = 1; t <= c; ++t) r = r * (b - c + t) / t;
    return r;
}

namespace {

std::uint64_t entry(const BigInt& x) {
    if (x < 0) throw std::logic_error("closed form produced a negative Betti number");
    if (x > std::numeric_limits<std::uint64_t>::max()) throw ArithmeticOverflow();
    return static_cast<std::uint64_t>(x);
}

void put(BigradedBettiTable& t, int i, int j, const BigInt& value) { t.add(i, j, entry(value)); }

BigradedBettiTable with_corners(int m, int d) {
    BigradedBettiTable t;
    t.m = static_cast<std::size_t>(m);
    t.d = d;
    t.add(0, 0, 1);
    t.add(m - d, m, 1);
    return t;
}

}  // namespace

FormulaTable gtp_formula_table(const GtpSpec& spec) {
    spec.validate();
    const int k = spec.k, r = spec.r(), d = spec.d(), m = spec.m(), a = spec.a();
    if (d <= 2)
        throw InvalidInput("gtp formula needs d >= 3; use the polygon formula for d = 2");
    auto t = with_corners(m, d);

    for (int i = 1; i <= k + r - 1; ++i) {
        const BigInt b = k * binomial(k + r - 1, i) - binomial(k, i + 1) + a * binomial(k, i - 1);
        put(t, i, i + 1, b);
        put(t, k + r - i, d + k + r - i - 1, b);
    }

    // sub-multisets counted by index, so equal dims contribute separately
    std::map<int, std::vector<int>> sizes_by_sum;
    for (unsigned S = 1; S < (1u << r); ++S) {
        int sum = 0;
        for (int x = 0; x < r; ++x)
            if (S >> x & 1u) sum += spec.dims[static_cast<std::size_t>(x)];
        sizes_by_sum[sum].push_back(std::popcount(S));
    }
    for (int l = 2; l <= d - 2; ++l) {
        auto it = sizes_by_sum.find(l);
        if (it == sizes_by_sum.end()) continue;
        for (int i = 1; i <= k + r - 1; ++i) {
            BigInt sum = 0;
            for (int s : it->second) sum += binomial(k, i - s);
            put(t, i, i + l, sum);
        }
    }
    return {std::move(t), "gtp"};
}

FormulaTable truncation_formula_table(int k, int n) {
    if (n < 3) throw InvalidInput("truncation formula needs n >= 3");
    if (k < 0) throw InvalidInput("k must be non-negative");
    const int m = n + 1 + k;
    auto t = with_corners(m, n);
    for (int i = 1; i <= k; ++i) {
        put(t, i, i + 1, i * binomial(k + 1, i + 1));
        put(t, i, i + n - 1, (k + 1 - i) * binomial(k + 1, k + 2 - i));
    }
    return {std::move(t), "truncation"};
}

FormulaTable polygon_formula_table(int k) {
    if (k < 0) throw InvalidInput("k must be non-negative");
    auto t = with_corners(k + 3, 2);
    for (int i = 1; i <= k; ++i)
        put(t, i, i + 1, i * binomial(k + 1, i + 1) + (k + 1 - i) * binomial(k + 1, k + 2 - i));
    return {std::move(t), "polygon"};
}

std::map<int, std::uint64_t> truncation_recurrence(const BigradedBettiTable& prev, int m, int d) {
    if (d < 3) throw InvalidInput("the truncation recurrence needs d >= 3");
    if (m <= d) throw InvalidInput("a d-polytope has more than d facets");
    std::map<int, std::uint64_t> row;
    for (int i = 1; i <= m - d + 1; ++i) {
        const BigInt v = binomial(m - d, i) + prev.at(i - 1, i) + prev.at(i, i + 1);
        if (v != 0) row[i] = entry(v);
    }
    return row;
}

bool remark_identity(int k) {
    if (k < 0) throw InvalidInput("k must be non-negative");
    for (int i = 0; i <= k + 1; ++i) {
        const BigInt lhs = k * binomial(k + 1, i) - binomial(k, i + 1);
        const BigInt rhs = i * binomial(k + 2, i + 1) - binomial(k, i - 1);
        if (lhs != rhs) return false;
    }
    return true;
}

SphereProductList mcgavran_decomposition(int k, int n) {
    if (k < 1) throw InvalidInput("McGavran decomposition needs k >= 1");
    if (n < 2) throw InvalidInput("McGavran decomposition needs n >= 2");
    std::map<std::pair<int, int>, std::uint64_t> merged;
    for (int j = 1; j <= k; ++j) {
        const auto mult = entry(j * binomial(k + 1, j + 1));
        if (mult == 0) continue;
        int p = j + 2, q = 2 * n + k - j - 1;
        if (p > q) std::swap(p, q);
        merged[{p, q}] += mult;
    }
    SphereProductList out;
    for (const auto& [pq, mult] : merged) out.push_back({pq.first, pq.second, mult});
    return out;
}

OrdinaryBettiVector connected_sum_betti(const SphereProductList& list, int total_dim) {
    OrdinaryBettiVector b;
    b.total_dimension = total_dim;
    b.b[0] += 1;
    b.b[total_dim] += 1;
    for (const auto& s : list) {
        if (s.p + s.q != total_dim)
            throw InvalidInput("sphere products of different total dimensions");
        if (s.mult == 0) continue;
        b.b[s.p] += s.mult;
        b.b[s.q] += s.mult;
    }
    return b;
}

SphereListResult sphere_list_from_table(const BigradedBettiTable& table, int m, int d,
                                        std::optional<int> factors) {
    SphereListResult out;
    const bool trusted = factors && (*factors == 1 || (*factors == 2 && m < 3 * d));
    out.validity = trusted ? "trusted" : "heuristic";
    const int N = m + d;
    const auto b = ordinary_betti(table);
    auto fail = [&](std::string reason) {
        out.reason = std::move(reason);
        return out;
    };
    if (b.at(0) != 1 || b.at(N) != 1) return fail("b^0 and b^top must both be 1");
    for (const auto& [q, v] : b.b)
        if (q < 0 || q > N) return fail("Betti number outside degrees 0.." + std::to_string(N));
    for (int q : {1, 2, N - 1, N - 2})
        if (q > 0 && q < N && b.at(q) != 0) return fail("b^" + std::to_string(q) + " is nonzero");
    for (int q = 1; q < N; ++q)
        if (b.at(q) != b.at(N - q))
            return fail("b^" + std::to_string(q) + " and b^" + std::to_string(N - q) + " differ");
    SphereProductList list;
    for (int q = 3; 2 * q < N; ++q)
        if (b.at(q) != 0) list.push_back({q, N - q, b.at(q)});
    if (N % 2 == 0 && b.at(N / 2) != 0) {
        if (b.at(N / 2) % 2 != 0) return fail("odd middle Betti number");
        list.push_back({N / 2, N / 2, b.at(N / 2) / 2});
    }
    out.list = std::move(list);
    return out;
}

nlohmann::json spheres_to_json(const SphereProductList& list) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : list) j.push_back({{"p", s.p}, {"q", s.q}, {"mult", s.mult}});
    return j;
}

}  // namespace sring
