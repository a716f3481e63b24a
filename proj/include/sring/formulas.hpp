#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sring/betti_table.hpp"
#include "sring/constructions.hpp"
#include "sring/linalg.hpp"

namespace sring {

/// C(b, c), zero when c < 0, b < 0 or b < c.
BigInt binomial(long b, long c);

/// A closed-form table and the family it came from ("gtp", "truncation",
/// "polygon").
struct FormulaTable {
    BigradedBettiTable table;
    std::string provenance;

    std::string engine() const { return "formula:" + provenance; }
};

/// Betti table of a (k; n_1..n_r) polytope in closed form. Rows l = 1 and
/// l = d-1 come from the missing-edge expression and its dual placement,
/// rows 1 < l < d-1 from sub-multisets of dims summing to l. Requires d >= 3.
FormulaTable gtp_formula_table(const GtpSpec& spec);

/// k-fold truncation of Δ^n, n >= 3.
FormulaTable truncation_formula_table(int k, int n);

/// The (k+3)-gon.
FormulaTable polygon_formula_table(int k);

/// Predicted β^{-i,2(i+1)} after one more vertex cut of a d-polytope with m
/// facets whose table is prev; keys i = 1..m-d+1, zeros omitted. Requires
/// d >= 3.
std::map<int, std::uint64_t> truncation_recurrence(const BigradedBettiTable& prev, int m, int d);

/// k·C(k+1,i) - C(k,i+1) == i·C(k+2,i+1) - C(k,i-1) for all 0 <= i <= k+1.
bool remark_identity(int k);

struct SphereProduct {
    int p = 0;
    int q = 0;
    std::uint64_t mult = 0;
    friend bool operator==(const SphereProduct&, const SphereProduct&) = default;
};

/// Connected sum of (S^p × S^q)^{#mult}; entries have p <= q, distinct
/// (p, q) and are sorted by p.
using SphereProductList = std::vector<SphereProduct>;

/// Sphere products of the moment-angle manifold of the k-fold truncated
/// n-simplex.
SphereProductList mcgavran_decomposition(int k, int n);

OrdinaryBettiVector connected_sum_betti(const SphereProductList& list, int total_dim);

struct SphereListResult {
    std::optional<SphereProductList> list;
    /// "trusted" inside the range where the connected-sum description is
    /// known to hold (one factor, or two factors with m < 3d); otherwise
    /// "heuristic".
    std::string validity;
    std::string reason;
};

/// Reads a connected sum of two-sphere products off the ordinary Betti
/// numbers when they are compatible with one. `factors` is r for a
/// (k; n_1..n_r) polytope when known.
SphereListResult sphere_list_from_table(const BigradedBettiTable& table, int m, int d,
                                        std::optional<int> factors = std::nullopt);

nlohmann::json spheres_to_json(const SphereProductList& list);

}  // namespace sring
