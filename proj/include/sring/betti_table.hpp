#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sring {

/// Sparse table of bigraded Betti numbers β^{-i,2j}, keyed by (i, j).
/// Zero entries are never stored.
struct BigradedBettiTable {
    std::size_t m = 0;
    std::optional<int> d;
    std::map<std::pair<int, int>, std::uint64_t> entries;
    /// Set by integer-coefficient computations: whether any contributing
    /// homology group had torsion.
    std::optional<bool> torsion_detected;

    std::uint64_t at(int i, int j) const;
    void add(int i, int j, std::uint64_t value);

    /// Entries and m agree; d and torsion metadata are ignored.
    friend bool operator==(const BigradedBettiTable& a, const BigradedBettiTable& b) {
        return a.m == b.m && a.entries == b.entries;
    }
};

/// Topological Betti numbers b^q of the moment-angle complex.
struct OrdinaryBettiVector {
    std::map<int, std::uint64_t> b;  // nonzero entries only
    std::optional<int> total_dimension;

    std::uint64_t at(int q) const;
    friend bool operator==(const OrdinaryBettiVector& a, const OrdinaryBettiVector& b) {
        return a.b == b.b;
    }
};

/// b^q = Σ_{-i+2j=q} β^{-i,2j}.
OrdinaryBettiVector ordinary_betti(const BigradedBettiTable& table);

struct DualityViolation {
    int i, j;
    std::uint64_t beta;
    int dual_i, dual_j;
    std::uint64_t dual_beta;
};

struct DualityReport {
    bool holds = true;
    std::vector<DualityViolation> violations;
};

/// Checks β^{-i,2j} = β^{-(m-n)+i, 2(m-j)} for every entry.
DualityReport duality_check(const BigradedBettiTable& table, int m, int n);

/// {"m", "d", "entries": [{"i","j","beta"}...], "engine"}; entries sorted by
/// (j-i, i).
nlohmann::json table_to_json(const BigradedBettiTable& table, const std::string& engine);
BigradedBettiTable table_from_json(const nlohmann::json& j);

/// Rows l = j-i from 1 to d-1, columns i from 1 to m-d-1, then the two
/// corner entries and any entry that falls outside the grid.
std::string render_table(const BigradedBettiTable& table);

nlohmann::json ordinary_to_json(const OrdinaryBettiVector& b);

}  // namespace sring
