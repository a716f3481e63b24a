#include "sring/betti_table.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "sring/error.hpp"

namespace sring {

std::uint64_t BigradedBettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

void BigradedBettiTable::add(int i, int j, std::uint64_t value) {
    if (value == 0) return;
    entries[{i, j}] += value;
}

std::uint64_t OrdinaryBettiVector::at(int q) const {
    auto it = b.find(q);
    return it == b.end() ? 0 : it->second;
}

OrdinaryBettiVector ordinary_betti(const BigradedBettiTable& table) {
    OrdinaryBettiVector out;
    for (const auto& [ij, beta] : table.entries) out.b[2 * ij.second - ij.first] += beta;
    if (table.d) out.total_dimension = static_cast<int>(table.m) + *table.d;
    return out;
}

DualityReport duality_check(const BigradedBettiTable& table, int m, int n) {
    DualityReport report;
    for (const auto& [ij, beta] : table.entries) {
        const auto [i, j] = ij;
        const int di = (m - n) - i, dj = m - j;
        const std::uint64_t dual = table.at(di, dj);
        if (dual != beta) {
            report.holds = false;
            report.violations.push_back({i, j, beta, di, dj, dual});
        }
    }
    return report;
}

namespace {

std::vector<std::pair<std::pair<int, int>, std::uint64_t>> sorted_entries(
    const BigradedBettiTable& t) {
    std::vector<std::pair<std::pair<int, int>, std::uint64_t>> v(t.entries.begin(), t.entries.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        const int la = a.first.second - a.first.first, lb = b.first.second - b.first.first;
        if (la != lb) return la < lb;
        return a.first.first < b.first.first;
    });
    return v;
}

std::string beta_name(int i, int j) {
    std::ostringstream os;
    os << "beta^{" << (i == 0 ? "" : "-") << i << "," << 2 * j << "}";
    return os.str();
}

}  // namespace

nlohmann::json table_to_json(const BigradedBettiTable& table, const std::string& engine) {
    nlohmann::json j;
    j["m"] = table.m;
    if (table.d) j["d"] = *table.d;
    j["entries"] = nlohmann::json::array();
    for (const auto& [ij, beta] : sorted_entries(table))
        j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
    j["engine"] = engine;
    if (table.torsion_detected) j["torsion_detected"] = *table.torsion_detected;
    return j;
}

BigradedBettiTable table_from_json(const nlohmann::json& j) {
    try {
        BigradedBettiTable t;
        t.m = j.at("m").get<std::size_t>();
        if (j.contains("d") && !j.at("d").is_null()) t.d = j.at("d").get<int>();
        for (const auto& e : j.at("entries")) {
            const auto beta = e.at("beta").get<std::uint64_t>();
            if (beta == 0) throw InvalidInput("table entries must be nonzero");
            t.add(e.at("i").get<int>(), e.at("j").get<int>(), beta);
        }
        if (j.contains("torsion_detected")) t.torsion_detected = j.at("torsion_detected").get<bool>();
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed table JSON: ") + e.what());
    }
}

std::string render_table(const BigradedBettiTable& table) {
    const int m = static_cast<int>(table.m);
    int rows = 0, cols = 0;
    std::set<std::pair<int, int>> corners;
    if (table.d) {
        rows = *table.d - 1;
        cols = m - *table.d - 1;
        corners = {{0, 0}, {m - *table.d, m}};
    } else {
        corners = {{0, 0}};
        for (const auto& [ij, beta] : table.entries) {
            if (ij.first == 0) continue;
            rows = std::max(rows, ij.second - ij.first);
            cols = std::max(cols, ij.first);
        }
    }

    std::size_t width = 3;
    for (const auto& [ij, beta] : table.entries) width = std::max(width, std::to_string(beta).size());
    const std::size_t head = std::max<std::size_t>(5, std::to_string(rows).size() + 3);

    std::ostringstream os;
    os << "m = " << m;
    if (table.d) os << ", d = " << *table.d;
    os << "\n";
    std::set<std::pair<int, int>> shown;
    if (rows > 0 && cols > 0) {
        os << std::left << std::setw(static_cast<int>(head)) << "i,l" << " |";
        for (int i = 1; i <= cols; ++i)
            os << ' ' << std::right << std::setw(static_cast<int>(width)) << ("i=" + std::to_string(i));
        os << "\n";
        for (int l = 1; l <= rows; ++l) {
            os << std::left << std::setw(static_cast<int>(head)) << ("l=" + std::to_string(l)) << " |";
            for (int i = 1; i <= cols; ++i) {
                os << ' ' << std::right << std::setw(static_cast<int>(width)) << table.at(i, i + l);
                shown.insert({i, i + l});
            }
            os << "\n";
        }
    }
    for (const auto& c : corners) {
        os << beta_name(c.first, c.second) << " = " << table.at(c.first, c.second) << "\n";
        shown.insert(c);
    }
    for (const auto& [ij, beta] : sorted_entries(table))
        if (!shown.contains(ij)) os << beta_name(ij.first, ij.second) << " = " << beta << "\n";
    return os.str();
}

nlohmann::json ordinary_to_json(const OrdinaryBettiVector& b) {
    nlohmann::json j;
    j["betti"] = nlohmann::json::object();
    for (auto [q, v] : b.b) j["betti"][std::to_string(q)] = v;
    if (b.total_dimension) j["total_dimension"] = *b.total_dimension;
    return j;
}

}  // namespace sring
