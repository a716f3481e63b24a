#include "sring/complex_io.hpp"

#include <fstream>

#include "sring/error.hpp"

namespace sring {

namespace {

bool is_standard_ground(const std::vector<Label>& ground) {
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (ground[i] != i + 1) return false;
    return true;
}

}  // namespace

nlohmann::json complex_to_json(const SimplicialComplex& K) {
    nlohmann::json j;
    j["m"] = K.num_vertices();
    if (!is_standard_ground(K.ground())) j["ground"] = K.ground();
    j["facets"] = K.facets();
    if (!K.meta().is_null()) j["meta"] = K.meta();
    return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object()) throw InvalidInput("complex JSON must be an object");
        std::vector<Label> ground;
        if (j.contains("ground")) {
            ground = j.at("ground").get<std::vector<Label>>();
            if (j.contains("m") && j.at("m").get<std::size_t>() != ground.size())
                throw InvalidInput("\"m\" disagrees with \"ground\"");
        } else {
            const auto m = j.at("m").get<long long>();
            if (m < 0) throw InvalidInput("\"m\" must be non-negative");
            if (m > static_cast<long long>(kMaxGroundSize))
                throw BoundExceeded("ground set larger than 64");
            for (Label v = 1; v <= static_cast<Label>(m); ++v) ground.push_back(v);
        }
        // Facet vertices outside the ground set are rejected by the constructor.
        std::vector<Face> facets = j.at("facets").get<std::vector<Face>>();
        nlohmann::json meta = j.contains("meta") ? j.at("meta") : nlohmann::json(nullptr);
        return SimplicialComplex(std::move(ground), std::move(facets), std::move(meta));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed complex JSON: ") + e.what());
    }
}

SimplicialComplex read_complex(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
    return complex_from_json(j);
}

void write_complex(const SimplicialComplex& K, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << complex_to_json(K).dump() << '\n';
}

}  // namespace sring
