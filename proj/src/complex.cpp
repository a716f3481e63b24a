#include "sring/complex.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "sring/error.hpp"

namespace sring {

namespace {

bool face_lex_less(const Face& a, const Face& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<Mask> normalize_antichain(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
        const int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa > pb;
        return lex_less_same_size(a, b);
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> kept;
    for (Mask m : masks) {
        const bool covered = std::any_of(kept.begin(), kept.end(),
                                         [m](Mask k) { return (m & ~k) == 0; });
        if (!covered) kept.push_back(m);
    }
    if (kept.empty()) kept.push_back(0);
    return kept;
}

SimplicialComplex::SimplicialComplex() : facets_{Face{}}, facet_masks_{0} {}

SimplicialComplex::SimplicialComplex(std::vector<Label> ground, std::vector<Face> facets,
                                     nlohmann::json meta)
    : ground_(std::move(ground)), meta_(std::move(meta)) {
    std::sort(ground_.begin(), ground_.end());
    if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
        throw InvalidInput("duplicate vertex label in ground set");
    if (!ground_.empty() && ground_.front() == 0)
        throw InvalidInput("vertex labels are 1-based");
    if (ground_.size() > kMaxGroundSize)
        throw BoundExceeded("ground set larger than " + std::to_string(kMaxGroundSize));

    std::vector<Mask> masks;
    masks.reserve(facets.size());
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw InvalidInput("face has a repeated vertex");
        masks.push_back(to_mask(f));
    }
    facet_masks_ = normalize_antichain(std::move(masks));
    facets_.reserve(facet_masks_.size());
    for (Mask m : facet_masks_) facets_.push_back(to_face(m));

    // Store facets in lexicographic label order and keep masks aligned.
    std::vector<std::size_t> order(facets_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return face_lex_less(facets_[a], facets_[b]);
    });
    std::vector<Face> sorted_facets;
    std::vector<Mask> sorted_masks;
    for (std::size_t i : order) {
        sorted_facets.push_back(std::move(facets_[i]));
        sorted_masks.push_back(facet_masks_[i]);
    }
    facets_ = std::move(sorted_facets);
    facet_masks_ = std::move(sorted_masks);
}

SimplicialComplex SimplicialComplex::on_range(std::size_t m, std::vector<Face> facets,
                                              nlohmann::json meta) {
    std::vector<Label> ground(m);
    for (std::size_t i = 0; i < m; ++i) ground[i] = static_cast<Label>(i + 1);
    return SimplicialComplex(std::move(ground), std::move(facets), std::move(meta));
}

Mask SimplicialComplex::full_mask() const noexcept {
    return ground_.size() == 64 ? ~Mask{0} : (Mask{1} << ground_.size()) - 1;
}

int SimplicialComplex::dimension() const noexcept {
    int dim = -1;
    for (Mask m : facet_masks_) dim = std::max(dim, popcount(m) - 1);
    return dim;
}

bool SimplicialComplex::is_pure() const noexcept {
    const int size = popcount(facet_masks_.front());
    return std::all_of(facet_masks_.begin(), facet_masks_.end(),
                       [size](Mask m) { return popcount(m) == size; });
}

bool SimplicialComplex::is_face_mask(Mask face) const noexcept {
    return std::any_of(facet_masks_.begin(), facet_masks_.end(),
                       [face](Mask f) { return (face & ~f) == 0; });
}

bool SimplicialComplex::is_face(std::span<const Label> face) const {
    for (Label v : face)
        if (!has_vertex(v)) return false;
    return is_face_mask(to_mask(face));
}

bool SimplicialComplex::has_vertex(Label v) const noexcept {
    return std::binary_search(ground_.begin(), ground_.end(), v);
}

std::vector<Label> SimplicialComplex::ghost_vertices() const {
    Mask used = 0;
    for (Mask m : facet_masks_) used |= m;
    std::vector<Label> ghosts;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (!((used >> i) & 1)) ghosts.push_back(ground_[i]);
    return ghosts;
}

std::size_t SimplicialComplex::position(Label v) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), v);
    if (it == ground_.end() || *it != v)
        throw InvalidInput("vertex " + std::to_string(v) + " is not in the ground set");
    return static_cast<std::size_t>(it - ground_.begin());
}

Mask SimplicialComplex::to_mask(std::span<const Label> labels) const {
    Mask m = 0;
    for (Label v : labels) m |= Mask{1} << position(v);
    return m;
}

Face SimplicialComplex::to_face(Mask mask) const {
    Face f;
    f.reserve(static_cast<std::size_t>(popcount(mask)));
    while (mask) {
        const int t = __builtin_ctzll(mask);
        f.push_back(ground_[static_cast<std::size_t>(t)]);
        mask &= mask - 1;
    }
    return f;
}

SimplicialComplex SimplicialComplex::with_meta(nlohmann::json meta) const {
    SimplicialComplex copy = *this;
    copy.meta_ = std::move(meta);
    return copy;
}

std::vector<std::vector<Mask>> enumerate_faces(const SimplicialComplex& K) {
    std::unordered_set<Mask> seen;
    for (Mask f : K.facet_masks()) {
        if (seen.contains(f)) continue;
        // Walk all submasks of the facet.
        Mask sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    const int top = K.dimension();
    std::vector<std::vector<Mask>> by_dim(static_cast<std::size_t>(top + 2));
    for (Mask m : seen) by_dim[static_cast<std::size_t>(popcount(m))].push_back(m);
    for (auto& layer : by_dim) std::sort(layer.begin(), layer.end(), lex_less_same_size);
    return by_dim;
}

}  // namespace sring
