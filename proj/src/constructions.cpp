#include "sring/constructions.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>
#include <unordered_set>

#include "sring/error.hpp"

namespace sring {

int GtpSpec::d() const {
    int sum = 0;
    for (int n : dims) sum += n;
    return sum;
}

int GtpSpec::a() const {
    return static_cast<int>(std::count(dims.begin(), dims.end(), 1));
}

void GtpSpec::validate() const {
    if (k < 0) throw InvalidInput("number of vertex cuts must be non-negative");
    if (dims.empty()) throw InvalidInput("dims must contain at least one factor");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1) throw InvalidInput("dims entries must be >= 1");
        if (i > 0 && dims[i] > dims[i - 1]) throw InvalidInput("dims must be non-increasing");
    }
    if (m() > static_cast<int>(kMaxGroundSize))
        throw BoundExceeded("gtp complex would have more than 64 vertices");
}

SimplicialComplex boundary_simplex(int n) {
    if (n < 1) throw InvalidInput("boundary_simplex needs n >= 1");
    const auto m = static_cast<Label>(n + 1);
    std::vector<Face> facets;
    for (Label skip = 1; skip <= m; ++skip) {
        Face f;
        for (Label v = 1; v <= m; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::on_range(m, std::move(facets));
}

SimplicialComplex full_simplex(int m) {
    if (m < 0) throw InvalidInput("full_simplex needs m >= 0");
    Face f;
    for (Label v = 1; v <= static_cast<Label>(m); ++v) f.push_back(v);
    return SimplicialComplex::on_range(static_cast<std::size_t>(m), {f});
}

SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2) {
    const Label shift = K1.ground().empty() ? 0 : K1.ground().back();
    std::vector<Label> ground = K1.ground();
    for (Label v : K2.ground()) ground.push_back(v + shift);
    std::vector<Face> facets;
    for (const Face& f1 : K1.facets()) {
        for (const Face& f2 : K2.facets()) {
            Face f = f1;
            for (Label v : f2) f.push_back(v + shift);
            facets.push_back(std::move(f));
        }
    }
    return SimplicialComplex(std::move(ground), std::move(facets));
}

StackResult stack(const SimplicialComplex& K, const Face& F) {
    if (!K.is_pure()) throw InvalidInput("stack needs a pure complex");
    Face sorted = F;
    std::sort(sorted.begin(), sorted.end());
    auto it = std::find(K.facets().begin(), K.facets().end(), sorted);
    if (it == K.facets().end()) throw InvalidInput("stack: F is not a facet");
    const Label v = (K.ground().empty() ? 0 : K.ground().back()) + 1;

    std::vector<Label> ground = K.ground();
    ground.push_back(v);
    std::vector<Face> facets;
    for (const Face& f : K.facets())
        if (f != sorted) facets.push_back(f);
    for (std::size_t drop = 0; drop < sorted.size(); ++drop) {
        Face f;
        for (std::size_t t = 0; t < sorted.size(); ++t)
            if (t != drop) f.push_back(sorted[t]);
        f.push_back(v);
        facets.push_back(std::move(f));
    }
    return {SimplicialComplex(std::move(ground), std::move(facets)), v};
}

SimplicialComplex build_gtp(const GtpSpec& spec) {
    spec.validate();
    if (spec.r() == 1 && spec.dims[0] == 1)
        throw InvalidInput("type (k; 1) is a segment; no dual sphere of interest");

    SimplicialComplex K = boundary_simplex(spec.dims[0]);
    for (std::size_t i = 1; i < spec.dims.size(); ++i) K = join(K, boundary_simplex(spec.dims[i]));

    std::mt19937_64 rng(spec.policy.seed);
    std::vector<Label> new_vertices;
    for (int step = 0; step < spec.k; ++step) {
        const auto& facets = K.facets();
        std::size_t choice = 0;
        if (spec.policy.kind == FacetPolicy::Kind::SeededRandom)
            choice = static_cast<std::size_t>(rng() % facets.size());
        auto result = stack(K, facets[choice]);
        K = std::move(result.complex);
        new_vertices.push_back(result.new_vertex);
    }

    nlohmann::json meta = {
        {"type", "gtp"},
        {"k", spec.k},
        {"dims", spec.dims},
        {"new_vertices", new_vertices},
        {"strategy", spec.policy.kind == FacetPolicy::Kind::LexLeast ? "lex" : "random"},
    };
    if (spec.policy.kind == FacetPolicy::Kind::SeededRandom) meta["seed"] = spec.policy.seed;
    return K.with_meta(std::move(meta));
}

SimplicialComplex full_subcomplex_mask(const SimplicialComplex& K, Mask J) {
    std::vector<Label> ground = K.to_face(J);
    std::vector<Face> facets;
    for (Mask f : K.facet_masks()) facets.push_back(K.to_face(f & J));
    return SimplicialComplex(std::move(ground), std::move(facets));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, const std::vector<Label>& J) {
    return full_subcomplex_mask(K, K.to_mask(J));
}

SimplicialComplex delete_vertex(const SimplicialComplex& K, Label v) {
    const Mask bit = Mask{1} << K.position(v);
    return full_subcomplex_mask(K, K.full_mask() & ~bit);
}

SimplicialComplex glue(const SimplicialComplex& K1, const SimplicialComplex& K2,
                       const Face& sigma1, const Face& sigma2) {
    if (sigma1.size() != sigma2.size())
        throw InvalidInput("glue: simplices of different sizes");
    if (!K1.is_face(sigma1)) throw InvalidInput("glue: sigma1 is not a face of K1");
    if (!K2.is_face(sigma2)) throw InvalidInput("glue: sigma2 is not a face of K2");
    Face s1 = sigma1, s2 = sigma2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());

    Label next = K1.ground().empty() ? 1 : K1.ground().back() + 1;
    std::vector<Label> relabel(K2.num_vertices());
    std::vector<Label> ground = K1.ground();
    for (std::size_t i = 0; i < K2.num_vertices(); ++i) {
        const Label v = K2.ground()[i];
        auto it = std::find(s2.begin(), s2.end(), v);
        if (it != s2.end()) {
            relabel[i] = s1[static_cast<std::size_t>(it - s2.begin())];
        } else {
            relabel[i] = next++;
            ground.push_back(relabel[i]);
        }
    }
    std::vector<Face> facets = K1.facets();
    for (Mask f : K2.facet_masks()) {
        Face g;
        for (Mask rest = f; rest; rest &= rest - 1)
            g.push_back(relabel[static_cast<std::size_t>(__builtin_ctzll(rest))]);
        facets.push_back(std::move(g));
    }
    return SimplicialComplex(std::move(ground), std::move(facets));
}

std::vector<Mask> minimal_nonface_masks(const SimplicialComplex& K) {
    const auto layers = enumerate_faces(K);
    std::unordered_set<Mask> faces;
    for (const auto& layer : layers) faces.insert(layer.begin(), layer.end());
    const Mask all = K.full_mask();

    std::unordered_set<Mask> found;
    for (Mask sigma : faces) {
        for (Mask rest = all & ~sigma; rest; rest &= rest - 1) {
            const Mask candidate = sigma | (rest & (~rest + 1));
            if (faces.contains(candidate) || found.contains(candidate)) continue;
            bool minimal = true;
            for (Mask drop = candidate; drop && minimal; drop &= drop - 1)
                minimal = faces.contains(candidate & ~(drop & (~drop + 1)));
            if (minimal) found.insert(candidate);
        }
    }
    std::vector<Mask> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [&K](Mask a, Mask b) {
        const Face fa = K.to_face(a), fb = K.to_face(b);
        return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
    });
    return out;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& K) {
    std::vector<Face> out;
    for (Mask m : minimal_nonface_masks(K)) out.push_back(K.to_face(m));
    return out;
}

SimplicialComplex cyclic_boundary(int m, int n) {
    if (n < 2) throw InvalidInput("cyclic_boundary needs n >= 2");
    if (m <= n) throw InvalidInput("cyclic_boundary needs m >= n + 1");
    if (m > static_cast<int>(kMaxGroundSize)) throw BoundExceeded("cyclic_boundary: m > 64");

    std::vector<Face> facets;
    // Enumerate n-subsets of [m] in lexicographic order.
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        std::vector<bool> in(static_cast<std::size_t>(m) + 1, false);
        for (int v : idx) in[static_cast<std::size_t>(v)] = true;
        bool even = true;
        int prev_gap = 0;  // last vertex outside S
        int between = 0;   // members of S seen since prev_gap
        for (int v = 1; v <= m && even; ++v) {
            if (in[static_cast<std::size_t>(v)]) {
                ++between;
            } else {
                if (prev_gap != 0 && between % 2 != 0) even = false;
                prev_gap = v;
                between = 0;
            }
        }
        if (even) facets.emplace_back(idx.begin(), idx.end());

        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - n + pos + 1) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int t = pos + 1; t < n; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t) - 1] + 1;
    }
    nlohmann::json meta = {{"type", "cyclic"}, {"m", m}, {"n", n}};
    return SimplicialComplex::on_range(static_cast<std::size_t>(m), std::move(facets),
                                       std::move(meta));
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& K) {
    std::vector<std::uint64_t> f;
    for (const auto& layer : enumerate_faces(K)) f.push_back(layer.size());
    return f;
}

namespace {

std::vector<Mask> adjacency(const SimplicialComplex& K) {
    std::vector<Mask> adj(K.num_vertices(), 0);
    for (Mask f : K.facet_masks()) {
        for (Mask a = f; a; a &= a - 1) {
            const int u = __builtin_ctzll(a);
            adj[static_cast<std::size_t>(u)] |= f & ~(Mask{1} << u);
        }
    }
    return adj;
}

// Maximum cardinality search followed by the perfect-elimination test.
bool has_perfect_elimination_order(const std::vector<Mask>& adj) {
    const std::size_t n = adj.size();
    std::vector<int> weight(n, 0);
    std::vector<int> order_pos(n, -1);
    std::vector<std::size_t> order;  // visit order; reverse is a PEO iff chordal
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (order_pos[v] < 0 && (best == n || weight[v] > weight[best])) best = v;
        order_pos[best] = static_cast<int>(step);
        order.push_back(best);
        for (Mask nb = adj[best]; nb; nb &= nb - 1) {
            const auto u = static_cast<std::size_t>(__builtin_ctzll(nb));
            if (order_pos[u] < 0) ++weight[u];
        }
    }
    // For each v, its earlier-visited neighbours must form a clique.
    for (std::size_t v : order) {
        Mask earlier = 0;
        for (Mask nb = adj[v]; nb; nb &= nb - 1) {
            const auto u = static_cast<std::size_t>(__builtin_ctzll(nb));
            if (order_pos[u] < order_pos[v]) earlier |= Mask{1} << u;
        }
        if (earlier == 0) continue;
        // The latest-visited earlier neighbour must be adjacent to the rest.
        std::size_t parent = n;
        for (Mask e = earlier; e; e &= e - 1) {
            const auto u = static_cast<std::size_t>(__builtin_ctzll(e));
            if (parent == n || order_pos[u] > order_pos[parent]) parent = u;
        }
        const Mask rest = earlier & ~(Mask{1} << parent);
        if ((rest & ~adj[parent]) != 0) return false;
    }
    return true;
}

// Shortest a-b path avoiding `blocked`; empty when disconnected.
std::vector<std::size_t> shortest_path(const std::vector<Mask>& adj, std::size_t a,
                                       std::size_t b, Mask blocked) {
    std::vector<int> parent(adj.size(), -1);
    std::deque<std::size_t> queue{a};
    Mask visited = (Mask{1} << a) | blocked;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        if (u == b) break;
        for (Mask nb = adj[u] & ~visited; nb; nb &= nb - 1) {
            const auto w = static_cast<std::size_t>(__builtin_ctzll(nb));
            visited |= Mask{1} << w;
            parent[w] = static_cast<int>(u);
            queue.push_back(w);
        }
    }
    if (parent[b] < 0) return {};
    std::vector<std::size_t> path{b};
    while (path.back() != a) path.push_back(static_cast<std::size_t>(parent[path.back()]));
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

ChordalityResult one_skeleton_chordal(const SimplicialComplex& K) {
    const auto adj = adjacency(K);
    ChordalityResult result;
    result.chordal = has_perfect_elimination_order(adj);
    if (result.chordal) return result;

    // A vertex v with non-adjacent neighbours a, b joined by a path outside
    // N[v] \ {a, b} closes an induced cycle of length >= 4.
    const std::size_t n = adj.size();
    for (std::size_t v = 0; v < n; ++v) {
        for (Mask na = adj[v]; na; na &= na - 1) {
            const auto a = static_cast<std::size_t>(__builtin_ctzll(na));
            for (Mask nb = adj[v] & ~((Mask{2} << a) - 1); nb; nb &= nb - 1) {
                const auto b = static_cast<std::size_t>(__builtin_ctzll(nb));
                if ((adj[a] >> b) & 1) continue;
                const Mask blocked = (adj[v] | (Mask{1} << v)) & ~(Mask{1} << a) & ~(Mask{1} << b);
                auto path = shortest_path(adj, a, b, blocked);
                if (path.empty()) continue;
                std::vector<std::size_t> cycle{v};
                cycle.insert(cycle.end(), path.begin(), path.end());
                // Normalize: rotate to the smallest position, walk towards the
                // smaller neighbour.
                auto min_it = std::min_element(cycle.begin(), cycle.end());
                std::rotate(cycle.begin(), min_it, cycle.end());
                if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
                std::vector<Label> labels;
                for (std::size_t p : cycle) labels.push_back(K.ground()[p]);
                result.induced_cycle = std::move(labels);
                return result;
            }
        }
    }
    return result;
}

}  // namespace sring
