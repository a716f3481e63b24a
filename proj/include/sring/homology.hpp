#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <json.hpp>

#include "sring/complex.hpp"
#include "sring/linalg.hpp"

namespace sring {

enum class Coefficients { Rational, Integer };

/// Augmented simplicial chain complex of K. faces[p+1] lists the p-faces in
/// lexicographic order (faces[0] = {∅}); boundary[p] maps p-chains to
/// (p-1)-chains, with row indices into faces[p] and the sign of a term given
/// by the parity of the omitted vertex's position.
struct ChainBoundaryStack {
    struct Matrix {
        std::size_t rows = 0;
        std::vector<SparseVec<std::uint32_t, std::int64_t>> cols;
    };
    std::vector<std::vector<Mask>> faces;
    std::vector<Matrix> boundary;  // boundary[p] for p = 0..dim
};

ChainBoundaryStack boundary_matrices(const SimplicialComplex& K);

struct ReducedHomologySummary {
    /// Degrees -1..dim(K), zeros included.
    std::map<int, std::uint64_t> ranks;
    /// Invariant factors > 1, only for degrees that have any.
    std::map<int, std::vector<BigInt>> torsion;

    std::uint64_t rank(int degree) const;
    bool has_torsion() const { return !torsion.empty(); }
    bool is_trivial() const;

    friend bool operator==(const ReducedHomologySummary&, const ReducedHomologySummary&) = default;
};

nlohmann::json homology_to_json(const ReducedHomologySummary& h);

/// Cocycle representatives of H̃^p(K) with integer entries, keyed by face
/// masks of the complex they were computed on, plus a basis of the
/// coboundary space B^p.
struct CohomologyBasis {
    int degree = 0;
    std::vector<SparseVec<Mask, BigInt>> representatives;
    std::vector<SparseVec<Mask, BigInt>> coboundaries;
    std::size_t rank() const { return representatives.size(); }
};

/// Face lattice of one complex, indexed once so that homology of any full
/// subcomplex K_J can be computed without rebuilding faces. Immutable after
/// construction; queries are safe to run concurrently.
class SubcomplexHomology {
public:
    explicit SubcomplexHomology(const SimplicialComplex& K);

    const SimplicialComplex& complex() const noexcept { return K_; }
    int dimension() const noexcept { return top_; }

    /// Reduced rational Betti numbers of K_J; element p+1 is dim H̃_p for
    /// p = -1..dim K.
    std::vector<std::uint32_t> rational_betti(Mask J) const;

    /// Reduced integral homology of K_J (free ranks and invariant factors).
    ReducedHomologySummary integer_homology(Mask J) const;

    /// Rational cohomology basis of K_J in degree p (cochains keyed by masks
    /// of K's ground positions).
    CohomologyBasis cohomology_basis(Mask J, int p) const;

    /// Faces of K_J of dimension p, lexicographic.
    std::vector<Mask> faces_in(Mask J, int p) const;

    /// Largest dimension of a face of K_J.
    int subcomplex_dimension(Mask J) const;

    struct Lattice;

private:
    SimplicialComplex K_;
    int top_ = -1;
    std::shared_ptr<const Lattice> lattice_;
};

ReducedHomologySummary reduced_homology(const SimplicialComplex& K, Coefficients coeff);

CohomologyBasis cohomology_basis(const SimplicialComplex& K, int p);

/// True iff H̃_*(K; Z) has no torsion (K itself only; see
/// hochster_torsion_free for all full subcomplexes).
bool is_torsion_free(const SimplicialComplex& K);

/// Reduced Euler characteristic Σ (-1)^p f_p for p >= -1.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& K);

}  // namespace sring
