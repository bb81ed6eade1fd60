#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wradius/bounds.hpp"
#include "wradius/matrix.hpp"

namespace wradius {

/// Seeded matrix families used by the verification harness.
enum class EnsembleKind { gaussian, nilpotent, normal, positive, shift };

const char* ensemble_name(EnsembleKind kind);
std::optional<EnsembleKind> parse_ensemble(const std::string& name);

/// Deterministic recipe for a batch of block matrices: one PRNG stream
/// seeded once, matrices drawn in index order, so identical specs produce
/// identical entries.
struct EnsembleSpec {
    std::uint64_t seed = 42;
    std::size_t count = 100;
    std::size_t n = 2;
    std::size_t d = 2;
    EnsembleKind ensemble = EnsembleKind::gaussian;
};

/// Draws from one mt19937_64 stream. Uniform doubles come from the raw 53
/// high bits and normals from a Box-Muller transform, so the byte stream
/// depends only on the seed, not on library distribution internals.
class MatrixSampler {
public:
    explicit MatrixSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform01();
    double gaussian();
    Complex complex_gaussian();

    /// One unit vector, complex Gaussian direction.
    std::vector<Complex> unit_vector(std::size_t dim);

    /// One matrix from the family:
    ///   gaussian   entries (g + i g') / sqrt(2)
    ///   nilpotent  strictly upper triangular gaussian
    ///   normal     U diag(complex gaussian) U* for a random unitary U
    ///   positive   G* G for a gaussian G
    ///   shift      superdiagonal |gaussian| weights, zero elsewhere
    ComplexMatrix dense(EnsembleKind kind, std::size_t dim);

    /// n x n grid of d x d blocks, each drawn as dense(kind, d).
    BlockOperatorMatrix block_matrix(EnsembleKind kind, std::size_t n, std::size_t d);

private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::vector<BlockOperatorMatrix> make_ensemble(const EnsembleSpec& spec);

}  // namespace wradius
