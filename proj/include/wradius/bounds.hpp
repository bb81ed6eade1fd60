#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wradius/enclosure.hpp"
#include "wradius/matrix.hpp"

namespace wradius {

/// n x n grid of square d x d blocks, the operator matrix (A_ij).
class BlockOperatorMatrix {
public:
    /// Zero blocks everywhere.
    BlockOperatorMatrix(std::size_t n, std::size_t d);

    /// Row-major grid of blocks; every block must be d x d with one common d.
    static BlockOperatorMatrix from_blocks(const std::vector<std::vector<ComplexMatrix>>& rows);

    std::size_t grid_size() const noexcept { return n_; }
    std::size_t block_dim() const noexcept { return d_; }

    ComplexMatrix& block(std::size_t i, std::size_t j) { return blocks_[i * n_ + j]; }
    const ComplexMatrix& block(std::size_t i, std::size_t j) const { return blocks_[i * n_ + j]; }

    /// The underlying (n d) x (n d) matrix.
    ComplexMatrix flatten() const;

private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<ComplexMatrix> blocks_;
};

/// Catalogue of auxiliary-matrix bounds for block operator matrices. Values
/// are the CLI identifiers. Tags rem2_i, rem2_ii, cor1_1, cor2, cor3 need a
/// parameter t in [0, 1]; rem12_i and rem12_ii minimize per entry over t.
enum class BoundTag {
    hou_du,
    aok,
    bhunia_sqrt,
    rem2_i,
    rem2_ii,
    rem12_i,
    rem12_ii,
    cor1_1,
    cor2,
    cor3,
    prop4,
};

const std::vector<BoundTag>& all_bound_tags();
const char* tag_name(BoundTag tag);
std::optional<BoundTag> parse_bound_tag(const std::string& name);
bool tag_requires_t(BoundTag tag);

struct BoundId {
    BoundTag tag;
    std::optional<double> t;
};

/// Per-entry record of a minimization over t.
struct EntryArgmin {
    std::size_t i = 0;
    std::size_t j = 0;
    double t = 0.0;
    double entry = 0.0;
};

/// One evaluated bound: its nonnegative auxiliary matrix and the certified
/// numerical radius of that matrix, which is the bound value.
struct BoundResult {
    std::string label;
    std::map<std::string, double> params;
    ComplexMatrix aux;
    Enclosure value;
    std::vector<EntryArgmin> entry_argmin;
};

/// Auxiliary matrix of the given catalogue bound. Diagonal entries are
/// certified radii of the diagonal blocks rounded up (norms for hou_du);
/// off-diagonal entries are the tag's block-norm formula.
ComplexMatrix aux_matrix(const BlockOperatorMatrix& a, const BoundId& id);

/// aux_matrix plus its fast-path radius. rem12 tags route through
/// minimize_over_t.
BoundResult evaluate_bound(const BlockOperatorMatrix& a, const BoundId& id);

/// Entrywise independent minimization over t in [0, 1] (uniform grid of 201
/// points, golden-section refinement around the best cell) for the rem2_i or
/// rem2_ii entry formulas. Records the per-entry argmin.
BoundResult minimize_over_t(const BlockOperatorMatrix& a, BoundTag family);

/// Bounds for the off-diagonal two-block matrix [[0, A], [B, 0]].
BoundResult two_block_prop5(const ComplexMatrix& a, const ComplexMatrix& b, double t);
BoundResult two_block_min(const ComplexMatrix& a, const ComplexMatrix& b);
/// Full two-block matrix [[C, A], [B, D]].
BoundResult two_block_full(const ComplexMatrix& c, const ComplexMatrix& a,
                           const ComplexMatrix& b, const ComplexMatrix& d);

/// Single-operator bounds.
BoundResult single_op_prop1(const ComplexMatrix& a, double t);
BoundResult single_op_prop1_min(const ComplexMatrix& a);
BoundResult single_op_p112(const ComplexMatrix& a, double t);
BoundResult single_op_kittaneh_sum(const ComplexMatrix& a);
BoundResult single_op_kittaneh_sq(const ComplexMatrix& a);

/// w(A B) <= || |A|^2t + |B*|^2t || * || |A*|^2(1-t) + |B|^2(1-t) || / 4.
BoundResult product_bound(const ComplexMatrix& a, const ComplexMatrix& b, double t);

/// Bounds for w(A B +/- C D), each product term minimized over t separately.
/// th3 pairs like exponents, th4 the mixed ones.
enum class SumProductVariant { th3, th4 };
BoundResult sum_product_bound(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& c, const ComplexMatrix& d,
                              SumProductVariant variant);

/// Bound for max(w(AB + BA), w(AB - BA)); the sum-product bound at C = B,
/// D = A.
BoundResult commutator_bound(const ComplexMatrix& a, const ComplexMatrix& b);

/// Fixed-t evaluation of the commutator bound (no minimization).
double commutator_bound_at(const ComplexMatrix& a, const ComplexMatrix& b, double t);

/// ||A + B|| / 2, a lower bound for w([[0, A], [B*, 0]]).
double lower_bound_sum(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace wradius
