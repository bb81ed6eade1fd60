#include "wradius/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "wradius/eig.hpp"
#include "wradius/minimize.hpp"
#include "wradius/radius.hpp"
#include "wradius/specfun.hpp"

namespace wradius {

BlockOperatorMatrix::BlockOperatorMatrix(std::size_t n, std::size_t d) : n_(n), d_(d) {
    if (n == 0 || d == 0) {
        throw DimensionError("block matrix dimensions must be positive");
    }
    blocks_.assign(n * n, ComplexMatrix(d, d));
}

BlockOperatorMatrix BlockOperatorMatrix::from_blocks(
    const std::vector<std::vector<ComplexMatrix>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) {
        throw DimensionError("block matrix dimensions must be positive");
    }
    const ComplexMatrix& first = rows.front().empty() ? ComplexMatrix() : rows.front().front();
    if (first.rows() == 0 || first.rows() != first.cols()) {
        throw DimensionError("blocks must be square");
    }
    const std::size_t d = first.rows();
    BlockOperatorMatrix out(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw DimensionError("block grid must be square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j].rows() != d || rows[i][j].cols() != d) {
                throw DimensionError("blocks must all be square with one common dimension");
            }
            out.block(i, j) = rows[i][j];
        }
    }
    return out;
}

ComplexMatrix BlockOperatorMatrix::flatten() const {
    ComplexMatrix m(n_ * d_, n_ * d_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const ComplexMatrix& blk = block(i, j);
            for (std::size_t r = 0; r < d_; ++r) {
                for (std::size_t c = 0; c < d_; ++c) {
                    m(i * d_ + r, j * d_ + c) = blk(r, c);
                }
            }
        }
    }
    return m;
}

const std::vector<BoundTag>& all_bound_tags() {
    static const std::vector<BoundTag> tags = {
        BoundTag::hou_du,  BoundTag::aok,      BoundTag::bhunia_sqrt, BoundTag::rem2_i,
        BoundTag::rem2_ii, BoundTag::rem12_i,  BoundTag::rem12_ii,    BoundTag::cor1_1,
        BoundTag::cor2,    BoundTag::cor3,     BoundTag::prop4,
    };
    return tags;
}

const char* tag_name(BoundTag tag) {
    switch (tag) {
        case BoundTag::hou_du:
            return "hou_du";
        case BoundTag::aok:
            return "aok";
        case BoundTag::bhunia_sqrt:
            return "bhunia_sqrt";
        case BoundTag::rem2_i:
            return "rem2_i";
        case BoundTag::rem2_ii:
            return "rem2_ii";
        case BoundTag::rem12_i:
            return "rem12_i";
        case BoundTag::rem12_ii:
            return "rem12_ii";
        case BoundTag::cor1_1:
            return "cor1_1";
        case BoundTag::cor2:
            return "cor2";
        case BoundTag::cor3:
            return "cor3";
        case BoundTag::prop4:
            return "prop4";
    }
    return "";
}

std::optional<BoundTag> parse_bound_tag(const std::string& name) {
    for (BoundTag tag : all_bound_tags()) {
        if (name == tag_name(tag)) {
            return tag;
        }
    }
    return std::nullopt;
}

bool tag_requires_t(BoundTag tag) {
    switch (tag) {
        case BoundTag::rem2_i:
        case BoundTag::rem2_ii:
        case BoundTag::cor1_1:
        case BoundTag::cor2:
        case BoundTag::cor3:
            return true;
        default:
            return false;
    }
}

namespace {

double opnorm_hi(const ComplexMatrix& m) {
    return operator_norm(m).hi;
}

// Radius of a diagonal block, rounded up so the auxiliary matrix stays an
// upper bound.
double w_hi(const ComplexMatrix& m) {
    return numerical_radius(m).hi;
}

void check_t(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("parameter t must lie in [0, 1]");
    }
}

double require_t(const BoundId& id) {
    if (!id.t.has_value()) {
        throw DomainError(std::string(tag_name(id.tag)) + " requires parameter t");
    }
    check_t(*id.t);
    return *id.t;
}

// Spectral data for one block: Gram eigensystems give every power of
// |X| = (X*X)^(1/2) and |X*| = (XX*)^(1/2) from a single factorization.
// |K| and |K*| of the polar contraction are attached on demand.
struct BlockData {
    BlockData(const ComplexMatrix& x)
        : gram(matmul(adjoint(x), x)), cogram(matmul(x, adjoint(x))) {}

    void attach_contraction(const ComplexMatrix& x) {
        const ComplexMatrix k = polar_isometry(x);
        abs_k = PsdEig(matmul(adjoint(k), k)).pow(0.5);
        abs_k_star = PsdEig(matmul(k, adjoint(k))).pow(0.5);
    }

    PsdEig gram;
    PsdEig cogram;
    ComplexMatrix abs_k;
    ComplexMatrix abs_k_star;
};

// gram^(e/2) * mid * gram^(e/2), the |X|^e-sandwich of a contraction modulus.
ComplexMatrix sandwich(const PsdEig& gram, double exponent, const ComplexMatrix& mid) {
    const ComplexMatrix half = gram.pow(0.5 * exponent);
    return matmul(half, matmul(mid, half));
}

double entry_rem2_i(const BlockData& ij, const BlockData& ji, double t) {
    const double first = opnorm_hi(ij.gram.pow(t) + ji.cogram.pow(t));
    const double second = opnorm_hi(ij.cogram.pow(1.0 - t) + ji.gram.pow(1.0 - t));
    return std::sqrt(first) * std::sqrt(second);
}

double entry_rem2_ii(const BlockData& ij, const BlockData& ji, double t) {
    const double first = opnorm_hi(ij.gram.pow(t) + ji.cogram.pow(1.0 - t));
    const double second = opnorm_hi(ij.cogram.pow(1.0 - t) + ji.gram.pow(t));
    return std::sqrt(first) * std::sqrt(second);
}

double entry_cor1_1(const BlockData& ij, double t) {
    const double first = opnorm_hi(sandwich(ij.gram, t, ij.abs_k));
    const double second = opnorm_hi(sandwich(ij.cogram, 1.0 - t, ij.abs_k_star));
    return std::sqrt(first) * std::sqrt(second);
}

double entry_cor2(const BlockData& ij, const BlockData& ji, double t) {
    const double first =
        opnorm_hi(sandwich(ij.gram, t, ij.abs_k) + sandwich(ji.cogram, t, ji.abs_k_star));
    const double second = opnorm_hi(sandwich(ij.cogram, 1.0 - t, ij.abs_k_star) +
                                    sandwich(ji.gram, 1.0 - t, ji.abs_k));
    return std::sqrt(first) * std::sqrt(second);
}

double entry_cor3(const BlockData& ij, const BlockData& ji, double t) {
    const double first =
        opnorm_hi(sandwich(ij.gram, t, ij.abs_k) + sandwich(ji.cogram, 1.0 - t, ji.abs_k_star));
    const double second = opnorm_hi(sandwich(ij.cogram, 1.0 - t, ij.abs_k_star) +
                                    sandwich(ji.gram, t, ji.abs_k));
    return std::sqrt(first) * std::sqrt(second);
}

double entry_prop4(const ComplexMatrix& aij, const ComplexMatrix& aji) {
    const ComplexMatrix first =
        0.5 * (matmul(adjoint(aij), aij) + matmul(aji, adjoint(aji)));
    const ComplexMatrix second =
        0.5 * (matmul(aij, adjoint(aij)) + matmul(adjoint(aji), aji));
    const double p = std::sqrt(opnorm_hi(first));
    const double q = std::sqrt(opnorm_hi(second));
    return p <= q ? p : q;  // ties keep the first operand
}

// Grid of off-diagonal BlockData, built only for the tags that need it.
std::vector<std::vector<BlockData>> build_block_data(const BlockOperatorMatrix& a,
                                                     bool with_contractions) {
    const std::size_t n = a.grid_size();
    std::vector<std::vector<BlockData>> data;
    data.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BlockData> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            row.emplace_back(a.block(i, j));
            if (with_contractions && i != j) {
                row.back().attach_contraction(a.block(i, j));
            }
        }
        data.push_back(std::move(row));
    }
    return data;
}

void fill_diagonal(ComplexMatrix& aux, const BlockOperatorMatrix& a, bool use_norm) {
    for (std::size_t i = 0; i < a.grid_size(); ++i) {
        aux(i, i) = use_norm ? opnorm_hi(a.block(i, i)) : w_hi(a.block(i, i));
    }
}

BoundResult wrap(std::string label, ComplexMatrix aux) {
    BoundResult r;
    r.label = std::move(label);
    r.aux = std::move(aux);
    r.value = w_nonneg(r.aux);
    return r;
}

}  // namespace

ComplexMatrix aux_matrix(const BlockOperatorMatrix& a, const BoundId& id) {
    const std::size_t n = a.grid_size();
    ComplexMatrix aux(n, n);

    switch (id.tag) {
        case BoundTag::hou_du: {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    aux(i, j) = opnorm_hi(a.block(i, j));
                }
            }
            return aux;
        }
        case BoundTag::aok: {
            fill_diagonal(aux, a, false);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (i != j) {
                        aux(i, j) = opnorm_hi(a.block(i, j));
                    }
                }
            }
            return aux;
        }
        case BoundTag::bhunia_sqrt: {
            return aux_matrix(a, BoundId{BoundTag::rem2_i, 0.5});
        }
        case BoundTag::rem2_i:
        case BoundTag::rem2_ii: {
            const double t = require_t(id);
            const auto data = build_block_data(a, false);
            fill_diagonal(aux, a, false);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    aux(i, j) = id.tag == BoundTag::rem2_i
                                    ? entry_rem2_i(data[i][j], data[j][i], t)
                                    : entry_rem2_ii(data[i][j], data[j][i], t);
                }
            }
            return aux;
        }
        case BoundTag::rem12_i:
        case BoundTag::rem12_ii: {
            return minimize_over_t(a, id.tag).aux;
        }
        case BoundTag::cor1_1: {
            const double t = require_t(id);
            const auto data = build_block_data(a, true);
            fill_diagonal(aux, a, false);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (i != j) {
                        aux(i, j) = entry_cor1_1(data[i][j], t);
                    }
                }
            }
            return aux;
        }
        case BoundTag::cor2:
        case BoundTag::cor3: {
            const double t = require_t(id);
            const auto data = build_block_data(a, true);
            fill_diagonal(aux, a, false);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    aux(i, j) = id.tag == BoundTag::cor2 ? entry_cor2(data[i][j], data[j][i], t)
                                                         : entry_cor3(data[i][j], data[j][i], t);
                }
            }
            return aux;
        }
        case BoundTag::prop4: {
            fill_diagonal(aux, a, false);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (i != j) {
                        aux(i, j) = entry_prop4(a.block(i, j), a.block(j, i));
                    }
                }
            }
            return aux;
        }
    }
    throw UnknownBoundError("unknown bound tag");
}

BoundResult evaluate_bound(const BlockOperatorMatrix& a, const BoundId& id) {
    if (id.tag == BoundTag::rem12_i || id.tag == BoundTag::rem12_ii) {
        return minimize_over_t(a, id.tag);
    }
    BoundResult r = wrap(tag_name(id.tag), aux_matrix(a, id));
    if (id.tag == BoundTag::bhunia_sqrt) {
        r.params["t"] = 0.5;
    } else if (id.t.has_value() && tag_requires_t(id.tag)) {
        r.params["t"] = *id.t;
    }
    return r;
}

BoundResult minimize_over_t(const BlockOperatorMatrix& a, BoundTag family) {
    if (family != BoundTag::rem12_i && family != BoundTag::rem12_ii) {
        throw UnknownBoundError("minimize_over_t supports rem12_i and rem12_ii");
    }
    const std::size_t n = a.grid_size();
    const std::size_t grid_points = 201;
    const auto data = build_block_data(a, false);

    ComplexMatrix aux(n, n);
    fill_diagonal(aux, a, false);
    BoundResult r;
    r.label = tag_name(family);
    r.params["grid_points"] = static_cast<double>(grid_points);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto entry = [&](double t) {
                return family == BoundTag::rem12_i ? entry_rem2_i(data[i][j], data[j][i], t)
                                                   : entry_rem2_ii(data[i][j], data[j][i], t);
            };
            const ScalarMin m = grid_then_golden_min(entry, 0.0, 1.0, grid_points);
            aux(i, j) = m.value;
            r.entry_argmin.push_back(EntryArgmin{i, j, m.x, m.value});
        }
    }
    r.aux = std::move(aux);
    r.value = w_nonneg(r.aux);
    return r;
}

namespace {

struct OpData {
    explicit OpData(const ComplexMatrix& x)
        : gram(matmul(adjoint(x), x)), cogram(matmul(x, adjoint(x))) {}
    PsdEig gram;
    PsdEig cogram;
};

// || |A|^2t + |B*|^2t || * || |A*|^2(1-t) + |B|^2(1-t) ||
double product_term(const OpData& a, const OpData& b, double t) {
    return opnorm_hi(a.gram.pow(t) + b.cogram.pow(t)) *
           opnorm_hi(a.cogram.pow(1.0 - t) + b.gram.pow(1.0 - t));
}

// || |A|^2t + |B*|^2(1-t) || * || |A*|^2(1-t) + |B|^2t ||
double product_term_mixed(const OpData& a, const OpData& b, double t) {
    return opnorm_hi(a.gram.pow(t) + b.cogram.pow(1.0 - t)) *
           opnorm_hi(a.cogram.pow(1.0 - t) + b.gram.pow(t));
}

ScalarMin minimize_product_term(const OpData& a, const OpData& b, bool mixed) {
    return grid_then_golden_min(
        [&](double t) { return mixed ? product_term_mixed(a, b, t) : product_term(a, b, t); },
        0.0, 1.0, 201);
}

void require_same_square(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
    require_square(a, who);
    require_square(b, who);
    require_same_shape(a, b, who);
}

BoundResult scalar_result(std::string label, double value) {
    ComplexMatrix aux(1, 1);
    aux(0, 0) = value;
    return wrap(std::move(label), std::move(aux));
}

}  // namespace

BoundResult two_block_prop5(const ComplexMatrix& a, const ComplexMatrix& b, double t) {
    require_same_square(a, b, "two_block_prop5");
    check_t(t);
    const OpData da(a);
    const OpData db(b);
    const double entry = std::sqrt(opnorm_hi(da.gram.pow(t) + db.cogram.pow(t))) *
                         std::sqrt(opnorm_hi(da.cogram.pow(1.0 - t) + db.gram.pow(1.0 - t)));
    ComplexMatrix aux(2, 2);
    aux(0, 1) = entry;
    BoundResult r = wrap("prop5", std::move(aux));
    r.params["t"] = t;
    return r;
}

BoundResult two_block_min(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_square(a, b, "two_block_min");
    const double first =
        opnorm_hi(0.5 * (matmul(adjoint(a), a) + matmul(b, adjoint(b))));
    const double second =
        opnorm_hi(0.5 * (matmul(a, adjoint(a)) + matmul(adjoint(b), b)));
    const double entry = std::sqrt(std::min(first, second));
    ComplexMatrix aux(2, 2);
    aux(0, 1) = entry;
    aux(1, 0) = entry;
    return wrap("p2_min", std::move(aux));
}

BoundResult two_block_full(const ComplexMatrix& c, const ComplexMatrix& a,
                           const ComplexMatrix& b, const ComplexMatrix& d) {
    require_same_square(a, b, "two_block_full");
    require_same_square(c, d, "two_block_full");
    require_same_shape(a, c, "two_block_full");
    const double first = opnorm_hi(matmul(adjoint(a), a) + matmul(b, adjoint(b)));
    const double second = opnorm_hi(matmul(a, adjoint(a)) + matmul(adjoint(b), b));
    const double entry = std::sqrt(0.5 * std::min(first, second));
    ComplexMatrix aux(2, 2);
    aux(0, 0) = w_hi(c);
    aux(1, 1) = w_hi(d);
    aux(0, 1) = entry;
    aux(1, 0) = entry;
    return wrap("p22", std::move(aux));
}

BoundResult single_op_prop1(const ComplexMatrix& a, double t) {
    require_square(a, "single_op_prop1");
    check_t(t);
    const OpData da(a);
    const double norm_a = opnorm_hi(a);
    const double v = std::pow(norm_a, t) * 0.5 *
                     opnorm_hi(da.gram.pow(0.5 * (1.0 - t)) + da.cogram.pow(0.5 * (1.0 - t)));
    BoundResult r = scalar_result("prop1", v);
    r.params["t"] = t;
    return r;
}

BoundResult single_op_prop1_min(const ComplexMatrix& a) {
    require_square(a, "single_op_prop1_min");
    const OpData da(a);
    const double norm_a = opnorm_hi(a);
    const auto value_at = [&](double t) {
        return std::pow(norm_a, t) * 0.5 *
               opnorm_hi(da.gram.pow(0.5 * (1.0 - t)) + da.cogram.pow(0.5 * (1.0 - t)));
    };
    const ScalarMin m = grid_then_golden_min(value_at, 0.0, 1.0, 201);
    BoundResult r = scalar_result("prop1_min", m.value);
    r.params["t"] = m.x;
    r.params["grid_points"] = 201.0;
    return r;
}

BoundResult single_op_p112(const ComplexMatrix& a, double t) {
    require_square(a, "single_op_p112");
    check_t(t);
    const OpData da(a);
    const double v = 0.5 * std::sqrt(opnorm_hi(da.gram.pow(t) + da.cogram.pow(t))) *
                     std::sqrt(opnorm_hi(da.cogram.pow(1.0 - t) + da.gram.pow(1.0 - t)));
    BoundResult r = scalar_result("p112", v);
    r.params["t"] = t;
    return r;
}

BoundResult single_op_kittaneh_sum(const ComplexMatrix& a) {
    require_square(a, "single_op_kittaneh_sum");
    const AbsFactors abs = abs_factors(a);
    return scalar_result("kittaneh_sum", 0.5 * opnorm_hi(abs.abs_a + abs.abs_a_star));
}

BoundResult single_op_kittaneh_sq(const ComplexMatrix& a) {
    require_square(a, "single_op_kittaneh_sq");
    const double v =
        std::sqrt(0.5 * opnorm_hi(matmul(adjoint(a), a) + matmul(a, adjoint(a))));
    return scalar_result("kittaneh_sq", v);
}

BoundResult product_bound(const ComplexMatrix& a, const ComplexMatrix& b, double t) {
    require_same_square(a, b, "product_bound");
    check_t(t);
    const double v = 0.25 * product_term(OpData(a), OpData(b), t);
    BoundResult r = scalar_result("cor6", v);
    r.params["t"] = t;
    return r;
}

BoundResult sum_product_bound(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& c, const ComplexMatrix& d,
                              SumProductVariant variant) {
    require_same_square(a, b, "sum_product_bound");
    require_same_square(c, d, "sum_product_bound");
    require_same_shape(a, c, "sum_product_bound");
    const bool mixed = variant == SumProductVariant::th4;
    const ScalarMin first = minimize_product_term(OpData(a), OpData(b), mixed);
    const ScalarMin second = minimize_product_term(OpData(c), OpData(d), mixed);
    BoundResult r =
        scalar_result(mixed ? "th4" : "th3", 0.25 * (first.value + second.value));
    r.params["t_ab"] = first.x;
    r.params["t_cd"] = second.x;
    return r;
}

BoundResult commutator_bound(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_square(a, b, "commutator_bound");
    const OpData da(a);
    const OpData db(b);
    const ScalarMin first = minimize_product_term(da, db, false);
    const ScalarMin second = minimize_product_term(db, da, false);
    BoundResult r = scalar_result("cor5", 0.25 * (first.value + second.value));
    r.params["t_ab"] = first.x;
    r.params["t_ba"] = second.x;
    return r;
}

double commutator_bound_at(const ComplexMatrix& a, const ComplexMatrix& b, double t) {
    require_same_square(a, b, "commutator_bound_at");
    check_t(t);
    const OpData da(a);
    const OpData db(b);
    return 0.25 * (product_term(da, db, t) + product_term(db, da, t));
}

double lower_bound_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_square(a, b, "lower_bound_sum");
    return 0.5 * opnorm_hi(a + b);
}

}  // namespace wradius
