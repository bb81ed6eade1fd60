#include "wradius/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "wradius/bounds.hpp"
#include "wradius/eig.hpp"
#include "wradius/io.hpp"
#include "wradius/radius.hpp"
#include "wradius/specfun.hpp"

namespace wradius {

namespace {

/// Collects assertion results for one property; keeps only the first
/// failure's description since one reproducible witness is enough.
class Recorder {
public:
    explicit Recorder(std::string name) { out_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++out_.checked;
        if (!ok) {
            ++out_.violations;
            if (out_.detail.empty()) {
                out_.detail = describe();
            }
        }
    }

    PropertyOutcome take() { return std::move(out_); }

private:
    PropertyOutcome out_;
};

std::string witness(const EnsembleSpec& spec, std::size_t index, const std::string& what,
                    const std::string& matrix_json) {
    char head[160];
    std::snprintf(head, sizeof(head), "seed=%llu index=%zu: ",
                  static_cast<unsigned long long>(spec.seed), index);
    return std::string(head) + what + "; matrix " + matrix_json;
}

std::string fmt1(const char* pattern, double a) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a);
    return buf;
}

std::string fmt2(const char* pattern, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

ComplexMatrix entrywise_abs(const ComplexMatrix& a) {
    ComplexMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m(i, j) = Complex(std::abs(a(i, j)), 0.0);
        }
    }
    return m;
}

/// [[0, A], [B, 0]] as a flat matrix (zero blocks on the diagonal).
ComplexMatrix corner_matrix(const ComplexMatrix& a, const ComplexMatrix& b) {
    BlockOperatorMatrix z(2, a.rows());
    z.block(0, 1) = a;
    z.block(1, 0) = b;
    return z.flatten();
}

double cycled_t(MatrixSampler& sampler, std::size_t index) {
    if (index % 7 == 0) {
        return 0.0;
    }
    if (index % 7 == 1) {
        return 1.0;
    }
    return sampler.uniform01();
}

PropertyOutcome prop_enclosure_order(const EnsembleSpec& spec) {
    Recorder rec("radius.enclosure_order");
    const auto batch = make_ensemble(spec);
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const ComplexMatrix flat = batch[k].flatten();
        const Enclosure w = numerical_radius(flat);
        const Enclosure nrm = operator_norm(flat);
        const bool ok = w.hi >= 0.5 * nrm.lo - 1e-12 && w.lo <= nrm.hi + 1e-12;
        rec.check(ok, [&] {
            return witness(spec, k,
                           fmt2("radius [%.17g, %.17g] escapes [norm/2, norm]", w.lo, w.hi) +
                               fmt2(" with norm in [%.17g, %.17g]", nrm.lo, nrm.hi),
                           serialize(batch[k]));
        });
    }
    return rec.take();
}

PropertyOutcome prop_rotation_invariance(const EnsembleSpec& spec) {
    Recorder rec("radius.rotation_invariance");
    MatrixSampler sampler(spec.seed);
    for (std::size_t k = 0; k < spec.count; ++k) {
        const BlockOperatorMatrix b = sampler.block_matrix(spec.ensemble, spec.n, spec.d);
        const ComplexMatrix flat = b.flatten();
        const double phi = 2.0 * std::numbers::pi * sampler.uniform01();
        const ComplexMatrix rotated = std::polar(1.0, phi) * flat;
        const double tol = 1e-8 * (1.0 + operator_norm(flat).hi);
        const Enclosure w0 = numerical_radius(flat, tol);
        const Enclosure w1 = numerical_radius(rotated, tol);
        const bool ok = overlap(w0, w1) && std::abs(w0.mid() - w1.mid()) <= 2.0 * tol;
        rec.check(ok, [&] {
            return witness(spec, k,
                           fmt2("rotated radius [%.17g, %.17g]", w1.lo, w1.hi) +
                               fmt2(" disagrees with [%.17g, %.17g]", w0.lo, w0.hi),
                           serialize(b));
        });
    }
    return rec.take();
}

PropertyOutcome prop_crosscheck_nonneg(const EnsembleSpec& spec) {
    Recorder rec("radius.crosscheck_nonneg");
    const auto batch = make_ensemble(spec);
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const ComplexMatrix m = entrywise_abs(batch[k].flatten());
        rec.check(crosscheck(m), [&] {
            return witness(spec, k, "fast path and sweep enclosures disagree", serialize(m));
        });
    }
    return rec.take();
}

PropertyOutcome prop_normal_matches_norm(const EnsembleSpec& spec) {
    Recorder rec("radius.normal_matches_norm");
    MatrixSampler sampler(spec.seed);
    for (std::size_t k = 0; k < spec.count; ++k) {
        const ComplexMatrix m = sampler.dense(EnsembleKind::normal, spec.d);
        const Enclosure w = numerical_radius(m);
        const Enclosure nrm = operator_norm(m);
        rec.check(overlap(w, nrm), [&] {
            return witness(spec, k,
                           fmt2("normal matrix radius [%.17g, %.17g]", w.lo, w.hi) +
                               fmt2(" misses norm [%.17g, %.17g]", nrm.lo, nrm.hi),
                           serialize(m));
        });
    }
    return rec.take();
}

PropertyOutcome prop_square_zero_half_norm(const EnsembleSpec& spec) {
    Recorder rec("radius.square_zero_half_norm");
    const auto batch = make_ensemble(spec);
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const ComplexMatrix m = batch[k].flatten();
        const ComplexMatrix z = corner_matrix(m, ComplexMatrix(m.rows(), m.cols()));
        const Enclosure w = numerical_radius(z);
        const Enclosure nrm = operator_norm(m);
        const Enclosure half{0.5 * nrm.lo, 0.5 * nrm.hi, nrm.kind};
        rec.check(overlap(w, half), [&] {
            return witness(spec, k,
                           fmt2("corner-embedding radius [%.17g, %.17g]", w.lo, w.hi) +
                               fmt2(" misses half norm [%.17g, %.17g]", half.lo, half.hi),
                           serialize(batch[k]));
        });
    }
    return rec.take();
}

PropertyOutcome prop_factorization(const EnsembleSpec& spec) {
    Recorder rec("specfun.factorization");
    MatrixSampler sampler(spec.seed);
    for (std::size_t k = 0; k < spec.count; ++k) {
        const ComplexMatrix a = sampler.dense(spec.ensemble, spec.d);
        const double t = cycled_t(sampler, k);
        const ContractionFactorization cf = contraction_factorization(a, FunctionPair::power(t));
        const ComplexMatrix lhs =
            matmul(PsdEig(cf.abs_a_star).apply(cf.pair.g),
                   matmul(cf.k, PsdEig(cf.abs_a).apply(cf.pair.f)));
        const double residual = frobenius_norm(lhs - a);
        const double knorm = operator_norm(cf.k).hi;
        const ComplexMatrix abs_k = psd_power(matmul(adjoint(cf.k), cf.k), 0.5);
        const double idem = frobenius_norm(matmul(abs_k, abs_k) - abs_k);
        const bool ok = residual <= 1e-8 * (1.0 + frobenius_norm(a)) && knorm <= 1.0 + 1e-10 &&
                        idem <= 1e-8;
        rec.check(ok, [&] {
            return witness(spec, k,
                           fmt2("factorization residual %.3g (contraction norm %.17g)", residual,
                                knorm) +
                               fmt2(", |K| idempotency defect %.3g at t=%.17g", idem, t),
                           serialize(a));
        });
    }
    return rec.take();
}

PropertyOutcome prop_lemma_inequality(const EnsembleSpec& spec) {
    Recorder rec("specfun.lemma_inequality");
    MatrixSampler sampler(spec.seed);
    for (std::size_t k = 0; k < spec.count; ++k) {
        const ComplexMatrix a = sampler.dense(spec.ensemble, spec.d);
        const double t = cycled_t(sampler, k);
        const auto x = sampler.unit_vector(spec.d);
        const auto y = sampler.unit_vector(spec.d);
        rec.check(lemma_inequality_check(a, FunctionPair::power(t), x, y), [&] {
            return witness(spec, k, fmt1("sesquilinear bound fails at t=%.17g", t),
                           serialize(a));
        });
    }
    return rec.take();
}

PropertyOutcome prop_power_split(const EnsembleSpec& spec) {
    Recorder rec("specfun.power_split");
    MatrixSampler sampler(spec.seed);
    for (std::size_t k = 0; k < spec.count; ++k) {
        const ComplexMatrix p = sampler.dense(EnsembleKind::positive, spec.d);
        const double s = cycled_t(sampler, k);
        const double defect =
            frobenius_norm(matmul(psd_power(p, s), psd_power(p, 1.0 - s)) - p);
        rec.check(defect <= 1e-8 * (1.0 + frobenius_norm(p)), [&] {
            return witness(spec, k, fmt2("P^s P^(1-s) defect %.3g at s=%.17g", defect, s),
                           serialize(p));
        });
    }
    return rec.take();
}

PropertyOutcome prop_bounds_soundness(const EnsembleSpec& spec) {
    Recorder rec("bounds.soundness");
    const auto batch = make_ensemble(spec);
    const std::vector<double> ts = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const Enclosure w = numerical_radius(batch[k].flatten());
        for (BoundTag tag : all_bound_tags()) {
            const std::vector<double> grid = tag_requires_t(tag) ? ts : std::vector<double>{0.5};
            for (double t : grid) {
                BoundId id{tag, std::nullopt};
                if (tag_requires_t(tag)) {
                    id.t = t;
                }
                const BoundResult r = evaluate_bound(batch[k], id);
                rec.check(r.value.hi >= w.lo - 1e-8, [&] {
                    return witness(spec, k,
                                   std::string(tag_name(tag)) +
                                       fmt2(" value %.17g below radius lower bound %.17g",
                                            r.value.hi, w.lo) +
                                       fmt1(" (t=%.3g)", t),
                                   serialize(batch[k]));
                });
            }
        }
    }
    return rec.take();
}

PropertyOutcome prop_refinement_chain(const EnsembleSpec& spec) {
    Recorder rec("bounds.refinement_chain");
    const auto batch = make_ensemble(spec);
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const double v_rem12 = evaluate_bound(batch[k], {BoundTag::rem12_i, std::nullopt}).value.hi;
        const double v_sqrt =
            evaluate_bound(batch[k], {BoundTag::bhunia_sqrt, std::nullopt}).value.hi;
        const double v_aok = evaluate_bound(batch[k], {BoundTag::aok, std::nullopt}).value.hi;
        const double v_hd = evaluate_bound(batch[k], {BoundTag::hou_du, std::nullopt}).value.hi;
        const bool ok =
            v_rem12 <= v_sqrt + 1e-8 && v_sqrt <= v_aok + 1e-8 && v_aok <= v_hd + 1e-8;
        rec.check(ok, [&] {
            return witness(spec, k,
                           fmt2("chain break: rem12_i=%.17g bhunia_sqrt=%.17g", v_rem12, v_sqrt) +
                               fmt2(" aok=%.17g hou_du=%.17g", v_aok, v_hd),
                           serialize(batch[k]));
        });
    }
    return rec.take();
}

PropertyOutcome prop_cor_entry_dominance(const EnsembleSpec& spec) {
    Recorder rec("bounds.cor_entry_dominance");
    const auto batch = make_ensemble(spec);
    const std::vector<double> ts = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const ComplexMatrix ref = aux_matrix(batch[k], {BoundTag::aok, std::nullopt});
        for (double t : ts) {
            const ComplexMatrix aux = aux_matrix(batch[k], {BoundTag::cor1_1, t});
            for (std::size_t i = 0; i < aux.rows(); ++i) {
                for (std::size_t j = 0; j < aux.cols(); ++j) {
                    if (i == j) {
                        continue;
                    }
                    rec.check(aux(i, j).real() <= ref(i, j).real() + 1e-10, [&] {
                        return witness(
                            spec, k,
                            fmt2("cor1_1 entry %.17g exceeds block norm %.17g", aux(i, j).real(),
                                 ref(i, j).real()) +
                                fmt2(" at t=%.3g, entry row %.0f", t, static_cast<double>(i)),
                            serialize(batch[k]));
                    });
                }
            }
        }
    }
    return rec.take();
}

PropertyOutcome prop_exact_identities(const EnsembleSpec& spec) {
    Recorder rec("bounds.exact_identities");
    MatrixSampler sampler(spec.seed);
    for (std::size_t k = 0; k < spec.count; ++k) {
        const ComplexMatrix a = sampler.dense(spec.ensemble, spec.d);
        const ComplexMatrix b = sampler.dense(spec.ensemble, spec.d);
        const double slack = 1e-9 * (1.0 + operator_norm(a).hi + operator_norm(b).hi);

        const Enclosure w_corner = numerical_radius(corner_matrix(a, ComplexMatrix(spec.d, spec.d)));
        const Enclosure nrm_a = operator_norm(a);
        rec.check(w_corner.hi >= 0.5 * nrm_a.lo - slack && w_corner.lo <= 0.5 * nrm_a.hi + slack,
                  [&] {
                      return witness(spec, k,
                                     fmt2("[[0,A],[0,0]] radius [%.17g, %.17g] != ||A||/2",
                                          w_corner.lo, w_corner.hi),
                                     serialize(a));
                  });

        const Enclosure w_sym = numerical_radius(corner_matrix(a, adjoint(a)));
        rec.check(w_sym.hi >= nrm_a.lo - slack && w_sym.lo <= nrm_a.hi + slack, [&] {
            return witness(spec, k,
                           fmt2("[[0,A],[A*,0]] radius [%.17g, %.17g] != ||A||", w_sym.lo,
                                w_sym.hi),
                           serialize(a));
        });

        const ComplexMatrix p = sampler.dense(EnsembleKind::positive, spec.d);
        const ComplexMatrix q = sampler.dense(EnsembleKind::positive, spec.d);
        const Enclosure w_psd = numerical_radius(corner_matrix(p, q));
        const Enclosure nrm_pq = operator_norm(p + q);
        const double psd_slack = 1e-9 * (1.0 + nrm_pq.hi);
        rec.check(
            w_psd.hi >= 0.5 * nrm_pq.lo - psd_slack && w_psd.lo <= 0.5 * nrm_pq.hi + psd_slack,
            [&] {
                return witness(spec, k,
                               fmt2("psd corner radius [%.17g, %.17g] != ||P+Q||/2", w_psd.lo,
                                    w_psd.hi),
                               serialize(p));
            });

        const Enclosure w_gen = numerical_radius(corner_matrix(a, adjoint(b)));
        const double lower = lower_bound_sum(a, b);
        rec.check(lower <= w_gen.hi + 1e-8, [&] {
            return witness(spec, k,
                           fmt2("||A+B||/2 = %.17g exceeds corner radius %.17g", lower, w_gen.hi),
                           serialize(a));
        });
    }
    return rec.take();
}

PropertyOutcome prop_roundtrip(const EnsembleSpec& spec) {
    Recorder rec("harness.roundtrip");
    const auto batch = make_ensemble(spec);
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const std::string once = serialize(batch[k]);
        const std::string twice = serialize(parse_matrix_file(once));
        rec.check(once == twice, [&] {
            return witness(spec, k, "block reserialization differs", once);
        });
        const std::string dense_once = serialize(batch[k].flatten());
        const std::string dense_twice = serialize(parse_matrix_file(dense_once));
        rec.check(dense_once == dense_twice, [&] {
            return witness(spec, k, "dense reserialization differs", dense_once);
        });
    }
    return rec.take();
}

}  // namespace

bool VerificationReport::ok() const { return total_violations() == 0; }

std::size_t VerificationReport::total_violations() const {
    std::size_t total = 0;
    for (const PropertyOutcome& outcome : outcomes) {
        total += outcome.violations;
    }
    return total;
}

VerificationReport run_verification(const EnsembleSpec& spec) {
    VerificationReport report;
    report.spec = spec;
    report.outcomes.push_back(prop_enclosure_order(spec));
    report.outcomes.push_back(prop_rotation_invariance(spec));
    report.outcomes.push_back(prop_crosscheck_nonneg(spec));
    report.outcomes.push_back(prop_normal_matches_norm(spec));
    report.outcomes.push_back(prop_square_zero_half_norm(spec));
    report.outcomes.push_back(prop_factorization(spec));
    report.outcomes.push_back(prop_lemma_inequality(spec));
    report.outcomes.push_back(prop_power_split(spec));
    report.outcomes.push_back(prop_bounds_soundness(spec));
    report.outcomes.push_back(prop_refinement_chain(spec));
    report.outcomes.push_back(prop_cor_entry_dominance(spec));
    report.outcomes.push_back(prop_exact_identities(spec));
    report.outcomes.push_back(prop_roundtrip(spec));
    return report;
}

std::string verification_summary(const VerificationReport& report) {
    std::string out;
    char head[160];
    std::snprintf(head, sizeof(head),
                  "ensemble=%s seed=%llu count=%zu n=%zu d=%zu\n",
                  ensemble_name(report.spec.ensemble),
                  static_cast<unsigned long long>(report.spec.seed), report.spec.count,
                  report.spec.n, report.spec.d);
    out += head;
    for (const PropertyOutcome& outcome : report.outcomes) {
        char line[200];
        std::snprintf(line, sizeof(line), "[%s] %-28s checked=%-6zu violations=%zu\n",
                      outcome.violations == 0 ? " OK " : "FAIL", outcome.name.c_str(),
                      outcome.checked, outcome.violations);
        out += line;
        if (!outcome.detail.empty()) {
            out += "       first: " + outcome.detail + "\n";
        }
    }
    out += report.ok() ? "all properties hold\n" : "PROPERTY VIOLATIONS FOUND\n";
    return out;
}

}  // namespace wradius
