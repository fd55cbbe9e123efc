// SPDX-License-Identifier: Apache-2.0
#include "framealias/objectives.hpp"

#include "framealias/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace framealias {
namespace {

struct EvalContext {
    Filterbank fb;                        // re-embedded at the evaluation length
    int length = 0;
    int stride = 0;
    int hop = 0;                          // L/d
    std::vector<ComplexVector> spectra;   // non-unitary filter DFTs W_j
    std::vector<ComplexVector> terms;     // aliasing terms G_n
};

EvalContext make_context(const Filterbank& fb, const ObjectiveOptions& opts) {
    EvalContext ctx;
    ctx.fb = reembed(fb, opts.ambient_length);
    ctx.length = ctx.fb.signal_length;
    ctx.stride = ctx.fb.stride;
    ctx.hop = ctx.length / ctx.stride;
    ctx.spectra = filter_spectra(ctx.fb);
    ctx.terms.assign(ctx.stride, ComplexVector(ctx.length, Complex(0.0, 0.0)));
    const double inv_d = 1.0 / static_cast<double>(ctx.stride);
    for (int n = 0; n < ctx.stride; ++n) {
        const int offset = n * ctx.hop;
        auto& term = ctx.terms[n];
        for (const auto& ws : ctx.spectra)
            for (int k = 0; k < ctx.length; ++k)
                term[k] += ws[k] * std::conj(ws[(k - offset + ctx.length) % ctx.length]);
        for (auto& v : term) v *= inv_d;
    }
    return ctx;
}

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

int argmin_real(const ComplexVector& v) {
    int best = 0;
    for (int k = 1; k < static_cast<int>(v.size()); ++k)
        if (v[k].real() < v[best].real()) best = k;
    return best;
}

int argmax_real(const ComplexVector& v) {
    int best = 0;
    for (int k = 1; k < static_cast<int>(v.size()); ++k)
        if (v[k].real() > v[best].real()) best = k;
    return best;
}

double mean_real(const ComplexVector& v) {
    double acc = 0.0;
    for (const auto& x : v) acc += x.real();
    return acc / static_cast<double>(v.size());
}

/// Accumulates the kernel gradient of sum_n <psi_n, G_n> pairings:
///   g_j[l] += (2/d) [ e^{-2 pi i n l / d} bwd(psi_n . W_j)[l]
///                     + bwd(conj(psi_n) . T_{n hop} W_j)[l] ],
/// where the sensitivities psi_n[f] are the Wirtinger derivatives of the
/// objective with respect to G_n[f] (the conjugate pair is implied by the
/// objective being real).
void accumulate_gradient(const EvalContext& ctx,
                         const std::vector<ComplexVector>& sensitivities,
                         std::vector<ComplexVector>& gradient) {
    const int length = ctx.length;
    const int kernel_size = ctx.fb.kernel_size();
    const double factor = 2.0 / static_cast<double>(ctx.stride);
    ComplexVector buffer(length);
    for (int n = 0; n < ctx.stride; ++n) {
        const auto& psi = sensitivities[n];
        if (psi.empty()) continue;
        const int offset = n * ctx.hop;
        for (std::size_t j = 0; j < ctx.spectra.size(); ++j) {
            const auto& ws = ctx.spectra[j];
            for (int k = 0; k < length; ++k) buffer[k] = psi[k] * ws[k];
            const ComplexVector first = fft::backward(buffer);
            for (int k = 0; k < length; ++k)
                buffer[k] = std::conj(psi[k]) * ws[(k - offset + length) % length];
            const ComplexVector second = fft::backward(buffer);
            for (int l = 0; l < kernel_size; ++l) {
                const double phase =
                    -2.0 * std::numbers::pi * static_cast<double>(n) * l / ctx.stride;
                gradient[j][l] += factor * (first[l] * std::polar(1.0, phase) + second[l]);
            }
        }
    }
}

ObjectiveEvaluation eval_ls_impl(const Filterbank& fb, const ObjectiveOptions& opts) {
    const Filterbank fbe = reembed(fb, opts.ambient_length);
    const FrameOperatorDense dense = frame_operator_dense(fbe);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        dense.matrix, opts.with_gradient ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    const Eigen::VectorXd eigenvalues = solver.eigenvalues();
    const int last = static_cast<int>(eigenvalues.size()) - 1;
    const double dev_low = std::abs(eigenvalues(0) - 1.0);
    const double dev_high = std::abs(eigenvalues(last) - 1.0);
    // Tie on the extremes goes to the lower index.
    const int active = dev_low >= dev_high ? 0 : last;

    ObjectiveEvaluation eval;
    eval.value = std::max(dev_low, dev_high);
    if (!opts.with_gradient) return eval;

    // Spectral-norm subgradient: sign(lambda* - 1) * d(v* S v) with v the unit
    // eigenvector of the active extreme eigenvalue. v* S v = sum_j ||T_j v||^2
    // gives g_j[l] = 2 s sum_t c_j[t] conj(v[(d t - l) mod L]).
    const double s = sign_of(eigenvalues(active) - 1.0);
    Signal v(fbe.signal_length);
    for (int k = 0; k < fbe.signal_length; ++k) v[k] = solver.eigenvectors()(k, active);
    const CoefficientArray coeffs = analysis(fbe, v);
    eval.gradient.assign(fbe.channels(), ComplexVector(fbe.kernel_size(), Complex(0.0, 0.0)));
    const int length = fbe.signal_length;
    for (int j = 0; j < fbe.channels(); ++j) {
        const auto& c = coeffs.channels[j];
        for (int l = 0; l < fbe.kernel_size(); ++l) {
            Complex acc(0.0, 0.0);
            for (std::size_t t = 0; t < c.size(); ++t) {
                const int idx = ((static_cast<int>(t) * fbe.stride - l) % length + length) % length;
                acc += c[t] * std::conj(v[idx]);
            }
            eval.gradient[j][l] = 2.0 * s * acc;
        }
    }
    eval.has_gradient = true;
    return eval;
}

ObjectiveEvaluation eval_lg_impl(const Filterbank& fb, const ObjectiveOptions& opts) {
    const EvalContext ctx = make_context(fb, opts);
    const ComplexVector& response = ctx.terms[0];
    const int p = argmax_real(response);
    const int q = argmin_real(response);
    const double max_response = response[p].real();
    const double min_response = response[q].real();
    if (min_response <= 0.0)
        throw DegenerateResponseError("LG: filterbank response vanishes, ratio undefined");

    ObjectiveEvaluation eval;
    eval.value = max_response / min_response - 1.0;

    std::vector<double> alias_norms(ctx.stride, 0.0);
    for (int n = 1; n < ctx.stride; ++n) {
        double norm = 0.0;
        switch (opts.alias_norm) {
            case AliasNorm::euclidean: {
                double acc = 0.0;
                for (const auto& v : ctx.terms[n]) acc += std::norm(v);
                norm = std::sqrt(acc);
                break;
            }
            case AliasNorm::one:
                for (const auto& v : ctx.terms[n]) norm += std::abs(v);
                break;
            case AliasNorm::sup:
                for (const auto& v : ctx.terms[n]) norm = std::max(norm, std::abs(v));
                break;
        }
        alias_norms[n] = norm;
        eval.value += norm;
    }

    const double mean = mean_real(response);
    if (opts.parseval_term) eval.value += std::abs(mean - 1.0);

    if (!opts.with_gradient) return eval;

    std::vector<ComplexVector> sensitivities(ctx.stride);
    sensitivities[0].assign(ctx.length, Complex(0.0, 0.0));
    sensitivities[0][p] += 1.0 / (2.0 * min_response);
    sensitivities[0][q] -= max_response / (2.0 * min_response * min_response);
    if (opts.parseval_term) {
        const double s = sign_of(mean - 1.0);
        for (auto& v : sensitivities[0]) v += s / (2.0 * ctx.length);
    }
    for (int n = 1; n < ctx.stride; ++n) {
        const auto& term = ctx.terms[n];
        auto& psi = sensitivities[n];
        switch (opts.alias_norm) {
            case AliasNorm::euclidean:
                if (alias_norms[n] > 0.0) {
                    psi.assign(ctx.length, Complex(0.0, 0.0));
                    const double inv = 1.0 / (2.0 * alias_norms[n]);
                    for (int k = 0; k < ctx.length; ++k) psi[k] = std::conj(term[k]) * inv;
                }
                break;
            case AliasNorm::one: {
                psi.assign(ctx.length, Complex(0.0, 0.0));
                for (int k = 0; k < ctx.length; ++k) {
                    const double mag = std::abs(term[k]);
                    if (mag > 0.0) psi[k] = std::conj(term[k]) / (2.0 * mag);
                }
                break;
            }
            case AliasNorm::sup: {
                int best = 0;
                double mag = 0.0;
                for (int k = 0; k < ctx.length; ++k) {
                    const double candidate = std::abs(term[k]);
                    if (candidate > mag) {
                        mag = candidate;
                        best = k;
                    }
                }
                if (mag > 0.0) {
                    psi.assign(ctx.length, Complex(0.0, 0.0));
                    psi[best] = std::conj(term[best]) / (2.0 * mag);
                }
                break;
            }
        }
    }

    eval.gradient.assign(ctx.fb.channels(), ComplexVector(ctx.fb.kernel_size(), Complex(0.0, 0.0)));
    accumulate_gradient(ctx, sensitivities, eval.gradient);
    eval.has_gradient = true;
    return eval;
}

ObjectiveEvaluation eval_lghat_impl(const Filterbank& fb, const ObjectiveOptions& opts) {
    const EvalContext ctx = make_context(fb, opts);
    const double sqrt_length = std::sqrt(static_cast<double>(ctx.length));

    std::vector<ComplexVector> fourier(ctx.stride);
    double total = 0.0;  // sum_n ||G_hat_n||_1 / sqrt(L)
    for (int n = 0; n < ctx.stride; ++n) {
        fourier[n] = dft(ctx.terms[n], true);
        for (const auto& v : fourier[n]) total += std::abs(v);
    }
    total /= sqrt_length;
    const double mean = mean_real(ctx.terms[0]);
    const double gap = mean - total;  // <= 0, zero exactly at tightness

    ObjectiveEvaluation eval;
    eval.value = std::abs(gap);
    if (!opts.with_gradient) return eval;

    const double s = sign_of(gap);
    std::vector<ComplexVector> sensitivities(ctx.stride);
    for (int n = 0; n < ctx.stride; ++n) {
        // d(||G_hat_n||_1 / sqrt(L)) / dG_n[f] = conj(bwd(phase(G_hat_n)))[f] / (2 L)
        ComplexVector phases(ctx.length, Complex(0.0, 0.0));
        for (int k = 0; k < ctx.length; ++k) {
            const double mag = std::abs(fourier[n][k]);
            if (mag > 0.0) phases[k] = fourier[n][k] / mag;
        }
        const ComplexVector lifted = fft::backward(phases);
        auto& psi = sensitivities[n];
        psi.assign(ctx.length, Complex(0.0, 0.0));
        const double scale = s / (2.0 * ctx.length);
        for (int k = 0; k < ctx.length; ++k) psi[k] = -scale * std::conj(lifted[k]);
        if (n == 0)
            for (auto& v : psi) v += s / (2.0 * ctx.length);
    }

    eval.gradient.assign(ctx.fb.channels(), ComplexVector(ctx.fb.kernel_size(), Complex(0.0, 0.0)));
    accumulate_gradient(ctx, sensitivities, eval.gradient);
    eval.has_gradient = true;
    return eval;
}

ObjectiveEvaluation eval_lkappa_impl(const Filterbank& fb, const ObjectiveOptions& opts) {
    const FrameBounds bounds = optimal_bounds(reembed(fb, opts.ambient_length));
    if (bounds.lower <= 1e-12 * std::max(bounds.upper, 1.0))
        throw NonFrameError("Lkappa: not a frame, condition number undefined");
    ObjectiveEvaluation eval;
    eval.value = bounds.upper / bounds.lower - 1.0;
    return eval;
}

ObjectiveEvaluation eval_ltheta_impl(const Filterbank& fb, const ObjectiveOptions& opts) {
    const Filterbank fbe = reembed(fb, opts.ambient_length);
    const FrameBounds bounds = optimal_bounds(fbe);
    // ||Theta||_2^2 = lambda_max(S), ||Theta||_F^2 / L = tr(S)/L = mean(G_0).
    const AliasingSpectrum alias = aliasing_terms(fbe);
    double mean = 0.0;
    for (const auto& v : alias.terms[0]) mean += v.real();
    mean /= static_cast<double>(alias.length);
    ObjectiveEvaluation eval;
    eval.value = 0.5 * (bounds.upper - mean);
    return eval;
}

}  // namespace

ObjectiveEvaluation eval_ls(const Filterbank& fb, const ObjectiveOptions& opts) {
    return eval_ls_impl(fb, opts);
}
ObjectiveEvaluation eval_lg(const Filterbank& fb, const ObjectiveOptions& opts) {
    return eval_lg_impl(fb, opts);
}
ObjectiveEvaluation eval_lghat(const Filterbank& fb, const ObjectiveOptions& opts) {
    return eval_lghat_impl(fb, opts);
}
ObjectiveEvaluation eval_lkappa(const Filterbank& fb, const ObjectiveOptions& opts) {
    return eval_lkappa_impl(fb, opts);
}
ObjectiveEvaluation eval_ltheta(const Filterbank& fb, const ObjectiveOptions& opts) {
    return eval_ltheta_impl(fb, opts);
}

ObjectiveEvaluation eval_objective(const Filterbank& fb, ObjectiveKind kind,
                                   const ObjectiveOptions& opts) {
    switch (kind) {
        case ObjectiveKind::LS: return eval_ls_impl(fb, opts);
        case ObjectiveKind::LG: return eval_lg_impl(fb, opts);
        case ObjectiveKind::LGhat: return eval_lghat_impl(fb, opts);
        case ObjectiveKind::Lkappa: return eval_lkappa_impl(fb, opts);
        case ObjectiveKind::Ltheta: return eval_ltheta_impl(fb, opts);
    }
    throw std::invalid_argument("eval_objective: unknown kind");
}

double gradient_check(const Filterbank& fb, ObjectiveKind kind, double epsilon,
                      const ObjectiveOptions& opts) {
    ObjectiveOptions with_grad = opts;
    with_grad.with_gradient = true;
    const ObjectiveEvaluation analytic = eval_objective(fb, kind, with_grad);
    if (!analytic.has_gradient)
        throw std::invalid_argument("gradient_check: objective has no gradient");

    ObjectiveOptions value_only = opts;
    value_only.with_gradient = false;
    auto value_at = [&](const Filterbank& candidate) {
        return eval_objective(candidate, kind, value_only).value;
    };

    double max_dev = 0.0;
    double max_mag = 0.0;
    Filterbank probe = fb;
    for (int j = 0; j < fb.channels(); ++j) {
        for (int l = 0; l < fb.kernel_size(); ++l) {
            const Complex original = fb.kernels[j][l];
            probe.kernels[j][l] = original + Complex(epsilon, 0.0);
            const double f_re_plus = value_at(probe);
            probe.kernels[j][l] = original - Complex(epsilon, 0.0);
            const double f_re_minus = value_at(probe);
            probe.kernels[j][l] = original + Complex(0.0, epsilon);
            const double f_im_plus = value_at(probe);
            probe.kernels[j][l] = original - Complex(0.0, epsilon);
            const double f_im_minus = value_at(probe);
            probe.kernels[j][l] = original;

            const Complex fd((f_re_plus - f_re_minus) / (2.0 * epsilon),
                             (f_im_plus - f_im_minus) / (2.0 * epsilon));
            max_dev = std::max(max_dev, std::abs(fd - analytic.gradient[j][l]));
            max_mag = std::max({max_mag, std::abs(fd), std::abs(analytic.gradient[j][l])});
        }
    }
    return max_dev / std::max(max_mag, 1e-12);
}

const char* objective_name(ObjectiveKind kind) {
    switch (kind) {
        case ObjectiveKind::LS: return "LS";
        case ObjectiveKind::LG: return "LG";
        case ObjectiveKind::LGhat: return "LGhat";
        case ObjectiveKind::Lkappa: return "Lkappa";
        case ObjectiveKind::Ltheta: return "Ltheta";
    }
    return "unknown";
}

ObjectiveKind objective_from_name(const std::string& name) {
    if (name == "LS") return ObjectiveKind::LS;
    if (name == "LG") return ObjectiveKind::LG;
    if (name == "LGhat") return ObjectiveKind::LGhat;
    if (name == "Lkappa") return ObjectiveKind::Lkappa;
    if (name == "Ltheta") return ObjectiveKind::Ltheta;
    throw std::invalid_argument("unknown objective: " + name);
}

}  // namespace framealias
