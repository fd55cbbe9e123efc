// SPDX-License-Identifier: Apache-2.0
#include "framealias/tighten.hpp"

#include "framealias/errors.hpp"
#include "framealias/random.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace framealias {
namespace {

constexpr double kFrameTol = 1e-12;

struct SpectrumSnapshot {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    bool frame = false;
    double condition = std::numeric_limits<double>::infinity();
};

SpectrumSnapshot snapshot(const Filterbank& fb) {
    const Eigen::VectorXd eigenvalues = frame_operator_eigenvalues(fb);
    SpectrumSnapshot snap;
    snap.lambda_min = eigenvalues(0);
    snap.lambda_max = eigenvalues(eigenvalues.size() - 1);
    snap.frame = snap.lambda_min > kFrameTol * std::max(snap.lambda_max, 1.0);
    if (snap.frame) snap.condition = snap.lambda_max / snap.lambda_min;
    return snap;
}

double reconstruction_error(const Filterbank& fb, const Signal& probe) {
    const Signal mapped = frame_operator_apply(fb, probe);
    double acc = 0.0;
    for (std::size_t n = 0; n < probe.size(); ++n) acc += std::norm(mapped[n] - probe[n]);
    return std::sqrt(acc);
}

ObjectiveOptions options_for(const OptimizerConfig& cfg) {
    ObjectiveOptions opts;
    opts.alias_norm = cfg.alias_norm;
    opts.parseval_term = cfg.parseval_term && cfg.objective == ObjectiveKind::LG;
    return opts;
}

}  // namespace

std::pair<Filterbank, Trajectory> sgd_tighten(const Filterbank& fb, const OptimizerConfig& cfg) {
    if (cfg.learning_rate <= 0.0) throw std::invalid_argument("sgd_tighten: learning rate <= 0");
    if (cfg.iterations < 1) throw std::invalid_argument("sgd_tighten: iterations < 1");
    if (cfg.objective != ObjectiveKind::LS && cfg.objective != ObjectiveKind::LG &&
        cfg.objective != ObjectiveKind::LGhat)
        throw std::invalid_argument("sgd_tighten: objective has no gradient");

    const ObjectiveOptions opts = options_for(cfg);
    std::mt19937_64 engine = make_engine(cfg.seed);
    const Signal probe = random_unit_signal(fb.signal_length, engine);

    Filterbank current = fb;
    Trajectory traj;
    traj.points.reserve(cfg.iterations + 1);

    SpectrumSnapshot snap = snapshot(current);
    ObjectiveEvaluation eval = eval_objective(current, cfg.objective, opts);
    traj.points.push_back({0, snap.condition, reconstruction_error(current, probe), eval.value, false});

    for (int it = 1; it <= cfg.iterations; ++it) {
        double scale = 1.0;
        bool fallback = false;
        if (cfg.adaptive) {
            if (snap.frame && snap.condition > 1.0)
                scale = std::pow(snap.condition - 1.0, cfg.adaptive_exponent);
            else if (!snap.frame)
                fallback = true;  // condition undefined, take the plain step
        }
        const double step = cfg.learning_rate * scale;
        for (int j = 0; j < current.channels(); ++j)
            for (int l = 0; l < current.kernel_size(); ++l)
                current.kernels[j][l] -= step * eval.gradient[j][l];

        snap = snapshot(current);
        eval = eval_objective(current, cfg.objective, opts);
        traj.points.push_back(
            {it, snap.condition, reconstruction_error(current, probe), eval.value, fallback});
    }
    return {std::move(current), std::move(traj)};
}

Eigen::MatrixXcd inv_sqrt_psd(const Eigen::MatrixXcd& matrix, double rank_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix);
    const Eigen::VectorXd eigenvalues = solver.eigenvalues();
    const double cutoff = rank_tol * std::max(eigenvalues(eigenvalues.size() - 1), 0.0);
    Eigen::VectorXd scaled(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
        scaled(i) = eigenvalues(i) > cutoff ? 1.0 / std::sqrt(eigenvalues(i)) : 0.0;
    return solver.eigenvectors() * scaled.asDiagonal() *
           solver.eigenvectors().adjoint();
}

Filterbank fir_tighten_step(const Filterbank& fb) {
    const SpectrumSnapshot snap = snapshot(fb);
    if (!snap.frame) throw NonFrameError("fir_tighten_step: input is not a frame");

    const FrameOperatorDense dense = frame_operator_dense(fb);
    const Eigen::MatrixXcd root = inv_sqrt_psd(dense.matrix);

    Filterbank out = fb;
    const int length = fb.signal_length;
    for (int j = 0; j < fb.channels(); ++j) {
        const Signal w = full_filter(fb, j);
        Eigen::VectorXcd filter(length);
        for (int n = 0; n < length; ++n) filter(n) = w[n];
        const Eigen::VectorXcd mapped = root * filter;
        for (int l = 0; l < fb.kernel_size(); ++l) out.kernels[j][l] = mapped(l);
    }
    return out;
}

FirTightenResult fir_tighten(const Filterbank& fb, int max_steps, double target_condition) {
    if (max_steps < 1) throw std::invalid_argument("fir_tighten: max_steps < 1");
    if (target_condition < 1.0) throw std::invalid_argument("fir_tighten: target below 1");

    FirTightenResult result;
    Filterbank current = fb;
    SpectrumSnapshot snap = snapshot(current);

    auto record = [&](int it, const Filterbank& candidate, const SpectrumSnapshot& s) {
        // Reuse the LGhat value as the per-step objective readout.
        ObjectiveOptions opts;
        opts.with_gradient = false;
        const double objective = eval_lghat(candidate, opts).value;
        result.trajectory.points.push_back({it, s.condition, 0.0, objective, false});
    };

    record(0, current, snap);
    result.filterbank = current;
    double best_condition = snap.condition;
    result.reason = FirStop::max_steps;
    if (!snap.frame) {
        result.reason = FirStop::non_frame;
        return result;
    }
    if (snap.condition <= target_condition) {
        result.reason = FirStop::target_reached;
        return result;
    }

    int growth_streak = 0;
    double previous = snap.condition;
    for (int it = 1; it <= max_steps; ++it) {
        current = fir_tighten_step(current);
        snap = snapshot(current);
        record(it, current, snap);
        if (!snap.frame) {
            result.reason = FirStop::non_frame;
            return result;
        }
        if (snap.condition < best_condition) {
            best_condition = snap.condition;
            result.filterbank = current;
        }
        if (snap.condition <= target_condition) {
            result.reason = FirStop::target_reached;
            return result;
        }
        growth_streak = snap.condition > previous ? growth_streak + 1 : 0;
        previous = snap.condition;
        if (growth_streak >= 3) {
            result.reason = FirStop::diverged;
            return result;
        }
    }
    return result;
}

}  // namespace framealias
