// Copyright 2026 The privergm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privergm/estimation.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "privergm/enumeration.hpp"
#include "privergm/rng.hpp"

namespace privergm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// |theta| beyond this is treated as a diverging estimate: a boundary
// statistic (nonexistent MLE) or sampler degeneracy. Well inside this bound
// likelihood gradients already decay like exp(-|theta|).
constexpr double kDivergenceBound = 15.0;
// The MC-noise-adaptive part of the outer convergence test never widens the
// tolerance beyond this; estimates noisier than that are not converged.
constexpr double kMaxAdaptiveTol = 0.2;

double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

void validate_config(const EstimationConfig& ecfg) {
  if (ecfg.damping <= 0.0 || ecfg.damping > 1.0) {
    throw std::invalid_argument("estimation: damping must lie in (0, 1]");
  }
  if (ecfg.param_tol <= 0.0 || ecfg.outer_tol <= 0.0) {
    throw std::invalid_argument("estimation: tolerances must be positive");
  }
  if (ecfg.max_outer < 1 || ecfg.max_inner < 1) {
    throw std::invalid_argument("estimation: iteration limits must be >= 1");
  }
}

// Solves H x = g for symmetric positive definite H, escalating a ridge until
// the factorization succeeds. Returns false if it never does.
bool solve_spd(const Eigen::MatrixXd& H, const Vec& g, Vec* x) {
  const int q = static_cast<int>(H.rows());
  const double scale =
      std::max(1e-300, H.diagonal().cwiseAbs().maxCoeff());
  double ridge = 0.0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::LLT<Eigen::MatrixXd> llt(
        H + ridge * scale * Eigen::MatrixXd::Identity(q, q));
    if (llt.info() == Eigen::Success) {
      *x = llt.solve(g);
      if (x->allFinite()) return true;
    }
    ridge = (ridge == 0.0) ? 1e-10 : ridge * 100.0;
  }
  return false;
}

// Inverts a symmetric positive (semi)definite information matrix, ridged to
// positive definiteness if necessary.
Eigen::MatrixXd invert_info(const Eigen::MatrixXd& info) {
  const int q = static_cast<int>(info.rows());
  const double scale =
      std::max(1e-300, info.diagonal().cwiseAbs().maxCoeff());
  double ridge = 0.0;
  for (int attempt = 0; attempt < 10; ++attempt) {
    Eigen::LLT<Eigen::MatrixXd> llt(
        info + ridge * scale * Eigen::MatrixXd::Identity(q, q));
    if (llt.info() == Eigen::Success) {
      return llt.solve(Eigen::MatrixXd::Identity(q, q));
    }
    ridge = (ridge == 0.0) ? 1e-10 : ridge * 100.0;
  }
  return Eigen::MatrixXd::Constant(q, q,
                                   std::numeric_limits<double>::quiet_NaN());
}

struct Moments {
  double log_mean_weight = -kInf;  // log of (1/M) sum of weights
  Vec mean;
  Eigen::MatrixXd cov;
  double ess = 0.0;
};

// Importance moments of the statistics under weights
// exp{(theta - theta0) . g_i + extra_i}.
Moments importance_moments(const SampleSet& s, const Vec& theta,
                           const std::vector<double>* extra_logw) {
  const Eigen::Index m = s.stats.rows();
  const int q = static_cast<int>(s.stats.cols());
  Eigen::VectorXd logw = s.stats * (theta - s.theta0);
  if (extra_logw != nullptr) {
    for (Eigen::Index i = 0; i < m; ++i) logw[i] += (*extra_logw)[i];
  }
  const double shift = logw.maxCoeff();
  Moments out;
  out.mean = Vec::Zero(q);
  out.cov = Eigen::MatrixXd::Zero(q, q);
  if (!std::isfinite(shift)) return out;  // every weight vanished
  const Eigen::VectorXd w = (logw.array() - shift).exp();
  const double total = w.sum();
  out.log_mean_weight = shift + std::log(total / static_cast<double>(m));
  out.ess = total * total / w.squaredNorm();
  out.mean = s.stats.transpose() * w / total;
  Eigen::MatrixXd centered = s.stats.rowwise() - out.mean.transpose();
  out.cov = centered.transpose() * (w / total).asDiagonal() * centered;
  return out;
}

double log_mean_weight(const SampleSet& s, const Vec& theta,
                       const std::vector<double>* extra_logw) {
  const Eigen::Index m = s.stats.rows();
  Eigen::VectorXd logw = s.stats * (theta - s.theta0);
  if (extra_logw != nullptr) {
    for (Eigen::Index i = 0; i < m; ++i) logw[i] += (*extra_logw)[i];
  }
  const double shift = logw.maxCoeff();
  if (!std::isfinite(shift)) return shift;
  const double total = (logw.array() - shift).exp().sum();
  return shift + std::log(total / static_cast<double>(m));
}

struct InnerResult {
  Vec theta;
  Eigen::MatrixXd info;
  int steps = 0;
  bool hit_ess_floor = false;
  bool at_noise_level = false;  // score within its own Monte Carlo error
  double ess = 0.0;
};

// Damped Newton ascent of the sample approximation of the log likelihood.
// For the naive objective g_y names the observed statistic and the score is
// g(y) - E_theta[g], with moments reweighted from the chain at theta0. For
// the missing-data objective `tilted` carries draws from P(x | y; theta0)
// and the score is the Fisher-identity form E_{theta|y}[g] - E_theta[g].
//
// Two guards keep the ascent honest: the step stops once the score is
// indistinguishable from its Monte Carlo error (chasing it further fits
// noise), and each round moves at most 2 * max_step away from the anchor
// before forcing a re-sample there.
InnerResult maximize_on_sample(const SampleSet& s, const Vec* g_y,
                               const SampleSet* tilted,
                               const EstimationConfig& ecfg) {
  const int q = static_cast<int>(s.stats.cols());
  InnerResult res;
  res.theta = s.theta0;
  for (int it = 0; it < ecfg.max_inner; ++it) {
    const Moments base = importance_moments(s, res.theta, nullptr);
    Moments numerator;
    if (tilted != nullptr) {
      numerator = importance_moments(*tilted, res.theta, nullptr);
    }
    res.ess = (tilted != nullptr) ? std::min(base.ess, numerator.ess)
                                  : base.ess;
    // Trust region of the importance approximation: once an effective
    // sample size collapses, further steps on this sample are noise.
    if (it > 0) {
      if (base.ess < ecfg.ess_floor * s.num_draws() ||
          (tilted != nullptr &&
           numerator.ess < ecfg.ess_floor * tilted->num_draws())) {
        res.hit_ess_floor = true;
        break;
      }
    }
    Vec grad;
    if (g_y != nullptr) {
      grad = *g_y - base.mean;
      res.info = base.cov;
    } else {
      grad = numerator.mean - base.mean;
      res.info = base.cov - numerator.cov;
    }
    // Score resolution: sampling error of the estimated means.
    bool within_noise = true;
    for (int j = 0; j < q && within_noise; ++j) {
      double var = base.cov(j, j) / std::max(1.0, base.ess);
      if (tilted != nullptr) {
        var += numerator.cov(j, j) / std::max(1.0, numerator.ess);
      }
      within_noise = std::abs(grad[j]) <= 2.0 * std::sqrt(var);
    }
    if (within_noise) {
      res.at_noise_level = true;
      break;
    }
    Vec step;
    bool ok = solve_spd(res.info, grad, &step);
    if (!ok || grad.dot(step) <= 0.0) {
      // Indefinite observed information; fall back to the complete-data
      // curvature, which always gives an ascent direction.
      res.info = base.cov;
      ok = solve_spd(res.info, grad, &step);
    }
    if (!ok || grad.dot(step) <= 0.0) {
      const double gnorm = grad.cwiseAbs().maxCoeff();
      if (gnorm == 0.0) break;
      step = grad * (ecfg.max_step / gnorm);
    }
    const double snorm = step.cwiseAbs().maxCoeff();
    if (snorm > ecfg.max_step) step *= ecfg.max_step / snorm;
    res.theta += ecfg.damping * step;
    ++res.steps;
    if (ecfg.damping * step.cwiseAbs().maxCoeff() < ecfg.param_tol) break;
    if ((res.theta - s.theta0).cwiseAbs().maxCoeff() >= 2.0 * ecfg.max_step) {
      res.hit_ess_floor = true;
      break;
    }
  }
  return res;
}

FitResult run_mcmcmle(const Graph& y, const ModelSpec& spec,
                      const PrivacyParams* params,
                      const EstimationConfig& ecfg,
                      const SamplerConfig& scfg) {
  validate_config(ecfg);
  spec.validate_for(y);
  if (params != nullptr && params->degenerate()) {
    throw std::invalid_argument(
        "fit_missing: mechanism with epsilon = 0 carries no information");
  }

  const ModelCalculator calc(spec, y);
  const Vec g_y = calc.stats(y);

  FitResult fit;
  fit.method = (params != nullptr) ? FitMethod::kMissingData : FitMethod::kNaive;
  fit.term_names = spec.term_names();
  fit.seed = scfg.seed;

  Vec theta_init;
  if (ecfg.use_mple_init) {
    const MpleFit init = mple(y, spec);
    theta_init = init.theta;
    if (init.separated) {
      fit.message += "mple separation; starting from zero. ";
    }
  } else {
    if (ecfg.theta0.size() != spec.dim()) {
      throw std::invalid_argument("estimation: supplied theta0 has wrong size");
    }
    theta_init = ecfg.theta0;
  }

  // The missing-data likelihood needs a second chain targeting the
  // conditional law P(x | y; theta0): the privacy weight enters the kernel
  // as a per-dyad tilt rather than as an importance weight, whose effective
  // sample size collapses beyond toy sizes.
  std::vector<double> tilt;
  if (params != nullptr) {
    tilt = conditional_tilt(y, *params);
  }

  Vec theta0 = theta_init;
  SampleSet s;
  SampleSet tilted;
  bool converged = false;
  bool diverged = false;
  int outer = 0;
  InnerResult inner;

  while (outer < ecfg.max_outer) {
    ++outer;
    SamplerConfig round = scfg;
    round.seed = derive_seed(scfg.seed, {0x5a17u, static_cast<std::uint64_t>(outer)});
    round.retain_graphs = false;
    s = sample(theta0, spec, y, round);
    if (params != nullptr) {
      SamplerConfig tilted_round = round;
      tilted_round.seed = derive_seed(
          scfg.seed, {0x711du, static_cast<std::uint64_t>(outer)});
      tilted_round.dyad_offset = tilt;
      tilted = sample(theta0, spec, y, tilted_round);
    }

    if (params == nullptr) {
      // The observed statistic must lie strictly inside the sampled range in
      // every coordinate; on the boundary the sample-MLE runs off to
      // infinity (no finite MLE, or far too little data to see one).
      for (int j = 0; j < spec.dim(); ++j) {
        const double lo = s.stats.col(j).minCoeff();
        const double hi = s.stats.col(j).maxCoeff();
        if (g_y[j] <= lo || g_y[j] >= hi) {
          fit.theta = theta0;
          fit.iterations = outer;
          fit.mc_settings = s.config;
          fit.message += "observed statistic '" + fit.term_names[j] +
                         "' lies on the boundary of the sampled range; the "
                         "maximum likelihood estimate is diverging.";
          return fit;
        }
      }
    }

    inner = maximize_on_sample(s, params == nullptr ? &g_y : nullptr,
                               params == nullptr ? nullptr : &tilted, ecfg);

    if (!inner.theta.allFinite() ||
        inner.theta.cwiseAbs().maxCoeff() > kDivergenceBound) {
      theta0 = inner.theta;
      diverged = true;
      break;
    }

    const Vec moved = (inner.theta - theta0).cwiseAbs();
    const Eigen::MatrixXd info_inv = invert_info(inner.info);
    bool settled = (outer >= 2);
    for (int j = 0; j < spec.dim() && settled; ++j) {
      const double mc_sd =
          std::sqrt(std::max(0.0, info_inv(j, j)) / s.num_draws());
      settled =
          moved[j] <=
          std::max(ecfg.outer_tol, std::min(kMaxAdaptiveTol, 3.0 * mc_sd));
    }
    theta0 = inner.theta;
    if (settled) {
      converged = true;
      break;
    }
  }

  fit.theta = theta0;
  fit.converged = converged && fit.theta.allFinite();
  fit.iterations = outer;
  fit.mc_settings = s.config;
  fit.weight_ess = (params != nullptr) ? inner.ess : -1.0;
  if (diverged) {
    fit.message +=
        "estimate diverged (boundary statistic or sampler degeneracy). ";
  } else if (!fit.converged) {
    fit.message += "no convergence within " + std::to_string(ecfg.max_outer) +
                   " outer iterations.";
  }

  // Likelihood-ratio diagnostic against the initializer, on the last samples.
  if (params == nullptr) {
    fit.log_lik_ratio_at_opt =
        (fit.theta - theta_init).dot(g_y) -
        (log_ratio_naive(fit.theta, s.theta0, s) -
         log_ratio_naive(theta_init, s.theta0, s));
  } else {
    auto objective = [&](const Vec& t) {
      return log_mean_weight(tilted, t, nullptr) -
             log_mean_weight(s, t, nullptr);
    };
    fit.log_lik_ratio_at_opt = objective(fit.theta) - objective(theta_init);
  }

  if (fit.converged) {
    if (params == nullptr) {
      const Moments m = importance_moments(s, fit.theta, nullptr);
      const Eigen::MatrixXd cov = invert_info(m.cov);
      fit.std_errors = cov.diagonal().cwiseMax(0.0).cwiseSqrt();
    } else {
      // Numeric Hessian of the approximate log likelihood, common random
      // numbers across perturbations (the same two sample sets back every
      // evaluation).
      const int q = spec.dim();
      auto objective = [&](const Vec& t) {
        return log_mean_weight(tilted, t, nullptr) -
               log_mean_weight(s, t, nullptr);
      };
      Eigen::MatrixXd hess(q, q);
      const double f0 = objective(fit.theta);
      for (int j = 0; j < q; ++j) {
        const double hj = 1e-3 * std::max(1.0, std::abs(fit.theta[j]));
        for (int k = j; k < q; ++k) {
          const double hk = 1e-3 * std::max(1.0, std::abs(fit.theta[k]));
          Vec t = fit.theta;
          if (j == k) {
            t[j] = fit.theta[j] + hj;
            const double fp = objective(t);
            t[j] = fit.theta[j] - hj;
            const double fm = objective(t);
            hess(j, j) = (fp - 2.0 * f0 + fm) / (hj * hj);
          } else {
            t[j] = fit.theta[j] + hj;
            t[k] = fit.theta[k] + hk;
            const double fpp = objective(t);
            t[k] = fit.theta[k] - hk;
            const double fpm = objective(t);
            t[j] = fit.theta[j] - hj;
            const double fmm = objective(t);
            t[k] = fit.theta[k] + hk;
            const double fmp = objective(t);
            hess(j, k) = hess(k, j) = (fpp - fpm - fmp + fmm) / (4.0 * hj * hk);
          }
        }
      }
      const Eigen::MatrixXd cov = invert_info(-hess);
      fit.std_errors = cov.diagonal().cwiseMax(0.0).cwiseSqrt();
    }
  }
  return fit;
}

// Exact (enumeration) likelihood maximization shared by both oracles.
FitResult run_exact(const Graph& y, const ModelSpec& spec,
                    const PrivacyParams* params) {
  spec.validate_for(y);
  const GraphEnumeration enumeration(spec, y);
  const int q = spec.dim();
  const Vec g_y = stats(y, spec);
  Eigen::VectorXd logw;
  if (params != nullptr) {
    if (params->degenerate()) {
      throw std::invalid_argument(
          "fit_exact_missing: mechanism with epsilon = 0 carries no information");
    }
    logw = enumeration.log_weights(y, *params);
  }

  auto loglik = [&](const Vec& t) {
    const double base = enumeration.log_normalizer(t);
    if (params == nullptr) return t.dot(g_y) - base;
    return enumeration.log_normalizer_weighted(t, logw) - base;
  };

  FitResult fit;
  fit.method = (params != nullptr) ? FitMethod::kExactOracleMissing
                                   : FitMethod::kExactOracle;
  fit.term_names = spec.term_names();

  const MpleFit init = mple(y, spec);
  Vec theta = init.separated ? Vec::Zero(q) : init.theta;
  const Vec theta_init = theta;
  double current = loglik(theta);

  bool converged = false;
  int it = 0;
  Eigen::MatrixXd info(q, q);
  for (it = 1; it <= 300; ++it) {
    Vec grad;
    if (params == nullptr) {
      grad = g_y - enumeration.mean_stats(theta);
      info = enumeration.cov_stats(theta);
    } else {
      grad = enumeration.mean_stats_weighted(theta, logw) -
             enumeration.mean_stats(theta);
      info = enumeration.cov_stats(theta) -
             enumeration.cov_stats_weighted(theta, logw);
    }
    if (grad.cwiseAbs().maxCoeff() < 1e-10) {
      converged = true;
      break;
    }
    Vec step;
    bool ok = solve_spd(info, grad, &step);
    if (!ok || grad.dot(step) <= 0.0) {
      info = enumeration.cov_stats(theta);
      ok = solve_spd(info, grad, &step);
    }
    if (!ok || grad.dot(step) <= 0.0) {
      step = grad / std::max(1e-12, grad.cwiseAbs().maxCoeff());
    }
    const double snorm = step.cwiseAbs().maxCoeff();
    if (snorm > 2.0) step *= 2.0 / snorm;
    // Backtracking keeps the exactly-computed objective non-decreasing.
    double t = 1.0;
    double proposed = loglik(theta + step);
    int halvings = 0;
    while (proposed < current && halvings < 40) {
      t *= 0.5;
      proposed = loglik(theta + t * step);
      ++halvings;
    }
    if (halvings == 40) break;  // no ascent left at machine precision
    theta += t * step;
    current = proposed;
    if (theta.cwiseAbs().maxCoeff() > kDivergenceBound) {
      Vec direction = theta / theta.norm();
      std::string dir = "";
      for (int j = 0; j < q; ++j) {
        if (!dir.empty()) dir += ", ";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", direction[j]);
        dir += buf;
      }
      fit.message =
          "maximum likelihood estimate does not exist: observed statistic on "
          "the boundary; likelihood increases along direction (" + dir + ")";
      break;
    }
    if (t * snorm < 1e-13) {
      converged = grad.cwiseAbs().maxCoeff() < 1e-6;
      break;
    }
  }

  fit.theta = theta;
  fit.converged = converged;
  fit.iterations = it;
  fit.log_lik_ratio_at_opt = current - loglik(theta_init);
  if (converged) {
    const Eigen::MatrixXd cov = invert_info(info);
    fit.std_errors = cov.diagonal().cwiseMax(0.0).cwiseSqrt();
  }
  return fit;
}

}  // namespace

std::string fit_method_name(FitMethod m) {
  switch (m) {
    case FitMethod::kNaive:
      return "naive";
    case FitMethod::kMissingData:
      return "missing";
    case FitMethod::kExactOracle:
      return "exact";
    case FitMethod::kExactOracleMissing:
      return "exact_missing";
    case FitMethod::kMple:
      return "mple";
  }
  return "?";
}

MpleFit mple(const Graph& y, const ModelSpec& spec) {
  spec.validate_for(y);
  const ModelCalculator calc(spec, y);
  const int n = y.node_count();
  const int q = spec.dim();
  const Eigen::Index num_dyads = static_cast<Eigen::Index>(y.num_dyads());
  Eigen::MatrixXd X(num_dyads, q);
  Eigen::VectorXd z(num_dyads);
  Vec delta(q);
  Eigen::Index row = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++row) {
      calc.add_change(y, i, j, delta.data());
      X.row(row) = delta;
      z[row] = y.has_edge(i, j) ? 1.0 : 0.0;
    }
  }

  MpleFit fit;
  fit.theta = Vec::Zero(q);
  Vec theta = Vec::Zero(q);
  for (int it = 0; it < 60; ++it) {
    const Eigen::VectorXd eta = X * theta;
    Eigen::VectorXd mu(num_dyads);
    Eigen::VectorXd w(num_dyads);
    for (Eigen::Index d = 0; d < num_dyads; ++d) {
      mu[d] = logistic(eta[d]);
      w[d] = mu[d] * (1.0 - mu[d]);
    }
    const Eigen::MatrixXd H =
        X.transpose() * w.asDiagonal() * X +
        1e-10 * Eigen::MatrixXd::Identity(q, q);
    const Vec score = X.transpose() * (z - mu);
    Vec step;
    if (!solve_spd(H, score, &step) || !step.allFinite()) {
      fit.separated = true;
      return fit;
    }
    theta += step;
    if (!theta.allFinite() || theta.cwiseAbs().maxCoeff() > kDivergenceBound) {
      fit.separated = true;
      return fit;
    }
    if (step.cwiseAbs().maxCoeff() < 1e-10) break;
  }
  fit.theta = theta;
  return fit;
}

double log_ratio_naive(const Vec& theta, const Vec& theta0,
                       const SampleSet& sample) {
  if (theta.size() != sample.stats.cols() || theta0.size() != theta.size()) {
    throw std::invalid_argument("log_ratio_naive: dimension mismatch");
  }
  if (theta0.size() == sample.theta0.size() &&
      !(theta0.array() == sample.theta0.array()).all()) {
    throw std::invalid_argument(
        "log_ratio_naive: sample was not drawn at the supplied theta0");
  }
  const Eigen::VectorXd logw = sample.stats * (theta - theta0);
  const double shift = logw.maxCoeff();
  if (!std::isfinite(shift)) return shift;
  const double total = (logw.array() - shift).exp().sum();
  return shift + std::log(total / static_cast<double>(sample.stats.rows()));
}

std::vector<double> privacy_log_weights(const SampleSet& sample,
                                        const Graph& y,
                                        const PrivacyParams& params) {
  if (!sample.has_graphs()) {
    throw std::invalid_argument(
        "privacy_log_weights: sample did not retain graphs");
  }
  if (sample.node_count != y.node_count()) {
    throw std::invalid_argument("privacy_log_weights: node count mismatch");
  }
  const std::vector<std::uint64_t> ybits = dyad_bits(y);
  const std::int64_t total_dyads = y.num_dyads();
  const std::int64_t m_y = y.edge_count();
  std::vector<double> logw(sample.num_draws());
  for (int d = 0; d < sample.num_draws(); ++d) {
    auto bits = sample.graph_bits(d);
    std::int64_t m_x = 0;
    std::int64_t agree = 0;
    for (std::size_t w = 0; w < bits.size(); ++w) {
      m_x += std::popcount(bits[w]);
      agree += std::popcount(bits[w] & ybits[w]);
    }
    DyadCells cells;
    cells.n11 = agree;
    cells.n10 = m_x - agree;
    cells.n01 = m_y - agree;
    cells.n00 = total_dyads - cells.n11 - cells.n10 - cells.n01;
    logw[d] = log_conditional_cells(cells, params);
  }
  return logw;
}

double log_ratio_missing(const Vec& theta, const Vec& theta0,
                         const SampleSet& sample, const Graph& y,
                         const PrivacyParams& params) {
  if (theta.size() != sample.stats.cols() || theta0.size() != theta.size()) {
    throw std::invalid_argument("log_ratio_missing: dimension mismatch");
  }
  if (theta0.size() == sample.theta0.size() &&
      !(theta0.array() == sample.theta0.array()).all()) {
    throw std::invalid_argument(
        "log_ratio_missing: sample was not drawn at the supplied theta0");
  }
  const std::vector<double> logw = privacy_log_weights(sample, y, params);
  return log_mean_weight(sample, theta, &logw);
}

FitResult fit_naive(const Graph& y, const ModelSpec& spec,
                    const EstimationConfig& ecfg, const SamplerConfig& scfg) {
  return run_mcmcmle(y, spec, nullptr, ecfg, scfg);
}

FitResult fit_missing(const Graph& y, const ModelSpec& spec,
                      const PrivacyParams& params,
                      const EstimationConfig& ecfg, const SamplerConfig& scfg) {
  return run_mcmcmle(y, spec, &params, ecfg, scfg);
}

FitResult fit_exact(const Graph& y, const ModelSpec& spec) {
  return run_exact(y, spec, nullptr);
}

FitResult fit_exact_missing(const Graph& y, const ModelSpec& spec,
                            const PrivacyParams& params) {
  return run_exact(y, spec, &params);
}

}  // namespace privergm
