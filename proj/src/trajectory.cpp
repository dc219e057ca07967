// Copyright 2026 The qsse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsse/trajectory.hpp"

#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

#include <Eigen/Eigenvalues>

namespace qsse {

namespace {

constexpr Complex kI{0.0, 1.0};

// Trajectories per reduction leaf; fixed so the reduction tree shape does not
// depend on the thread count.
constexpr int kChunk = 64;

Operator ito_drift(const GklsGenerator& g) {
  return -kI * g.hamiltonian - h2_ito(g);
}

Operator stratonovich_drift(const StratonovichForm& s) {
  return -kI * s.h1s - s.h2s;
}

void require_channels(const std::vector<Operator>& ls, const WienerBatch& dw,
                      const char* who) {
  if (dw.channels() != static_cast<int>(ls.size())) {
    throw DimensionMismatch(std::string(who) + ": one increment per channel required");
  }
}

StateVector linear_step(const StateVector& psi, const Operator& drift,
                        const std::vector<Operator>& ls, const RealVector& dws,
                        double dt) {
  StateVector out = psi + dt * (drift * psi);
  for (std::size_t k = 0; k < ls.size(); ++k) {
    out -= kI * dws(static_cast<Eigen::Index>(k)) * (ls[k] * psi);
  }
  return out;
}

// Shared integrator core so the public step functions and the ensemble loop
// run the same arithmetic.
class Integrator {
 public:
  Integrator(const SsePlan& plan)
      : scheme_(plan.scheme),
        dt_(plan.dt),
        dim_(plan.generator.dim()),
        h1_(plan.generator.hamiltonian),
        ls_(plan.generator.lindblads) {
    if (scheme_ == SseScheme::ItoEuler) {
      drift_ = ito_drift(plan.generator);
    } else if (scheme_ == SseScheme::StratonovichHeun) {
      const StratonovichForm s = to_stratonovich(plan.generator);
      drift_ = stratonovich_drift(s);
    }
  }

  void step(StateVector& psi, RngStream& rng, RealVector& dws) const {
    const double sq = std::sqrt(dt_);
    for (Eigen::Index k = 0; k < dws.size(); ++k) {
      dws(k) = sq * rng.next_normal();
    }
    switch (scheme_) {
      case SseScheme::ItoEuler:
        psi = linear_step(psi, drift_, ls_, dws, dt_);
        break;
      case SseScheme::StratonovichHeun: {
        const StateVector pred = linear_step(psi, drift_, ls_, dws, dt_);
        StateVector corr = psi + 0.5 * dt_ * (drift_ * (psi + pred));
        for (std::size_t k = 0; k < ls_.size(); ++k) {
          corr -= 0.5 * kI * dws(static_cast<Eigen::Index>(k)) * (ls_[k] * (psi + pred));
        }
        psi = std::move(corr);
        break;
      }
      case SseScheme::ExactUnitary:
        psi = exact_unitary_step(psi, h1_, ls_, WienerBatch{dt_, dws}, dt_);
        break;
    }
  }

  int dim() const { return dim_; }
  int channels() const { return static_cast<int>(ls_.size()); }

 private:
  SseScheme scheme_;
  double dt_;
  int dim_;
  Operator drift_;
  Operator h1_;
  std::vector<Operator> ls_;
};

struct Partial {
  std::vector<DensityMatrix> rho;
  std::vector<double> norm2;
  long count = 0;

  static Partial zero(std::size_t n_rec, int dim) {
    Partial p;
    p.rho.assign(n_rec, DensityMatrix::Zero(dim, dim));
    p.norm2.assign(n_rec, 0.0);
    return p;
  }

  void absorb(const Partial& other) {
    for (std::size_t r = 0; r < rho.size(); ++r) {
      rho[r] += other.rho[r];
      norm2[r] += other.norm2[r];
    }
    count += other.count;
  }
};

std::vector<int> record_steps(const SsePlan& plan) {
  const int n = plan.n_steps();
  std::vector<int> steps;
  for (int s = 0; s <= n; s += plan.record_stride) {
    steps.push_back(s);
  }
  if (steps.back() != n) {
    steps.push_back(n);
  }
  return steps;
}

}  // namespace

void SsePlan::validate() const {
  if (!(dt > 0.0)) {
    throw Error("SsePlan: dt must be positive");
  }
  if (dt > t_final) {
    throw Error("SsePlan: dt exceeds t_final");
  }
  if (record_stride < 1) {
    throw Error("SsePlan: record_stride must be >= 1");
  }
  if (scheme == SseScheme::ExactUnitary) {
    for (const auto& l : generator.lindblads) {
      if (!is_hermitian(l, kTolHerm)) {
        throw NonHermitianLindblad(
            "SsePlan: the exact-unitary scheme needs Hermitian channel operators");
      }
    }
  }
}

int SsePlan::n_steps() const {
  return static_cast<int>(std::llround(t_final / dt));
}

StateVector ito_step(const StateVector& psi, const GklsGenerator& g,
                     const WienerBatch& dw, double dt) {
  if (psi.size() != g.dim()) {
    throw DimensionMismatch("ito_step: state dimension mismatch");
  }
  require_channels(g.lindblads, dw, "ito_step");
  return linear_step(psi, ito_drift(g), g.lindblads, dw.increments, dt);
}

StateVector stratonovich_step(const StateVector& psi, const StratonovichForm& s,
                              const WienerBatch& dw, double dt) {
  if (psi.size() != s.h1s.rows()) {
    throw DimensionMismatch("stratonovich_step: state dimension mismatch");
  }
  require_channels(s.lindblads, dw, "stratonovich_step");
  const Operator drift = stratonovich_drift(s);
  const StateVector pred = linear_step(psi, drift, s.lindblads, dw.increments, dt);
  StateVector corr = psi + 0.5 * dt * (drift * (psi + pred));
  for (std::size_t k = 0; k < s.lindblads.size(); ++k) {
    corr -= 0.5 * kI * dw.increments(static_cast<Eigen::Index>(k)) *
            (s.lindblads[k] * (psi + pred));
  }
  return corr;
}

StateVector exact_unitary_step(const StateVector& psi, const Operator& h1,
                               const std::vector<Operator>& lindblads,
                               const WienerBatch& dw, double dt, double tol) {
  if (psi.size() != h1.rows()) {
    throw DimensionMismatch("exact_unitary_step: state dimension mismatch");
  }
  require_channels(lindblads, dw, "exact_unitary_step");
  if (!is_hermitian(h1, tol)) {
    throw NonHermitianLindblad("exact_unitary_step: Hamiltonian is not Hermitian");
  }
  Operator exponent = h1 * dt;
  for (std::size_t k = 0; k < lindblads.size(); ++k) {
    if (!is_hermitian(lindblads[k], tol)) {
      throw NonHermitianLindblad(
          "exact_unitary_step: channel operator is not Hermitian");
    }
    exponent += dw.increments(static_cast<Eigen::Index>(k)) * lindblads[k];
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(exponent);
  const StateVector rotated = es.eigenvectors().adjoint() * psi;
  StateVector phased(rotated.size());
  for (Eigen::Index j = 0; j < rotated.size(); ++j) {
    phased(j) = std::polar(1.0, -es.eigenvalues()(j)) * rotated(j);
  }
  return es.eigenvectors() * phased;
}

TrajectoryRecord run_trajectory(const SsePlan& plan, const StateVector& psi0,
                                std::uint64_t traj_index) {
  plan.validate();
  if (psi0.size() != plan.generator.dim()) {
    throw DimensionMismatch("run_trajectory: state dimension mismatch");
  }
  const Integrator integrator(plan);
  const std::vector<int> recs = record_steps(plan);

  TrajectoryRecord rec;
  rec.seed_used = child_seed(plan.seed, traj_index);
  RngStream rng = RngStream::child(plan.seed, traj_index);
  RealVector dws(integrator.channels());
  StateVector psi = psi0;
  std::size_t r = 0;
  for (int s = 0; s <= plan.n_steps(); ++s) {
    if (r < recs.size() && recs[r] == s) {
      rec.times.push_back(s * plan.dt);
      rec.states.push_back(psi);
      rec.norms_sq.push_back(psi.squaredNorm());
      ++r;
    }
    if (s < plan.n_steps()) {
      integrator.step(psi, rng, dws);
    }
  }
  return rec;
}

EnsembleResult run_ensemble(const SsePlan& plan, const StateVector& psi0,
                            int n_traj, int n_threads) {
  plan.validate();
  if (n_traj < 1) {
    throw Error("run_ensemble: need at least one trajectory");
  }
  if (psi0.size() != plan.generator.dim()) {
    throw DimensionMismatch("run_ensemble: state dimension mismatch");
  }
  if (std::abs(psi0.squaredNorm() - 1.0) > 1e-8) {
    throw Error("run_ensemble: initial state is not normalized");
  }

  const Integrator integrator(plan);
  const std::vector<int> recs = record_steps(plan);
  const std::size_t n_rec = recs.size();
  const int dim = integrator.dim();

  const int n_chunks = (n_traj + kChunk - 1) / kChunk;
  std::vector<Partial> chunk_partials(static_cast<std::size_t>(n_chunks));

  std::atomic<int> next_chunk{0};
  auto worker = [&]() {
    RealVector dws(integrator.channels());
    while (true) {
      const int c = next_chunk.fetch_add(1);
      if (c >= n_chunks) {
        return;
      }
      Partial partial = Partial::zero(n_rec, dim);
      const int lo = c * kChunk;
      const int hi = std::min(n_traj, lo + kChunk);
      for (int i = lo; i < hi; ++i) {
        RngStream rng = RngStream::child(plan.seed, static_cast<std::uint64_t>(i));
        StateVector psi = psi0;
        std::size_t r = 0;
        for (int s = 0; s <= plan.n_steps(); ++s) {
          if (r < n_rec && recs[r] == s) {
            partial.rho[r].noalias() += psi * psi.adjoint();
            partial.norm2[r] += psi.squaredNorm();
            ++r;
          }
          if (s < plan.n_steps()) {
            integrator.step(psi, rng, dws);
          }
        }
        ++partial.count;
      }
      chunk_partials[static_cast<std::size_t>(c)] = std::move(partial);
    }
  };

  int threads = n_threads > 0 ? n_threads
                              : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, n_chunks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  // Fixed pairwise tree over chunk index (binary counter), independent of the
  // thread schedule above.
  std::vector<std::optional<Partial>> levels;
  for (int c = 0; c < n_chunks; ++c) {
    Partial carry = std::move(chunk_partials[static_cast<std::size_t>(c)]);
    std::size_t level = 0;
    while (true) {
      if (level == levels.size()) {
        levels.emplace_back(std::move(carry));
        break;
      }
      if (!levels[level].has_value()) {
        levels[level] = std::move(carry);
        break;
      }
      levels[level]->absorb(carry);
      carry = std::move(*levels[level]);
      levels[level].reset();
      ++level;
    }
  }
  Partial total = Partial::zero(n_rec, dim);
  for (auto& lvl : levels) {
    if (lvl.has_value()) {
      total.absorb(*lvl);
    }
  }

  EnsembleResult result;
  result.n_traj = n_traj;
  result.times.reserve(n_rec);
  for (int s : recs) {
    result.times.push_back(s * plan.dt);
  }
  result.rho_series.reserve(n_rec);
  result.mean_norm_sq.reserve(n_rec);
  const double inv = 1.0 / static_cast<double>(n_traj);
  for (std::size_t r = 0; r < n_rec; ++r) {
    result.rho_series.push_back(total.rho[r] * inv);
    result.mean_norm_sq.push_back(total.norm2[r] * inv);
  }
  return result;
}

std::vector<double> compare_to_exact(const EnsembleResult& ensemble,
                                     const GklsGenerator& g,
                                     const DensityMatrix& rho0) {
  if (ensemble.times.empty()) {
    throw Error("compare_to_exact: empty ensemble");
  }
  if (!ensemble.rho_series.empty() && ensemble.rho_series.front().rows() != g.dim()) {
    throw DimensionMismatch("compare_to_exact: dimension mismatch");
  }
  if (ensemble.times.size() != ensemble.rho_series.size()) {
    throw Error("compare_to_exact: time grid does not match the recorded series");
  }
  const std::vector<DensityMatrix> exact = evolve_exact(g, rho0, ensemble.times);
  std::vector<double> distances;
  distances.reserve(exact.size());
  for (std::size_t r = 0; r < exact.size(); ++r) {
    distances.push_back(trace_distance(ensemble.rho_series[r], exact[r]));
  }
  return distances;
}

}  // namespace qsse
