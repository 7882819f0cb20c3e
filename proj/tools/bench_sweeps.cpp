// Times the heavy sweep kernels serial vs OpenMP and confirms the two paths
// produce identical measured values.

#include <chrono>
#include <cstdio>

#include "austere/campaigns.hpp"
#include "austere/parallel.hpp"

using namespace austere;

namespace {

template <typename Fn>
double time_s(const Fn& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-28s %9.3fs %9.3fs %7.2fx  %s\n", name, serial, parallel, serial / parallel,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  const std::uint64_t seed = 2026;
  std::printf("%-28s %10s %10s %8s\n", "sweep", "serial", "omp", "speedup");
  std::printf("threads available: %d\n", max_threads());

  {
    AustereSweep s1, sp;
    const double ts = time_s([&] { s1 = austere_sweep(6, Field::Quaternion, 60, seed, 1); });
    const double tp = time_s([&] { sp = austere_sweep(6, Field::Quaternion, 60, seed, 0); });
    row("austere n=6 H", ts, tp,
        s1.max_pairing_residual == sp.max_pairing_residual && s1.max_commutator == sp.max_commutator);
  }
  {
    DupinSweep s1, sp;
    const double ts = time_s([&] { s1 = dupin_sweep(Field::Quaternion, 50, seed, 1); });
    const double tp = time_s([&] { sp = dupin_sweep(Field::Quaternion, 50, seed, 0); });
    row("dupin circles H", ts, tp, s1.max_kappa_variation == sp.max_kappa_variation);
  }
  {
    SubspaceCampaign s1, sp;
    const double ts = time_s([&] { s1 = subspace_campaign(6, 4000, seed, 1); });
    const double tp = time_s([&] { sp = subspace_campaign(6, 4000, seed, 0); });
    row("exact subspaces n=6", ts, tp,
        s1.all_austere == sp.all_austere && s1.families == sp.families);
  }
  {
    CalculusSweep s1, sp;
    const double ts = time_s([&] { s1 = calculus_sweep(6, Field::Quaternion, 200, seed, 1); });
    const double tp = time_s([&] { sp = calculus_sweep(6, Field::Quaternion, 200, seed, 0); });
    row("calculus n=6 H", ts, tp,
        s1.max_grad_rel_error == sp.max_grad_rel_error &&
            s1.max_hess_rel_error == sp.max_hess_rel_error);
  }
  return 0;
}
