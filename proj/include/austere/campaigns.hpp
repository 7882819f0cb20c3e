#pragma once

#include <cstdint>
#include <string>

#include "austere/field.hpp"
#include "austere/report.hpp"

namespace austere {

struct RunConfig {
  std::string command = "all";
  int n = 4;
  Field field = Field::Real;
  long trials = 0;  // 0 = per-command default
  std::uint64_t seed = 12345;
  double tol_structural = 1e-10;
  double tol_spectral = 1e-8;
  int threads = 0;  // 0 = runtime default, 1 = serial reference
  std::string matrix_arg;      // spectrum input (file or diag: shorthand)
  std::string trace_csv_path;  // dupin: optional curvature-circle trace dump
};

// Sweep kernels. Each fans trials out over threads with per-trial seeds and
// reduces serially, so the serial and parallel paths return identical values.

struct AustereSweep {
  long points = 0;
  double max_pairing_residual = 0.0;
  double max_commutator = 0.0;
};
AustereSweep austere_sweep(int n, Field f, long points, std::uint64_t seed, int threads = 0);

struct SpectrumSweep {
  long points = 0;
  double max_rel_error = 0.0;  // assembled eigenvalues vs closed form, sorted
};
SpectrumSweep spectrum_closed_form_sweep(Field f, long points, std::uint64_t seed, int threads = 0);

struct CurvatureSweep {
  long points = 0;
  double max_rel_error = 0.0;  // closed form vs Gauss equation
};
CurvatureSweep scalar_curvature_sweep(Field f, long points, std::uint64_t seed, int threads = 0);

struct RegularitySweep {
  long points = 0;
  long decisive = 0;
  long disagreements = 0;  // decisive cases where the two criteria split
  bool anchors_critical = true;
};
RegularitySweep regularity_sweep(int n, long points, std::uint64_t seed, int threads = 0);

struct DupinSweep {
  long points = 0;
  double max_kappa_variation = 0.0;  // over all circles and grid nodes
};
DupinSweep dupin_sweep(Field f, long points, std::uint64_t seed, int threads = 0,
                       const std::string& trace_csv_path = {});

struct SpanRank {
  int sphere_index = 0;
  int rank = 0;
  int expected = 0;
  double gap = 0.0;
};
std::vector<SpanRank> reducibility_ranks(Field f, long n_samples, std::uint64_t seed);

struct BracketSweep {
  long points = 0;
  double max_rel_error = 0.0;   // closed form vs flow commutator
  double min_obstruction = 0.0; // smallest principal component over the five pairs
  double max_off_span = 0.0;    // residual outside the matched distribution
  double anchor_error = 0.0;    // |coefficient - 5/(6 sqrt 10)| at the anchor
};
BracketSweep bracket_sweep(long points, std::uint64_t seed, int threads = 0);

struct C4Campaign {
  long trials = 0;
  double worst_spectrum_residual = 0.0;
  double rep_residual = 0.0;        // entrywise vs the displays (R, C only)
  bool normal_form_ok = true;       // conjugated span matches the block form
  bool exact_span_austere = true;   // exact subspace test of the conjugated span
};
C4Campaign c4_campaign(Field f, long trials, std::uint64_t seed, int threads = 0);

struct SubspaceCampaign {
  long families = 0;
  long exact_trials_each = 0;
  bool all_austere = true;
  bool dims_match = true;
  long constraint_triples = 0;  // admissible random triples checked exactly
};
SubspaceCampaign subspace_campaign(int n, long exact_trials, std::uint64_t seed, int threads = 0);

struct BoundCampaign {
  long points_per_n = 0;
  long signature_mismatches = 0;
  bool chain_identities_ok = true;  // 1 + nullity + index = bound; even-n table match
  long search_attempts = 0;
  bool search_within_bound = true;
  bool search_attains_bound = true;
};
BoundCampaign bound_campaign(long points_per_n, long search_attempts, std::uint64_t seed,
                             int threads = 0);

struct CalculusSweep {
  long checks = 0;
  double max_grad_rel_error = 0.0;
  double max_hess_rel_error = 0.0;
};
CalculusSweep calculus_sweep(int n, Field f, long points, std::uint64_t seed, int threads = 0);

// Report-producing campaign dispatch for the CLI.
Report run_campaign(const RunConfig& cfg);

}  // namespace austere
