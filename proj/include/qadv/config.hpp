#pragma once

#include <cstddef>

namespace qadv {

// All numerical tolerances in one place. Every invariant check in the
// library reads from here so tests and the CLI can tighten or relax them
// uniformly (see NumericConfig::instance).
struct NumericConfig {
  double hermiticity_tol = 1e-12;
  double psd_tol = 1e-10;
  double trace_tol = 1e-10;
  double unit_norm_tol = 1e-12;
  double tp_tol = 1e-10;           // trace-preservation of channels
  double kraus_completeness_tol = 1e-10;
  double eig_clip = 1e-14;         // eigenvalues below this are zeroed before sqrt/log
  double support_rel_tol = 1e-12;  // relative support cutoff for divergences
  double lp_gap_tol = 1e-10;       // duality-gap stop for the matrix-game LP
  double reconstruction_tol = 1e-9;

  std::size_t max_total_dim = 256;

  static NumericConfig& instance();
};

inline NumericConfig& cfg() { return NumericConfig::instance(); }

}  // namespace qadv
