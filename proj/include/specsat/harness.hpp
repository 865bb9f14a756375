// harness.hpp — verification campaigns built from families, spectra, counts
// and bounds. Each returns a finalized VerificationReport.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specsat/bounds.hpp"
#include "specsat/counting.hpp"
#include "specsat/report.hpp"

namespace specsat {

struct CampaignOptions {
  double tol = kDefaultTol;
  int jobs = 1;
  HypothesisPolicy policy = HypothesisPolicy::kBattery;
  std::uint64_t seed = 20240611;
  double probe_constant = 10.0;
  double covering_constant = 1.0;
  double l_vs_t_delta = 0.01;
  /// Full config document; battery knobs are read from it.
  Json config;

  /// Defaults from a loaded config document.
  static CampaignOptions from_config(const Json& doc);
  BoundOptions bound_options() const { return {tol, policy}; }
};

/// Every class of the q-edge family over T_{n,r}: the matching host must be the
/// unique minimum and L the unique maximum, by disjoint enclosures.
VerificationReport verify_min_max(int n, int r, int q, const CampaignOptions& opt);

/// lambda(T_{n,r,q-1}) > lambda(Y_{n,r,q}) for q >= 2 sqrt(n), with exact K_{r+1} counts.
VerificationReport verify_tightness(int n, int r, int q, const CampaignOptions& opt);

/// Every graph on n <= 8 vertices with lambda >= lambda(T_{n,2}), other than
/// T_{n,2}, has at least floor(n/2) - 1 triangles.
VerificationReport verify_ning_zhai_exhaustive(int n, const CampaignOptions& opt);

/// Copy counts over the q-edge family plus a perturbed-graph scan for
/// graphs above the spectral threshold with too few copies.
VerificationReport verify_supersat_family(int n, int r, int q, const Pattern& p, const CampaignOptions& opt);

/// Covering numbers and copy counts over the matching, L and star hosts.
VerificationReport verify_covering(int n, int r, int s, const Pattern& p, const CampaignOptions& opt);

/// Star-in-largest-part host: copy count and lambda(Y) < lambda(T) <= lambda(L).
VerificationReport verify_t_variant(int n, int r, int q, const Pattern& p, const CampaignOptions& opt);

/// Perturbation estimate battery (two-sided residual and the unbalanced upper bound).
VerificationReport verify_first_key(int n, int r, const CampaignOptions& opt);

/// Move-one-vertex battery over part-size differences from the config.
VerificationReport verify_move_one(int n, int r, const CampaignOptions& opt);

/// Shift residual battery with embedded graphs held in place.
VerificationReport verify_shift(int n, int r, double eps, const CampaignOptions& opt);

/// L versus star-host comparisons.
VerificationReport verify_l_vs_t(int n, int r, int q, const CampaignOptions& opt);

std::vector<std::string> theorem_names();

/// Dispatch by theorem name with parameters as JSON ({"n":..,"r":..,...}).
VerificationReport run_campaign(const std::string& theorem, const Json& params, const CampaignOptions& opt);

/// Every parameter set listed for `theorem` in the config batteries.
std::vector<VerificationReport> run_battery(const std::string& theorem, const CampaignOptions& opt);

}  // namespace specsat
