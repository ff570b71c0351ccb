#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adet/configuration.hpp"
#include "adet/discriminant.hpp"
#include "adet/toric.hpp"

namespace adet {

struct VerificationPlan {
  std::string config_name;
  long long n_random = 200;
  long long n_stratum_per_face = 50;
  uint64_t seed = 42;
  long long coeff_bound = 10;  // numerators in [-B,B], denominators in [1,B]
  // Hilbert cap policy: finite verdicts are profiled to dimension+2 with a
  // 5-degree vanishing window; infinite verdicts to this cap.
  size_t hilbert_cap_infinite = 25;
  size_t hilbert_window = 5;
  int threads = 1;          // <=1 sequential, 0 = hardware concurrency
  bool inject_bug = false;  // self-test: negate the finiteness verdict
};

struct SampleRecord {
  size_t index = 0;  // position in the deterministic sample sequence
  bool stratum = false;
  size_t face_pos = 0;  // lattice index, valid for stratum samples
  std::vector<Rat> alpha;
};

// Deterministic sample sequence: n_random seeded random points followed by
// n_stratum_per_face stratum points for each lattice face in order.
// Sub-seeds are derived as hash(seed, sample-index), so the sequence does
// not depend on evaluation order.
std::vector<SampleRecord> generate_samples(const VerificationPlan& plan,
                                           const PointConfiguration& a,
                                           const FaceLattice& lattice);

struct CheckCounter {
  long long checked = 0;
  long long failed = 0;
};

struct FailureRecord {
  std::string check;  // lemma | proposition | absorption | oracle
  size_t sample_index = 0;
  bool stratum = false;
  size_t face_pos = 0;
  std::vector<Rat> alpha;                     // exact reproduction data
  std::vector<std::vector<size_t>> witnesses; // witness faces, when computed
  std::vector<long long> profile_dims;        // Hilbert profile, when computed
  std::string note;
};

struct VerificationReport {
  std::string config_name;
  VerificationPlan plan;
  std::map<std::string, CheckCounter> counters;
  std::vector<FailureRecord> failures;  // sorted by (check, sample_index)
  std::map<std::string, double> wall_seconds;  // diagnostics; never serialized

  long long total_failures() const {
    long long t = 0;
    for (const auto& [k, c] : counters) t += c.failed;
    return t;
  }
  void merge(const VerificationReport& other);
};

// vA_membership against the negated finiteness verdict on every sample
VerificationReport run_lemma_check(const VerificationPlan& plan,
                                   const PointConfiguration& a,
                                   const FaceLattice& lattice,
                                   const ToricIdeal& toric);

// eA_vanishes against vA_membership on every sample, plus the closure-free
// absorption check on stratum samples of non-hypersurface faces
VerificationReport run_proposition_check(const VerificationPlan& plan,
                                         const PointConfiguration& a,
                                         const FaceLattice& lattice,
                                         const EASupport& support);

// Groebner dimension vs Hilbert-profile sum, termination by dimension+2
// with a 5-degree vanishing window, and positivity through cap 25 on
// infinite samples
VerificationReport run_oracle_consistency(const VerificationPlan& plan,
                                          const PointConfiguration& a,
                                          const FaceLattice& lattice,
                                          const ToricIdeal& toric);

// All three checks merged into one report.
VerificationReport run_verification(const VerificationPlan& plan,
                                    const PointConfiguration& a,
                                    const FaceLattice& lattice);

// Lattice-normalized volume of P via star triangulation along the face
// lattice; equals the degree of the projective toric variety.
long long normalized_volume(const PointConfiguration& a,
                            const FaceLattice& lattice);

}  // namespace adet
