#include "adet/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "adet/rng.hpp"

namespace adet {

namespace {

// stable tags mixed into sub-seeds so random and stratum streams differ
constexpr uint64_t kRandomTag = 0x72616e646f6dULL;
constexpr uint64_t kStratumTag = 0x7374726174ULL;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& body) {
  unsigned t = threads == 0 ? std::thread::hardware_concurrency()
                            : static_cast<unsigned>(threads);
  if (t <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  t = std::min<unsigned>(t, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned w = 0; w < t; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

void sort_failures(std::vector<FailureRecord>& failures) {
  std::sort(failures.begin(), failures.end(),
            [](const FailureRecord& a, const FailureRecord& b) {
              if (a.check != b.check) return a.check < b.check;
              return a.sample_index < b.sample_index;
            });
}

std::string alpha_string(const std::vector<Rat>& alpha) {
  std::string out = "(";
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ",";
    out += alpha[i].to_string();
  }
  return out + ")";
}

}  // namespace

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& [name, counter] : other.counters) {
    counters[name].checked += counter.checked;
    counters[name].failed += counter.failed;
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& [name, secs] : other.wall_seconds) wall_seconds[name] += secs;
  sort_failures(failures);
}

std::vector<SampleRecord> generate_samples(const VerificationPlan& plan,
                                           const PointConfiguration& a,
                                           const FaceLattice& lattice) {
  std::vector<SampleRecord> out;
  size_t index = 0;
  for (long long i = 0; i < plan.n_random; ++i, ++index) {
    Rng rng(derive_seed(plan.seed ^ kRandomTag, index));
    SampleRecord s;
    s.index = index;
    s.stratum = false;
    s.alpha.reserve(a.d);
    for (size_t j = 0; j < a.d; ++j) s.alpha.push_back(rng.rational(plan.coeff_bound));
    out.push_back(std::move(s));
  }
  for (size_t fp = 0; fp < lattice.faces.size(); ++fp) {
    for (long long i = 0; i < plan.n_stratum_per_face; ++i, ++index) {
      SampleRecord s;
      s.index = index;
      s.stratum = true;
      s.face_pos = fp;
      s.alpha = sample_nabla_point(a, lattice.faces[fp],
                                   derive_seed(plan.seed ^ kStratumTag, index));
      out.push_back(std::move(s));
    }
  }
  return out;
}

VerificationReport run_lemma_check(const VerificationPlan& plan,
                                   const PointConfiguration& a,
                                   const FaceLattice& lattice,
                                   const ToricIdeal& toric) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.config_name = plan.config_name;
  report.plan = plan;

  std::vector<SampleRecord> samples = generate_samples(plan, a, lattice);
  std::vector<char> ok(samples.size(), 1);
  std::vector<std::string> notes(samples.size());
  std::vector<std::vector<std::vector<size_t>>> witnesses(samples.size());
  parallel_for(samples.size(), plan.threads, [&](size_t i) {
    const SampleRecord& s = samples[i];
    MembershipVerdict mv = vA_membership(a, lattice, s.alpha);
    FinitenessReport fin = finiteness_test(a, toric, s.alpha);
    bool finite = plan.inject_bug ? !fin.finite : fin.finite;
    if (mv.in_vA == finite) {
      ok[i] = 0;
      for (const Face& f : mv.witness_faces) witnesses[i].push_back(f.indices);
      notes[i] = std::string("in_vA=") + (mv.in_vA ? "true" : "false") +
                 " finite=" + (finite ? "true" : "false") + " at alpha=" +
                 alpha_string(s.alpha);
    }
  });

  CheckCounter& counter = report.counters["lemma"];
  for (size_t i = 0; i < samples.size(); ++i) {
    ++counter.checked;
    if (ok[i]) continue;
    ++counter.failed;
    report.failures.push_back({"lemma", samples[i].index, samples[i].stratum,
                               samples[i].face_pos, samples[i].alpha,
                               witnesses[i], {}, notes[i]});
  }
  sort_failures(report.failures);
  report.wall_seconds["lemma"] = seconds_since(t0);
  return report;
}

VerificationReport run_proposition_check(const VerificationPlan& plan,
                                         const PointConfiguration& a,
                                         const FaceLattice& lattice,
                                         const EASupport& support) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.config_name = plan.config_name;
  report.plan = plan;

  std::vector<SampleRecord> samples = generate_samples(plan, a, lattice);
  // 0 = proposition failure, 1 = ok, 2 = absorption failure (implies 0)
  std::vector<char> prop_ok(samples.size(), 1);
  std::vector<char> absorption_ok(samples.size(), 1);
  std::vector<char> absorption_applies(samples.size(), 0);
  std::vector<std::string> notes(samples.size());
  std::vector<std::vector<std::vector<size_t>>> witnesses(samples.size());
  parallel_for(samples.size(), plan.threads, [&](size_t i) {
    const SampleRecord& s = samples[i];
    bool vanishes = eA_vanishes(support, s.alpha);
    MembershipVerdict mv = vA_membership(a, lattice, s.alpha);
    if (vanishes != mv.in_vA) {
      prop_ok[i] = 0;
      for (const Face& f : mv.witness_faces) witnesses[i].push_back(f.indices);
      notes[i] = std::string("eA_vanishes=") + (vanishes ? "true" : "false") +
                 " in_vA=" + (mv.in_vA ? "true" : "false") + " at alpha=" +
                 alpha_string(s.alpha);
    }
    if (s.stratum && !support.per_face[s.face_pos].hypersurface) {
      absorption_applies[i] = 1;
      if (!vanishes) absorption_ok[i] = 0;
    }
  });

  CheckCounter& prop = report.counters["proposition"];
  CheckCounter& absorption = report.counters["absorption"];
  for (size_t i = 0; i < samples.size(); ++i) {
    ++prop.checked;
    if (!prop_ok[i]) {
      ++prop.failed;
      report.failures.push_back({"proposition", samples[i].index,
                                 samples[i].stratum, samples[i].face_pos,
                                 samples[i].alpha, witnesses[i], {}, notes[i]});
    }
    if (absorption_applies[i]) {
      ++absorption.checked;
      if (!absorption_ok[i]) {
        ++absorption.failed;
        report.failures.push_back(
            {"absorption", samples[i].index, samples[i].stratum,
             samples[i].face_pos, samples[i].alpha, witnesses[i], {},
             "stratum point of a non-hypersurface face escapes V(E_A) at alpha=" +
                 alpha_string(samples[i].alpha)});
      }
    }
  }
  sort_failures(report.failures);
  report.wall_seconds["proposition"] = seconds_since(t0);
  return report;
}

VerificationReport run_oracle_consistency(const VerificationPlan& plan,
                                          const PointConfiguration& a,
                                          const FaceLattice& lattice,
                                          const ToricIdeal& toric) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.config_name = plan.config_name;
  report.plan = plan;

  const size_t cap = plan.hilbert_cap_infinite;
  const size_t window = plan.hilbert_window;

  std::vector<SampleRecord> samples = generate_samples(plan, a, lattice);
  std::vector<char> ok(samples.size(), 1);
  std::vector<std::string> notes(samples.size());
  std::vector<std::vector<long long>> profiles(samples.size());
  parallel_for(samples.size(), plan.threads, [&](size_t i) {
    const SampleRecord& s = samples[i];
    FinitenessReport fin = finiteness_test(a, toric, s.alpha);
    if (fin.finite) {
      HilbertProfile profile =
          hilbert_quotient_profile(a, s.alpha, fin.dimension + 2, window);
      bool good = profile.reached_zero && profile.zero_at <= fin.dimension + 2 &&
                  profile.total() == static_cast<long long>(fin.dimension);
      if (good) {
        for (size_t nn = profile.zero_at; nn <= profile.zero_at + window; ++nn)
          good = good && nn < profile.dims.size() && profile.dims[nn] == 0;
      }
      if (!good) {
        ok[i] = 0;
        profiles[i] = profile.dims;
        notes[i] = "finite dimension " + std::to_string(fin.dimension) +
                   " not matched by profile at alpha=" + alpha_string(s.alpha);
      }
    } else {
      HilbertProfile profile = hilbert_quotient_profile(a, s.alpha, cap);
      bool good = profile.cap_hit && profile.dims.size() == cap + 1;
      for (long long dch : profile.dims) good = good && dch > 0;
      if (!good) {
        ok[i] = 0;
        profiles[i] = profile.dims;
        notes[i] = "infinite verdict but profile vanishes at alpha=" +
                   alpha_string(s.alpha);
      }
    }
  });

  CheckCounter& counter = report.counters["oracle"];
  for (size_t i = 0; i < samples.size(); ++i) {
    ++counter.checked;
    if (ok[i]) continue;
    ++counter.failed;
    report.failures.push_back({"oracle", samples[i].index, samples[i].stratum,
                               samples[i].face_pos, samples[i].alpha, {},
                               profiles[i], notes[i]});
  }
  sort_failures(report.failures);
  report.wall_seconds["oracle"] = seconds_since(t0);
  return report;
}

VerificationReport run_verification(const VerificationPlan& plan,
                                    const PointConfiguration& a,
                                    const FaceLattice& lattice) {
  ToricIdeal toric = toric_ideal(a);
  EASupport support = eA_support(a, lattice);
  VerificationReport report = run_lemma_check(plan, a, lattice, toric);
  report.merge(run_proposition_check(plan, a, lattice, support));
  report.merge(run_oracle_consistency(plan, a, lattice, toric));
  return report;
}

namespace {

Int det_int(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  if (n == 0) return Int(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Int out(0);
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Int>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Int term = m[0][c] * det_int(std::move(minor));
    out = (c % 2 == 0) ? out + term : out - term;
  }
  return out;
}

// star triangulation of a face along the lattice; returns vertex index sets
std::vector<std::vector<size_t>> triangulate_face(const FaceLattice& lattice,
                                                  size_t face_pos) {
  const Face& f = lattice.faces[face_pos];
  if (f.dim == 0) return {{f.indices[0]}};

  auto contained_in = [&](const Face& g) {
    return std::includes(f.indices.begin(), f.indices.end(), g.indices.begin(),
                         g.indices.end());
  };

  // apex: least vertex of the face
  size_t apex = SIZE_MAX;
  for (const Face& g : lattice.faces)
    if (g.dim == 0 && contained_in(g)) {
      apex = g.indices[0];
      break;
    }
  if (apex == SIZE_MAX)
    throw Error(ErrorCode::Internal, "face without a vertex");

  std::vector<std::vector<size_t>> out;
  for (size_t gp = 0; gp < lattice.faces.size(); ++gp) {
    const Face& g = lattice.faces[gp];
    if (g.dim + 1 != f.dim || g.indices == f.indices || !contained_in(g))
      continue;
    if (std::binary_search(g.indices.begin(), g.indices.end(), apex)) continue;
    for (std::vector<size_t> simplex : triangulate_face(lattice, gp)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  if (out.empty()) throw Error(ErrorCode::Internal, "face without facets");
  return out;
}

}  // namespace

long long normalized_volume(const PointConfiguration& a,
                            const FaceLattice& lattice) {
  const size_t m = a.k - 1;
  if (m > 3)
    throw Error(ErrorCode::DimensionTooLarge,
                "normalized volume supports dimension <= 3");
  if (m == 0) return 1;

  Int total(0);
  for (const std::vector<size_t>& simplex :
       triangulate_face(lattice, lattice.faces.size() - 1)) {
    if (simplex.size() != m + 1)
      throw Error(ErrorCode::Internal, "triangulation produced a non-simplex");
    std::vector<long long> base = a.projected(simplex.back());
    std::vector<std::vector<Int>> mat(m, std::vector<Int>(m));
    for (size_t r = 0; r < m; ++r) {
      std::vector<long long> p = a.projected(simplex[r]);
      for (size_t c = 0; c < m; ++c) mat[r][c] = Int(p[c] - base[c]);
    }
    total += det_int(std::move(mat)).abs();
  }
  return total.to_int64();
}

}  // namespace adet
