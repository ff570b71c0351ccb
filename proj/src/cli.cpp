#include "adet/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "adet/builtin_configs.hpp"
#include "adet/json_io.hpp"

namespace adet::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitLimit = 4;
constexpr int kExitVerification = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::VariableLimitExceeded:
    case ErrorCode::DimensionTooLarge:
      return kExitLimit;
    case ErrorCode::DimBoundViolation:
    case ErrorCode::InconsistentOracles:
    case ErrorCode::Internal:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

struct OutputMode {
  bool compact = false;
};

void emit(const Json& j, const OutputMode& mode, std::ostream& out) {
  if (mode.compact)
    out << j.dump() << "\n";
  else
    out << j.dump(2) << "\n";
}

std::pair<std::string, PointConfiguration> load_config(const std::string& ref) {
  std::string text;
  if (ref.rfind("builtin:", 0) == 0) {
    std::string name = ref.substr(8);
    const char* j = builtin_config_json(name);
    if (!j) {
      std::string names;
      for (const std::string& n : builtin_config_names()) {
        if (!names.empty()) names += ", ";
        names += n;
      }
      throw Error(ErrorCode::InvalidInput,
                  "unknown builtin config \"" + name + "\" (available: " + names + ")");
    }
    text = j;
  } else {
    std::ifstream in(ref);
    if (!in)
      throw Error(ErrorCode::InvalidInput, "cannot open config file: " + ref);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_config_text(text);
}

std::vector<Rat> load_alpha(const std::string& text, size_t d) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::InvalidInput, "--alpha is not valid JSON");
  return parse_alpha(j, d);
}

std::vector<size_t> parse_face_indices(const std::string& text, size_t d) {
  std::vector<size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    long v = std::atol(part.c_str());
    if (v < 1 || static_cast<size_t>(v) > d)
      throw Error(ErrorCode::InvalidInput, "face index out of range: " + part);
    out.push_back(static_cast<size_t>(v - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw Error(ErrorCode::InvalidInput, "empty face index list");
  return out;
}

const Face& face_by_indices(const FaceLattice& lattice,
                            const std::vector<size_t>& indices) {
  auto pos = lattice.find(indices);
  if (!pos)
    throw Error(ErrorCode::FaceNotInLattice,
                "the index set does not describe a face of the lattice");
  return lattice.faces[*pos];
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact membership tests, face discriminants and the principal "
               "determinant zero set for point configurations"};
  app.require_subcommand(1);

  OutputMode mode;
  app.add_flag("--json", mode.compact, "compact single-line JSON output");
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indented JSON output (default)");

  std::string config_ref;
  std::string alpha_text;
  std::string face_text;
  long long samples = 200, stratum = 50, coeff_bound = 10;
  uint64_t seed = 42;
  int threads = 1;
  bool inject_bug = false;

  CLI::App* cmd_faces = app.add_subcommand("faces", "face lattice of P");
  CLI::App* cmd_toric = app.add_subcommand("toric-ideal", "toric ideal I_A");
  CLI::App* cmd_membership =
      app.add_subcommand("membership", "membership of alpha in V(A)");
  CLI::App* cmd_finiteness = app.add_subcommand(
      "finiteness", "finiteness of the Euler-operator map at alpha");
  CLI::App* cmd_discriminant =
      app.add_subcommand("discriminant", "symbolic face discriminant");
  CLI::App* cmd_ea =
      app.add_subcommand("ea-support", "zero set of the principal determinant");
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "seeded verification campaign");

  for (CLI::App* c : {cmd_faces, cmd_toric, cmd_membership, cmd_finiteness,
                      cmd_discriminant, cmd_ea, cmd_verify}) {
    c->fallthrough();  // global flags may follow the subcommand
    c->add_option("--config", config_ref, "config file path or builtin:NAME")
        ->required();
  }
  for (CLI::App* c : {cmd_membership, cmd_finiteness})
    c->add_option("--alpha", alpha_text,
                  "JSON array of rational strings, e.g. [\"1\",\"-4/3\"]")
        ->required();
  cmd_discriminant->add_option("--face", face_text, "1-based indices, e.g. 1,2,3")
      ->required();
  cmd_verify->add_option("--samples", samples, "number of random samples");
  cmd_verify->add_option("--stratum", stratum, "stratum samples per face");
  cmd_verify->add_option("--seed", seed, "campaign seed");
  cmd_verify->add_option("--threads", threads,
                         "worker threads (0 = hardware concurrency)");
  cmd_verify->add_flag("--inject-bug", inject_bug,
                       "self-test: negate the finiteness verdict");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    auto [name, config] = load_config(config_ref);

    if (cmd_faces->parsed()) {
      FaceLattice lattice = face_lattice(config);
      emit(lattice_to_json(name, config, lattice), mode, out);
      return kExitOk;
    }
    if (cmd_toric->parsed()) {
      emit(toric_to_json(name, toric_ideal(config)), mode, out);
      return kExitOk;
    }
    if (cmd_membership->parsed()) {
      std::vector<Rat> alpha = load_alpha(alpha_text, config.d);
      FaceLattice lattice = face_lattice(config);
      emit(membership_to_json(alpha, vA_membership(config, lattice, alpha)), mode, out);
      return kExitOk;
    }
    if (cmd_finiteness->parsed()) {
      std::vector<Rat> alpha = load_alpha(alpha_text, config.d);
      ToricIdeal toric = toric_ideal(config);
      FinitenessReport r = finiteness_test(config, toric, alpha, /*with_profile=*/true);
      emit(finiteness_to_json(alpha, r), mode, out);
      return kExitOk;
    }
    if (cmd_discriminant->parsed()) {
      FaceLattice lattice = face_lattice(config);
      const Face& f = face_by_indices(lattice, parse_face_indices(face_text, config.d));
      emit(face_discriminant_to_json(config, face_discriminant_symbolic(config, f)),
           mode, out);
      return kExitOk;
    }
    if (cmd_ea->parsed()) {
      FaceLattice lattice = face_lattice(config);
      emit(ea_support_to_json(config, eA_support(config, lattice)), mode, out);
      return kExitOk;
    }
    if (cmd_verify->parsed()) {
      VerificationPlan plan;
      plan.config_name = name;
      plan.n_random = samples;
      plan.n_stratum_per_face = stratum;
      plan.seed = seed;
      plan.coeff_bound = coeff_bound;
      plan.threads = threads;
      plan.inject_bug = inject_bug;
      FaceLattice lattice = face_lattice(config);
      VerificationReport report = run_verification(plan, config, lattice);
      emit(report_to_json(report), mode, out);
      for (const auto& [phase, secs] : report.wall_seconds)
        err << phase << ": " << secs << "s\n";
      return report.total_failures() == 0 ? kExitOk : kExitVerification;
    }
  } catch (const Error& e) {
    emit(error_to_json(e), mode, out);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    Json j;
    j["error"]["code"] = "Internal";
    j["error"]["message"] = e.what();
    emit(j, mode, out);
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace adet::cli
