#include "tvb/cli.hpp"

#include "tvb/bounds.hpp"
#include "tvb/delprod.hpp"
#include "tvb/json_io.hpp"
#include "tvb/plmaps.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace tvb {

namespace {

const char* kSolverNote = "exact rational phase-1 simplex over canonical face enumeration";

long long require(const std::optional<long long>& v, const char* name) {
  if (!v) throw std::invalid_argument(std::string("missing required parameter: ") + name);
  return *v;
}

std::string require_path(const std::string& p, const char* name) {
  if (p.empty()) throw std::invalid_argument(std::string("missing required path: ") + name);
  return p;
}

void emit(const RunManifest& m, const Json& doc) {
  if (m.out_path.empty())
    std::cout << canonical_dump(doc);
  else
    write_json_atomic(m.out_path, doc);
}

int run_barycenter(const RunManifest& m) {
  const Json problem = load_json_file(require_path(m.polytope_path, "--polytope"));
  const Polytope P = polytope_from_json(problem);
  if (m.point_text.empty()) throw std::invalid_argument("missing required parameter: --point");
  const RatVector p = parse_rational_vector(m.point_text);
  const int k = static_cast<int>(require(m.k, "-k"));
  const int r = static_cast<int>(require(m.r, "-r"));

  const auto cert =
      m.recursive ? solve_barycenter_recursive(P, p, k, r) : solve_barycenter(P, p, k, r);

  Json out;
  out["schema_version"] = kSchemaVersion;
  out["problem_hash"] = problem_hash(problem);
  out["parameters"] = {{"point", rational_vector_to_json(p)},
                       {"k", k},
                       {"r", r},
                       {"recursive", m.recursive}};
  out["provenance"] = {{"solver", kSolverNote}};
  if (!cert) {
    out["kind"] = "no_certificate";
    out["result"] = "none";
    emit(m, out);
    return kExitNoCertificate;
  }
  const auto check = verify_certificate(P, p, k, r, *cert);
  if (!check) {
    std::cerr << "internal inconsistency: solver certificate rejected: " << check.reason << "\n";
    return kExitInconsistent;
  }
  out["kind"] = "barycenter_certificate";
  out["result"] = "certificate";
  out.update(barycenter_certificate_to_json(*cert));
  emit(m, out);
  return kExitOk;
}

Json trial_mode_json(const TrialMode& mode) {
  switch (mode.kind) {
    case TrialMode::classical: return "classical";
    case TrialMode::skeleton: return "skeleton";
    case TrialMode::colored: return "colored";
  }
  return {};
}

int run_trials(const RunManifest& m, const TrialMode& mode) {
  const int d = static_cast<int>(require(m.d, "-d"));
  const int r = static_cast<int>(require(m.r, "-r"));
  const int trials = static_cast<int>(require(m.trials, "--trials"));
  const std::uint64_t seed = m.seed.value_or(0);
  const long long default_n =
      mode.kind == TrialMode::skeleton ? (r - 1) * (d + 2) : (r - 1) * (d + 1);
  const int N = static_cast<int>(m.n.value_or(default_n));

  const TrialReport report = random_trial_suite(d, r, N, trials, seed, mode);
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "trial_report";
  out["parameters"] = {{"d", d},        {"r", r},
                       {"n", N},        {"trials", trials},
                       {"seed", seed},  {"mode", trial_mode_json(mode)}};
  if (mode.kind == TrialMode::skeleton) out["parameters"]["k"] = mode.k;
  out["successes"] = report.successes;
  out["failures"] = report.failures;
  Json seeds = Json::array();
  for (const auto s : report.failing_seeds) seeds.push_back(std::to_string(s));
  out["failing_seeds"] = seeds;
  emit(m, out);
  return kExitOk;
}

int run_tverberg(const RunManifest& m, RunManifest::Command which) {
  TrialMode mode;
  if (which == RunManifest::Command::vkf) {
    mode.kind = TrialMode::skeleton;
    mode.k = static_cast<int>(require(m.k, "-k"));
  } else if (which == RunManifest::Command::colored) {
    mode.kind = TrialMode::colored;
  }
  if (m.trials) return run_trials(m, mode);

  const Json problem = load_json_file(require_path(m.config_path, "--config"));
  const PointConfiguration cfg = config_from_json(problem);
  const int r = static_cast<int>(require(m.r, "-r"));

  std::optional<TverbergCertificate> cert;
  FaceConstraints constraints;
  Json params = {{"r", r}};
  if (which == RunManifest::Command::vkf) {
    cert = skeleton_tverberg_partition(cfg, r, mode.k);
    constraints.max_vertices = mode.k + 1;
    params["k"] = mode.k;
    params["mode"] = "skeleton";
  } else if (which == RunManifest::Command::colored) {
    std::optional<std::vector<int>> colors = colors_from_json(problem);
    if (!m.colors_path.empty()) colors = colors_from_json(load_json_file(m.colors_path));
    if (!colors)
      throw std::invalid_argument("colored: no \"colors\" in the configuration or --colors file");
    if (colors->size() != cfg.points.size())
      throw std::invalid_argument("colored: one color per vertex required");
    cert = colored_tverberg_partition(cfg, *colors, r);
    constraints.colors = *colors;
    params["mode"] = "colored";
  } else {
    cert = tverberg_partition(cfg, r);
    params["mode"] = "classical";
  }

  Json out;
  out["schema_version"] = kSchemaVersion;
  out["problem_hash"] = problem_hash(problem);
  out["parameters"] = params;
  out["provenance"] = {{"solver", kSolverNote}};
  if (!cert) {
    out["kind"] = "no_certificate";
    out["result"] = "none";
    emit(m, out);
    return kExitNoCertificate;
  }
  const auto check = verify_tverberg_certificate(cfg, *cert, constraints);
  if (!check) {
    std::cerr << "internal inconsistency: solver certificate rejected: " << check.reason << "\n";
    return kExitInconsistent;
  }
  out["kind"] = "tverberg_certificate";
  out["result"] = "certificate";
  if (constraints.max_vertices) out["constraints"] = {{"max_face_vertices", *constraints.max_vertices}};
  if (constraints.colors) out["constraints"] = {{"colored", true}};
  out.update(tverberg_certificate_to_json(*cert));
  emit(m, out);
  return kExitOk;
}

int run_delprod(const RunManifest& m) {
  const Json problem = load_json_file(require_path(m.config_path, "--config"));
  const SimplicialComplex K = complex_from_json(problem);
  const int r = static_cast<int>(require(m.r, "-r"));
  const CellComplex C = deleted_product(K, r);
  const auto H = homology(C);
  const auto sym = sym_action_check(C, r);

  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "deleted_product_report";
  out["problem_hash"] = problem_hash(problem);
  out["parameters"] = {{"r", r}};
  out["f_vector"] = f_vector(C);
  out["dim"] = complex_dim(C);
  Json hom = Json::array();
  for (const auto& h : H) {
    Json level;
    level["betti"] = h.betti;
    Json tor = Json::array();
    for (const auto& t : h.torsion) tor.push_back(t.str());
    level["torsion"] = tor;
    hom.push_back(level);
  }
  out["homology"] = hom;
  out["sym_action"] = {{"is_free", sym.is_free}, {"orbit_counts", sym.orbit_counts}};
  out["provenance"] = {{"homology", "Smith normal form over arbitrary-precision integers"}};
  emit(m, out);
  return kExitOk;
}

int run_lift(const RunManifest& m) {
  const std::string path = require_path(m.config_path, "--config");
  const Json problem = load_json_file(path);
  const PointConfiguration cfg = config_from_json(problem);
  const int k = static_cast<int>(require(m.k, "-k"));
  const PointConfiguration lifted = join_lift_config(cfg, k);

  Json out = config_to_json(lifted);
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "configuration";
  out["provenance"] = {{"source", path}, {"k", k}, {"construction", "join lift"}};
  emit(m, out);
  return kExitOk;
}

int run_bounds(const RunManifest& m) {
  const long long r = require(m.r, "-r");
  const long long d_default = m.table_dmax ? 1 : require(m.d, "-d");
  if (m.table_dmax) {
    const long long dmax = *m.table_dmax;
    std::string table = "| d | lower | upper | exact | conjecture |\n|---|---|---|---|---|\n";
    for (long long d = 1; d <= dmax; ++d) {
      const BoundsReport rep = bounds_report(r, d);
      table += "| " + std::to_string(d) + " | " + std::to_string(rep.lower.value) + " | " +
               std::to_string(rep.upper.value) + " | " +
               (rep.exact ? std::to_string(*rep.exact) : std::string("?")) + " | " +
               std::to_string(rep.conjecture) + " |\n";
    }
    if (m.out_path.empty())
      std::cout << table;
    else {
      std::ofstream outfile(m.out_path + ".tmp", std::ios::trunc);
      if (!outfile) throw std::invalid_argument("cannot write file: " + m.out_path);
      outfile << table;
      outfile.close();
      if (std::rename((m.out_path + ".tmp").c_str(), m.out_path.c_str()) != 0)
        throw std::invalid_argument("cannot rename into place: " + m.out_path);
    }
    return kExitOk;
  }
  const BoundsReport rep = bounds_report(r, d_default);
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "bounds_report";
  out["r"] = rep.r;
  out["d"] = rep.d;
  out["lower"] = {{"value", rep.lower.value}, {"provenance", rep.lower.provenance}};
  out["upper"] = {{"value", rep.upper.value}, {"provenance", rep.upper.provenance}};
  out["exact"] = rep.exact ? Json(*rep.exact) : Json(nullptr);
  out["conjecture"] = {{"value", rep.conjecture}, {"provenance", rep.conjecture_provenance}};
  emit(m, out);
  return kExitOk;
}

int run_verify(const RunManifest& m) {
  const Json cert_doc = load_json_file(require_path(m.certificate_path, "certificate"));
  const Json problem = load_json_file(require_path(m.problem_path, "problem"));
  if (!cert_doc.contains("kind")) throw std::invalid_argument("certificate has no \"kind\" field");
  const std::string kind = cert_doc.at("kind").get<std::string>();
  if (!cert_doc.contains("problem_hash"))
    throw std::invalid_argument("certificate has no \"problem_hash\" field");
  if (cert_doc.at("problem_hash").get<std::string>() != problem_hash(problem)) {
    std::cerr << "invalid: problem hash mismatch\n";
    return kExitInconsistent;
  }

  if (kind == "barycenter_certificate") {
    const Polytope P = polytope_from_json(problem);
    const auto& params = cert_doc.at("parameters");
    const RatVector p = rational_vector_from_json(params.at("point"));
    const int k = params.at("k").get<int>();
    const int r = params.at("r").get<int>();
    const BarycenterCertificate cert = barycenter_certificate_from_json(cert_doc);
    const auto check = verify_certificate(P, p, k, r, cert);
    if (!check) {
      std::cerr << "invalid: " << check.reason << "\n";
      return kExitInconsistent;
    }
    return kExitOk;
  }
  if (kind == "tverberg_certificate") {
    const PointConfiguration cfg = config_from_json(problem);
    const TverbergCertificate cert = tverberg_certificate_from_json(cert_doc);
    FaceConstraints constraints;
    if (cert_doc.contains("constraints")) {
      const auto& c = cert_doc.at("constraints");
      if (c.contains("max_face_vertices"))
        constraints.max_vertices = c.at("max_face_vertices").get<int>();
      if (c.contains("colored") && c.at("colored").get<bool>()) {
        const auto colors = colors_from_json(problem);
        if (!colors)
          throw std::invalid_argument("colored certificate but problem has no colors");
        constraints.colors = *colors;
      }
    }
    const auto check = verify_tverberg_certificate(cfg, cert, constraints);
    if (!check) {
      std::cerr << "invalid: " << check.reason << "\n";
      return kExitInconsistent;
    }
    return kExitOk;
  }
  throw std::invalid_argument("unknown certificate kind: " + kind);
}

}  // namespace

int run(const RunManifest& manifest) {
  try {
    switch (manifest.command) {
      case RunManifest::Command::barycenter: return run_barycenter(manifest);
      case RunManifest::Command::tverberg:
      case RunManifest::Command::vkf:
      case RunManifest::Command::colored: return run_tverberg(manifest, manifest.command);
      case RunManifest::Command::delprod: return run_delprod(manifest);
      case RunManifest::Command::lift: return run_lift(manifest);
      case RunManifest::Command::bounds: return run_bounds(manifest);
      case RunManifest::Command::verify: return run_verify(manifest);
    }
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  }
}

}  // namespace tvb
