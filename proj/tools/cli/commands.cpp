#include "commands.hpp"

#include <cmath>
#include <exception>

#include "bcx/cyclic.hpp"
#include "bcx/errors.hpp"
#include "bcx/spectral.hpp"
#include "bcx/spectral_measure.hpp"
#include "verify.hpp"

namespace bcx::cli {

namespace {

constexpr double kDefaultResidualTol = 1e-10;

json header(const std::string& command, const MatrixFile* input) {
  json r;
  r["command"] = command;
  r["version"] = kReportVersion;
  if (input) {
    r["input"] = {{"digest", input->digest}, {"n", input->n}};
  } else {
    r["input"] = nullptr;
  }
  return r;
}

json verdict(double value, double tolerance) {
  return {{"value", value}, {"tolerance", tolerance}, {"pass", value <= tolerance}};
}

CommandResult failure(json report, int code, const Error& e) {
  report["status"] = "error";
  report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  return {code, std::move(report)};
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NotSelfAdjoint: return kExitNotSelfAdjoint;
    case ErrorKind::NoConvergence: return kExitNoConvergence;
    case ErrorKind::NotCyclic: return kExitNotCyclic;
    default: return kExitUsage;
  }
}

CommandResult from_error(json report, const Error& e) {
  const int code = exit_code_for(e);
  CommandResult r = failure(std::move(report), code, e);
  if (const auto* sa = dynamic_cast<const NotSelfAdjointError*>(&e)) {
    r.report["error"]["symmetry_defect"] = sa->defect();
  } else if (const auto* nc = dynamic_cast<const NotCyclicError*>(&e)) {
    r.report["error"]["krylov_ranks"] = {nc->rank1(), nc->rank2()};
  } else if (const auto* cv = dynamic_cast<const NoConvergenceError*>(&e)) {
    r.report["error"]["sweeps"] = cv->sweeps();
    r.report["error"]["off_diagonal"] = cv->off_diagonal();
  }
  return r;
}

json spectrum_json(const std::vector<double>& xs) { return json(xs); }

}  // namespace

CommandResult cmd_split(const MatrixFile& input, const CommandOptions&) {
  json report = header("split", &input);
  const auto [t1, t2] = op_split(input.matrix);
  report["outputs"] = {{"component1", to_json(t1)}, {"component2", to_json(t2)}};
  report["tolerances"] = json::object();
  report["status"] = "ok";
  return {kExitOk, std::move(report)};
}

CommandResult cmd_eig(const MatrixFile& input, const CommandOptions& options) {
  json report = header("eig", &input);
  const double tol = options.tol.value_or(kDefaultResidualTol);
  report["tolerances"] = {{"self_adjoint", kSelfAdjointTolerance},
                          {"reconstruction", tol},
                          {"unitarity", tol},
                          {"jacobi_off_diagonal", JacobiOptions{}.off_diagonal_tol},
                          {"jacobi_max_sweeps", JacobiOptions{}.max_sweeps}};
  try {
    const SpectralDecomposition d = spectral_decompose(input.matrix);
    json eigenvalues = json::array();
    for (const auto& h : d.eigenvalues) eigenvalues.push_back(to_json(h));
    json idempotent = json::array();
    for (const auto& h : d.eigenvalues) idempotent.push_back({h.a1(), h.a2()});
    report["outputs"] = {{"U", to_json(d.unitary)},
                         {"M", std::move(eigenvalues)},
                         {"M_idempotent", std::move(idempotent)},
                         {"component_spectra", {spectrum_json(d.spectrum1), spectrum_json(d.spectrum2)}}};
    const double scale = 1.0 + norm_x(input.matrix);
    const json reconstruction = verdict(d.residual / scale, tol);
    const json unitarity = verdict(unitarity_defect(d.unitary), tol);
    report["residuals"] = {{"reconstruction", d.residual}, {"reconstruction_scale", scale}};
    report["verdicts"] = {{"reconstruction", reconstruction}, {"unitarity", unitarity}};
    const bool ok = reconstruction["pass"].get<bool>() && unitarity["pass"].get<bool>();
    report["status"] = ok ? "ok" : "residual_out_of_tolerance";
    return {ok ? kExitOk : kExitNoConvergence, std::move(report)};
  } catch (const Error& e) {
    return from_error(std::move(report), e);
  }
}

CommandResult cmd_measure(const MatrixFile& input, const CommandOptions& options) {
  json report = header("measure", &input);
  const double tol = options.tol.value_or(kDefaultResidualTol);
  report["tolerances"] = {{"self_adjoint", kSelfAdjointTolerance},
                          {"rank", kRankTolerance},
                          {"min_atom_weight", kMinAtomWeight},
                          {"mass", 1e-12},
                          {"moments", tol},
                          {"intertwining", tol},
                          {"unit_image", tol}};
  try {
    BCVector w;
    if (options.vector) {
      w = parse_vector_argument(*options.vector);
      if (w.size() != input.n) {
        throw Error(ErrorKind::DimensionMismatch, "vector: length " + std::to_string(w.size()) +
                                                      " does not match n = " + std::to_string(input.n));
      }
    } else if (options.find_cyclic) {
      auto found = find_cyclic_vector(input.matrix);
      if (!found) {
        report["status"] = "error";
        report["error"] = {{"kind", "NotCyclic"},
                           {"message", "no cyclic vector exists: a component spectrum is not simple"}};
        return {kExitNotCyclic, std::move(report)};
      }
      w = std::move(*found);
      report["found_vector"] = to_json(w);
    } else if (input.vector) {
      w = *input.vector;
    } else {
      return failure(std::move(report), kExitUsage,
                     Error(ErrorKind::ParseError,
                           "measure needs a vector: file \"vector\", --vector, or --find-cyclic"));
    }
    report["vector"] = to_json(w);

    const CyclicityReport cyc = is_cyclic(input.matrix, w);
    report["krylov_ranks"] = {cyc.rank1, cyc.rank2};
    const L2Representation rep = unitary_to_l2(input.matrix, w);
    const auto [t1, t2] = op_split(input.matrix);

    json moments = json::array();
    double mass = 0.0, moment_err = 0.0, intertwining = 0.0, unit_image = 0.0;
    auto component = [&](const ComplexMatrix& tc, const ComplexMatrix& uc, const ComplexVector& wc,
                         const AtomicMeasure& mu) {
      mass = std::max(mass, std::abs(mu.total_mass() - 1.0));
      for (int m = 0; m <= 3; ++m) {
        const double err = std::abs(mu.moment(m) - vector_moment(tc, wc, m));
        moment_err = std::max(moment_err, err);
        moments.push_back(err);
      }
      Eigen::VectorXcd atoms(static_cast<Eigen::Index>(mu.atoms.size()));
      for (Eigen::Index i = 0; i < atoms.size(); ++i) atoms(i) = mu.atoms[static_cast<std::size_t>(i)];
      intertwining = std::max(intertwining, (uc * tc - atoms.asDiagonal() * uc).norm() /
                                                (uc.norm() * (1.0 + tc.norm())));
      unit_image = std::max(unit_image,
                            (uc * wc - ComplexVector::Ones(wc.size())).cwiseAbs().maxCoeff());
    };
    component(t1, rep.unitary1, rep.normalized1, rep.measure.first);
    component(t2, rep.unitary2, rep.normalized2, rep.measure.second);

    report["outputs"] = {{"measure", to_json(rep.measure)},
                         {"U1", to_json(rep.unitary1)},
                         {"U2", to_json(rep.unitary2)}};
    report["residuals"] = {{"moments", std::move(moments)},
                           {"mass", mass},
                           {"intertwining", intertwining},
                           {"unit_image", unit_image}};
    report["verdicts"] = {{"mass", verdict(mass, 1e-12)},
                          {"moments", verdict(moment_err, tol)},
                          {"intertwining", verdict(intertwining, tol)},
                          {"unit_image", verdict(unit_image, tol)}};
    bool ok = true;
    for (const auto& [name, v] : report["verdicts"].items()) ok = ok && v["pass"].get<bool>();
    report["status"] = ok ? "ok" : "residual_out_of_tolerance";
    return {ok ? kExitOk : kExitNoConvergence, std::move(report)};
  } catch (const Error& e) {
    return from_error(std::move(report), e);
  }
}

CommandResult cmd_verify(const MatrixFile* input, const CommandOptions& options) {
  json report = header("verify", input);
  VerifyOptions vo;
  vo.seed = options.seed;
  vo.trials = options.trials;
  if (input) vo.matrix = input->matrix;
  report["seed"] = options.seed;
  report["trials"] = options.trials;

  json families = json::array();
  bool all = true;
  for (const FamilyResult& f : run_verify(vo)) {
    families.push_back({{"name", f.name},
                        {"trials", f.trials},
                        {"max_residual", f.max_residual},
                        {"tolerance", f.tolerance},
                        {"pass", f.passed}});
    all = all && f.passed;
  }
  report["families"] = std::move(families);
  report["all_passed"] = all;
  report["status"] = "ok";
  return {kExitOk, std::move(report)};
}

CommandResult usage_failure(const std::string& command, const std::string& message) {
  json report = header(command, nullptr);
  return failure(std::move(report), kExitUsage, Error(ErrorKind::ParseError, message));
}

CommandResult run_command(const std::string& command, const std::optional<std::string>& input_path,
                          const CommandOptions& options) {
  std::optional<MatrixFile> input;
  try {
    if (input_path) input = load_matrix_file(*input_path);
  } catch (const Error& e) {
    return from_error(header(command, nullptr), e);
  }

  try {
    if (command == "verify") return cmd_verify(input ? &*input : nullptr, options);
    if (!input) return usage_failure(command, "--input is required for " + command);
    if (command == "split") return cmd_split(*input, options);
    if (command == "eig") return cmd_eig(*input, options);
    if (command == "measure") return cmd_measure(*input, options);
  } catch (const Error& e) {
    return from_error(header(command, input ? &*input : nullptr), e);
  }
  return usage_failure(command, "unknown command " + command);
}

}  // namespace bcx::cli
