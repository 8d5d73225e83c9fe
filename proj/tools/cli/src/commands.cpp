// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/cli/commands.hpp"

#include "cfpolar/cli/bench.hpp"
#include "cfpolar/cli/parse.hpp"
#include "cfpolar/cli/selftest.hpp"
#include "cfpolar/closed_form.hpp"
#include "cfpolar/error.hpp"
#include "cfpolar/high_dim.hpp"
#include "cfpolar/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cfpolar::cli
{

namespace
{
  using nlohmann::json;

  /// Relative distance under which a scanned e32 root is attributed to the spurious cubic.
  constexpr double kSpuriousMatch = 1e-8;

  std::string_view precision_name(Precision p)
  {
    switch (p)
    {
      case Precision::binary64: return "binary64";
      case Precision::extended80: return "extended80";
      case Precision::binary128: return "binary128";
    }
    return "binary64";
  }

  template <class Container>
  json values_json(const Container& values, int count)
  {
    json out = json::array();
    for (int k = 0; k < count; ++k) out.push_back(static_cast<double>(values[k]));
    return out;
  }

  template <RealScalar Real>
  json roots_json(const RootSet<Real>& roots)
  {
    return values_json(roots, roots.size());
  }

  std::string format_number(double v)
  {
    std::ostringstream out;
    out.precision(3);
    out << v;
    return out.str();
  }

  /// The tensor C every command works on, plus F when the input is a deformation gradient.
  struct LoadedInput
  {
    SymTensor c;
    Matrix f;
    InputKind kind = InputKind::C;
  };

  LoadedInput load(const JobSpec& job, std::istream& stdin_stream, Report& report)
  {
    const std::string text = job.inline_matrix ? *job.inline_matrix : read_input(job.input_path, stdin_stream);
    const Matrix a = parse_matrix(text, job.dim);
    LoadedInput in;
    in.kind = effective_kind(job);
    report.result["dim"] = a.dim();
    report.result["kind"] = in.kind == InputKind::C ? "C" : "F";
    if (in.kind == InputKind::F)
    {
      in.f = a;
      in.c = gram(a);
      return in;
    }
    const SymmetrizedInput s = symmetrize(a);
    report.result["symmetrization_delta"] = s.symmetrization_delta;
    if (s.warn)
      report.warnings.push_back("input is not symmetric (max |a_ij - a_ji| = " + format_number(s.symmetrization_delta)
          + "); its symmetric part was used");
    in.c = s.c;
    return in;
  }

  void note_branches(const StretchInvariants& i, Report& report)
  {
    report.route = std::string(route_name(i.route));
    if (i.degenerate) report.warnings.push_back("repeated stretches: the degenerate closed-form branch was taken");
    if (i.quartic_fallback)
      report.warnings.push_back("elimination pivot vanished: i_4 was recovered from the fallback quartic");
  }

  Route route_for_dim(int n)
  {
    static constexpr Route routes[] = {Route::closed2, Route::closed3, Route::closed4, Route::poly16_n5, Route::poly32_n6};
    return routes[std::clamp(n, 2, 6) - 2];
  }

  double relative(const Matrix& diff, double scale) { return diff.frobenius_norm() / scale; }

  void run_invariants(const JobSpec& job, std::istream& in, Report& report)
  {
    const LoadedInput input = load(job, in, report);
    const int n = input.c.dim();
    const RightStretch r = right_stretch(input.c);
    report.result["I"] = values_json(r.invariants.values, n);
    report.result["i"] = values_json(r.stretch_invariants.values, n);
    report.result["nu"] = r.nu;
    report.result["precision"] = precision_name(r.precision);
    report.result["degenerate"] = r.stretch_invariants.degenerate;
    report.result["quartic_fallback"] = r.stretch_invariants.quartic_fallback;
    note_branches(r.stretch_invariants, report);
    add_residual(report, "identity_system", identity_system_residual(r.invariants, r.stretch_invariants.view()),
        effective_tolerance(job, n));
  }

  void run_sqrt(const JobSpec& job, std::istream& in, Report& report)
  {
    const LoadedInput input = load(job, in, report);
    const int n = input.c.dim();
    const RightStretch r = right_stretch(input.c);
    report.result["U"] = matrix_json(r.u);
    report.result["precision"] = precision_name(r.precision);
    note_branches(r.stretch_invariants, report);
    add_residual(report, "u_squared_minus_c", relative(r.u * r.u - input.c.full(), input.c.frobenius_norm()),
        effective_tolerance(job, n));
  }

  void run_invsqrt(const JobSpec& job, std::istream& in, Report& report)
  {
    const LoadedInput input = load(job, in, report);
    const int n = input.c.dim();
    const RightStretch r = right_stretch(input.c);
    report.result["U_inv"] = matrix_json(r.uinv);
    report.result["precision"] = precision_name(r.precision);
    note_branches(r.stretch_invariants, report);
    const Matrix uinv2 = r.uinv * r.uinv;
    add_residual(report, "u_inv_squared_c_minus_identity",
        relative(uinv2 * input.c - Matrix::identity(n), std::sqrt(double(n))), effective_tolerance(job, n));
  }

  void run_polar(const JobSpec& job, std::istream& in, Report& report)
  {
    const LoadedInput input = load(job, in, report);
    const int n = input.f.dim();
    const PolarFactors p = polar_decompose(input.f);
    report.result["R"] = matrix_json(p.r);
    report.result["U"] = matrix_json(p.u);
    report.result["U_inv"] = matrix_json(p.uinv);
    report.result["det_R"] = determinant(p.r);
    report.result["precision"] = precision_name(p.precision);
    note_branches(p.stretch_invariants, report);
    if (determinant(input.f) < 0.0)
      report.warnings.push_back("det F < 0: R is an improper orthogonal tensor");
    const double tol = effective_tolerance(job, n);
    add_residual(report, "ru_minus_f", relative(p.r * p.u - input.f, input.f.frobenius_norm()), tol);
    add_residual(report, "rtr_minus_identity",
        relative(p.r.transpose() * p.r - Matrix::identity(n), std::sqrt(double(n))), tol);
    add_residual(report, "u_squared_minus_c", relative(p.u * p.u - input.c.full(), input.c.frobenius_norm()), tol);
  }

  void roots_dim2(const PrincipalInvariants& I, Report& report)
  {
    // i_1 satisfies x^4 - 2 I1 x^2 + I1^2 - 4 I2 = 0: x = +-sqrt(I1 +- 2 sqrt(I2))
    const double s = 2.0 * std::sqrt(I(2));
    const double hi = std::sqrt(I(1) + s), lo = std::sqrt(std::max(I(1) - s, 0.0));
    report.result["i1_quartic_roots"] = json::array({hi, lo, -lo, -hi});
  }

  void roots_dim3(const PrincipalInvariants& I, Report& report)
  {
    const auto quartic = n3_i1_quartic(I);
    const auto check = n3_quartic_cross_check(I);
    report.result["i1_quartic"] = {{"p", quartic.p}, {"q", quartic.q}, {"r", quartic.r}};
    report.result["i1_quartic_roots"] = roots_json(check.i1_roots);
    report.result["i2_quartic_roots"] = roots_json(check.i2_roots);
  }

  void roots_dim4(const PrincipalInvariants& I, Report& report)
  {
    const auto Il = I.cast<long double>();
    report.result["resolvent_roots"] = roots_json(n4_resolvent_roots(Il));
    report.result["i2_quartic_roots"] = roots_json(solve_reduced_quartic(n4_i2_quartic(Il)));
  }

  void roots_dim5(const SymTensor& c, Report& report)
  {
    const auto I = invariants_from_tensor(c.cast<quad>());
    const quad edge = num::sqrt(quad(5) * I(1)) * quad(1.001);
    json roots = json::array();
    for (quad x : n5_scan_roots(I, -edge, edge)) roots.push_back(static_cast<double>(x));
    report.result["i1_polynomial_roots"] = roots;
    report.result["scan_note"] = "sign changes of the degree-16 polynomial on +-sqrt(5 I1); even-multiplicity roots are not listed";
  }

  void roots_dim6(const SymTensor& c, Report& report)
  {
    const auto I = invariants_from_tensor(c.cast<quad>());
    const auto cubic = n6_spurious_cubic(I);
    json genuine = json::array(), spurious = json::array();
    for (quad w : n6_scan_roots(I, quad(1e-9) * I(1), quad(6.006) * I(1)))
    {
      bool matched = false;
      for (int k = 0; k < cubic.roots.real.size(); ++k)
        matched = matched || num::abs(w - cubic.roots.real[k]) <= quad(kSpuriousMatch) * num::abs(cubic.roots.real[k]);
      (matched ? spurious : genuine).push_back(static_cast<double>(w));
    }
    json cubic_json = {{"coefficients", values_json(cubic.coeffs, 4)}, {"real_roots", roots_json(cubic.roots.real)}};
    if (cubic.roots.has_complex_pair)
      cubic_json["complex_pair"] = {static_cast<double>(cubic.roots.pair_real), static_cast<double>(cubic.roots.pair_imag)};
    report.result["e32_roots"] = genuine;
    report.result["e32_spurious_roots"] = spurious;
    report.result["spurious_cubic"] = cubic_json;
    report.result["scan_note"] = "sign changes of e32 in w = i1^2 on (0, 6.006 I1]; even-multiplicity roots are not listed";
  }

  void run_roots(const JobSpec& job, std::istream& in, Report& report)
  {
    const LoadedInput input = load(job, in, report);
    const int n = input.c.dim();
    const PrincipalInvariants I = invariants_from_tensor(input.c);
    report.result["I"] = values_json(I.values, n);
    switch (n)
    {
      case 2: roots_dim2(I, report); break;
      case 3: roots_dim3(I, report); break;
      case 4: roots_dim4(I, report); break;
      case 5: roots_dim5(input.c, report); break;
      default: roots_dim6(input.c, report); break;
    }
    report.route = std::string(route_name(route_for_dim(n)));
  }

  void run_selftest_command(Report& report)
  {
    json cases = json::array();
    bool all = true;
    for (const SelftestCase& row : run_selftest())
    {
      cases.push_back({{"name", row.name}, {"expected", row.expected}, {"got", row.got}, {"error", row.error},
          {"tol", row.tol}, {"pass", row.pass}});
      all = all && row.pass;
    }
    report.result["cases"] = cases;
    report.result["pass"] = all;
    if (!all)
    {
      report.error = ReportError{"SelftestFailed", "at least one self-test case exceeded its tolerance"};
      report.exit_code = kExitNumerical;
    }
  }

  void run_bench(const JobSpec& job, Report& report)
  {
    BenchOptions options;
    options.dim = job.dim.value_or(3);
    options.batch = job.batch;
    options.seed = job.seed;
    options.cond = job.cond;
    const BenchResult b = bench_polar(options);
    report.result = {{"dim", b.dim}, {"batch", b.batch}, {"seed", job.seed}, {"cond", job.cond},
        {"closed_form_ns_per_op", b.closed_form_ns_per_op}, {"oracle_ns_per_op", b.oracle_ns_per_op},
        {"speedup", b.speedup}, {"oracle_max_residual", b.oracle_max_residual},
        {"max_disagreement", b.max_disagreement}};
    report.route = std::string(route_name(route_for_dim(b.dim)));
    const double tol = effective_tolerance(job, b.dim);
    add_residual(report, "closed_form_max_u_squared_minus_c", b.closed_form_max_residual, tol);
    add_residual(report, "max_disagreement_with_oracle", b.max_disagreement, tol);
    if (b.dim == 3 && b.speedup < 2.0)
      report.warnings.push_back("closed-form speedup over Jacobi is " + format_number(b.speedup) + "x, below 2x");
  }

  void dispatch(const JobSpec& job, std::istream& in, Report& report)
  {
    switch (job.command)
    {
      case Command::invariants: run_invariants(job, in, report); break;
      case Command::sqrt: run_sqrt(job, in, report); break;
      case Command::invsqrt: run_invsqrt(job, in, report); break;
      case Command::polar: run_polar(job, in, report); break;
      case Command::roots: run_roots(job, in, report); break;
      case Command::selftest: run_selftest_command(report); break;
      case Command::bench: run_bench(job, report); break;
    }
  }
}  // namespace

Report run(const JobSpec& job, std::istream& stdin_stream)
{
  Report report;
  report.command = std::string(command_name(job.command));
  try
  {
    validate(job);
    dispatch(job, stdin_stream, report);
    if (!report.error && !residuals_pass(report))
    {
      report.error = ReportError{"ToleranceExceeded", "a residual exceeded its tolerance"};
      report.exit_code = kExitNumerical;
    }
  }
  catch (const UsageError& e)
  {
    report.error = ReportError{"UsageError", e.what()};
    report.exit_code = kExitValidation;
  }
  catch (const Error& e)
  {
    report.error = ReportError{std::string(error_name(e.code())), e.what()};
    report.exit_code = is_validation_error(e.code()) ? kExitValidation : kExitNumerical;
  }
  catch (const std::exception& e)
  {
    report.error = ReportError{"InternalError", e.what()};
    report.exit_code = kExitNumerical;
  }
  return report;
}

}  // namespace cfpolar::cli
