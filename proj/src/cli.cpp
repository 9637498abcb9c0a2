#include "trisum/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "trisum/closedform.hpp"
#include "trisum/error.hpp"
#include "trisum/harness.hpp"
#include "trisum/quadrature.hpp"
#include "trisum/series.hpp"
#include "trisum/specfun.hpp"

namespace trisum::cli {

namespace {

// A user mistake that names the offending flag.
struct UsageError {
  std::string message;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

SeriesOptions series_options_from_env() {
  SeriesOptions options;
  const char* raw = std::getenv("TRISUM_MAX_TERMS");
  if (raw == nullptr || *raw == '\0') return options;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0) {
    throw UsageError{"TRISUM_MAX_TERMS must be a positive integer (got '" + std::string(text) +
                     "')"};
  }
  options.max_terms = value;
  return options;
}

// Writes to --out when given, otherwise to out.
template <typename Writer>
void write_output(const std::string& path, std::ostream& out, Writer&& writer) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open output file: " + path);
  writer(file);
  file.flush();
  if (!file) throw IoError("failed writing output file: " + path);
}

struct EvalConfig {
  std::string family;
  std::optional<double> z;
  std::optional<double> w;
  unsigned m = 0;
  std::string method = "all";
  double tol = 1e-10;
  std::string format = "table";
  std::string out;
};

struct VerifyConfig {
  std::string suite;
  std::optional<double> tol;
  std::string format = "table";
  std::string out;
};

struct IntegralConfig {
  std::string kernel;
  std::string variant;
  double z = 0.0;
  unsigned m = 0;
  double tol = 1e-10;
  std::string format = "table";
};

struct ConstantsConfig {
  bool registry = false;
};

double resolve_z(const EvalConfig& c, SeriesFamily family) {
  if (c.z && c.w) throw UsageError{"--z and --w are mutually exclusive"};
  if (!c.z && !c.w) throw UsageError{"one of --z or --w is required"};
  if (c.w) {
    if (!is_theorem_family(family)) {
      throw UsageError{"--w is only accepted for the A1, A2, B1, B2 families"};
    }
    if (*c.w == 0.0 || !std::isfinite(*c.w) || std::abs(*c.w) > 1.0) {
      throw UsageError{"--w must satisfy 0 < |w| <= 1 (got " + fmt_short(*c.w) + ")"};
    }
    return 1.0 / *c.w;
  }
  const double z = *c.z;
  if (!std::isfinite(z)) throw UsageError{"--z must be finite"};
  if (is_theorem_family(family) && std::abs(z) < 1.0) {
    throw UsageError{"--z must satisfy |z| >= 1 for family " + c.family + " (got " +
                     fmt_short(z) + ")"};
  }
  if (!is_theorem_family(family) && std::abs(z) > 1.0) {
    throw UsageError{"--z must satisfy |z| <= 1 for family " + c.family + " (got " +
                     fmt_short(z) + ")"};
  }
  return z;
}

int run_eval(const EvalConfig& c, std::ostream& out) {
  const auto family = parse_family(c.family);
  if (!family) {
    throw UsageError{"--family must be one of A1, A2, B1, B2, C1, C2, C3, C4 (got '" + c.family +
                     "')"};
  }
  const double z = resolve_z(c, *family);
  if (!is_theorem_family(*family) && c.m != 0) {
    throw UsageError{"--m must be 0 for family " + c.family};
  }
  if (c.method == "closed" && !is_theorem_family(*family)) {
    throw UsageError{"--method closed is unavailable for family " + c.family +
                     " (no closed form)"};
  }
  const ReportFormat format = parse_format(c.format);
  const SeriesOptions options = series_options_from_env();

  const bool all = c.method == "all";
  std::vector<std::pair<std::string, double>> values;
  std::optional<SeriesResult> series;
  std::optional<QuadResult<double>> quadrature;
  try {
    if ((all && is_theorem_family(*family)) || c.method == "closed") {
      values.emplace_back("closed", closed_sum(*family, z, c.m).total);
    }
    if (all || c.method == "series") {
      series = sum_series(*family, z, c.m, series_tolerance_for(c.tol), options);
      values.emplace_back("series", series->value);
    }
    if (all || c.method == "quadrature") {
      const IntegrandSpec spec = family_integrand(*family, z, c.m);
      quadrature = integrate(spec, quadrature_tolerance_for(c.tol));
      values.emplace_back("quadrature", family_quadrature(*family, z, c.m,
                                                          quadrature_tolerance_for(c.tol)));
    }
  } catch (const RepeatedRoots& e) {
    throw UsageError{std::string("--z gives a repeated root: ") + e.what()};
  } catch (const DomainError& e) {
    throw UsageError{std::string("--z: ") + e.what()};
  }

  double deviation = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      deviation = std::max(deviation, std::abs(values[i].second - values[j].second));
    }
  }
  const double reference = values.front().second;
  const bool pass = deviation <= c.tol * std::max(1.0, std::abs(reference));

  write_output(c.out, out, [&](std::ostream& os) {
    switch (format) {
      case ReportFormat::Json: {
        nlohmann::ordered_json j;
        j["family"] = c.family;
        j["z"] = z;
        j["m"] = c.m;
        j["tol"] = c.tol;
        nlohmann::ordered_json v = nlohmann::ordered_json::object();
        for (const auto& [name, value] : values) v[name] = value;
        j["values"] = v;
        if (values.size() > 1) {
          j["max_deviation"] = deviation;
          j["pass"] = pass;
        }
        os << j.dump(2) << '\n';
        break;
      }
      case ReportFormat::Csv:
        os << "method,value\n";
        for (const auto& [name, value] : values) os << name << ',' << fmt17(value) << '\n';
        break;
      case ReportFormat::Table: {
        os << "family " << c.family << "  z = " << fmt17(z) << "  m = " << c.m << '\n';
        for (const auto& [name, value] : values) {
          char line[128];
          std::snprintf(line, sizeof line, "  %-11s %25.17g", name.c_str(), value);
          os << line;
          if (name == "series" && series) {
            os << "   (" << series->terms << " terms, tail <= " << fmt_short(series->tail_bound)
               << ")";
          } else if (name == "quadrature" && quadrature) {
            os << "   (level " << quadrature->level << ", " << quadrature->evaluations
               << " evaluations)";
          }
          os << '\n';
        }
        if (values.size() > 1) {
          os << "  max deviation " << fmt_short(deviation) << "  tol " << fmt_short(c.tol) << "  "
             << (pass ? "PASS" : "FAIL") << '\n';
        }
        break;
      }
    }
  });
  return pass ? kExitOk : kExitFailure;
}

int run_verify(const VerifyConfig& c, std::ostream& out) {
  Suite suite;
  try {
    suite = parse_suite(c.suite);
  } catch (const UnknownSuite&) {
    std::string names;
    for (auto s : kAllSuites) names += (names.empty() ? "" : ", ") + std::string(to_string(s));
    throw UsageError{"--suite must be one of " + names + " (got '" + c.suite + "')"};
  }
  const double tol = c.tol.value_or(default_tolerance(suite));
  if (!(tol >= 1e-13)) throw UsageError{"--tol must be >= 1e-13 (got " + fmt_short(tol) + ")"};
  const ReportFormat format = parse_format(c.format);
  SuiteOptions options;
  options.series = series_options_from_env();

  const auto records = run_suite(suite, tol, options);
  const ReportHeader header{std::string(to_string(suite)), tol, iso8601_utc_now()};
  if (c.out.empty()) {
    emit_report(records, format, header, out);
  } else {
    emit_report(records, format, header, std::filesystem::path(c.out));
  }
  const bool all_pass =
      std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
  return all_pass ? kExitOk : kExitFailure;
}

int run_integral(const IntegralConfig& c, std::ostream& out) {
  IntegrandSpec spec;
  if (c.kernel == "lnx") {
    spec.kernel = Kernel::LnX;
  } else if (c.kernel == "lnratio") {
    spec.kernel = Kernel::LnRatio;
  } else {
    throw UsageError{"--kernel must be lnx or lnratio (got '" + c.kernel + "')"};
  }
  static const std::map<std::string, Variant> variants = {
      {"thm1", Variant::Thm1},        {"thm2", Variant::Thm2},
      {"c1", Variant::Concluding1},   {"c2", Variant::Concluding2},
      {"c3", Variant::Concluding3},   {"c4", Variant::Concluding4}};
  const auto it = variants.find(c.variant);
  if (it == variants.end()) {
    throw UsageError{"--variant must be one of thm1, thm2, c1, c2, c3, c4 (got '" + c.variant +
                     "')"};
  }
  spec.variant = it->second;
  spec.z = c.z;
  spec.m = c.m;
  const ReportFormat format = parse_format(c.format);

  QuadResult<double> result;
  try {
    result = integrate(spec, c.tol);
  } catch (const DomainError& e) {
    throw UsageError{std::string("--z/--kernel/--tol: ") + e.what()};
  }
  switch (format) {
    case ReportFormat::Json: {
      nlohmann::ordered_json j;
      j["kernel"] = c.kernel;
      j["variant"] = c.variant;
      j["z"] = c.z;
      j["m"] = c.m;
      j["value"] = result.value;
      j["error_estimate"] = result.error_estimate;
      j["level"] = result.level;
      j["evaluations"] = result.evaluations;
      out << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::Csv:
      out << "value,error_estimate,level,evaluations\n"
          << fmt17(result.value) << ',' << fmt17(result.error_estimate) << ',' << result.level
          << ',' << result.evaluations << '\n';
      break;
    case ReportFormat::Table:
      out << fmt17(result.value) << '\n';
      break;
  }
  return kExitOk;
}

int run_constants(const ConstantsConfig& c, std::ostream& out) {
  constexpr double pi = std::numbers::pi;
  constexpr double ln2 = std::numbers::ln2;
  const double G = catalan();
  struct Row {
    const char* name;
    const char* reference;
    ComplexValue computed;
    ComplexValue expected;
  };
  const Row rows[] = {
      {"Li2(1)", "pi^2/6", dilog(1.0), pi * pi / 6.0},
      {"Li2(1/2)", "pi^2/12 - ln^2(2)/2", dilog(0.5), pi * pi / 12.0 - 0.5 * ln2 * ln2},
      {"Li2(i)", "-pi^2/48 + i G", dilog({0.0, 1.0}), {-pi * pi / 48.0, G}},
      {"Li2(-i)", "-pi^2/48 - i G", dilog({0.0, -1.0}), {-pi * pi / 48.0, -G}},
      {"Cl2(pi/2)", "G", clausen2(pi / 2.0), G},
      {"G", "sum (-1)^j/(2j+1)^2", G, 0.915965594177219015054603514932384110774},
  };
  char line[200];
  std::snprintf(line, sizeof line, "%-10s %-22s %25s %25s %10s\n", "quantity", "closed form",
                "real", "imag", "deviation");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-10s %-22s %25.17g %25.17g %10.2g\n", r.name, r.reference,
                  r.computed.real(), r.computed.imag(), std::abs(r.computed - r.expected));
    out << line;
  }
  if (c.registry) {
    out << '\n';
    for (const auto& pc : paper_constants()) {
      std::snprintf(line, sizeof line, "%-10s %-3s z = %-3g m = %u  scale %-3g %25.17g  ",
                    pc.id.c_str(), std::string(to_string(pc.family)).c_str(), pc.z, pc.m,
                    pc.scale, pc.value.evaluate());
      out << line << pc.description << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed forms and oracles for harmonic-number series with C(3k,k) denominators",
               "trisum"};
  app.require_subcommand(1);

  EvalConfig eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one series by closed form, series and/or quadrature");
  eval_cmd->add_option("--family", eval.family, "Series family: A1 A2 B1 B2 C1 C2 C3 C4")->required();
  eval_cmd->add_option("--z", eval.z, "Series argument (|z| >= 1 for A/B, |z| <= 1 for C)");
  eval_cmd->add_option("--w", eval.w, "Alternative argument w = 1/z with 0 < |w| <= 1 (A/B only)");
  eval_cmd->add_option("--m", eval.m, "Binomial order m >= 0 (must be 0 for C families)")
      ->capture_default_str();
  eval_cmd->add_option("--method", eval.method, "closed | series | quadrature | all")
      ->check(CLI::IsMember({"closed", "series", "quadrature", "all"}))
      ->capture_default_str();
  eval_cmd->add_option("--tol", eval.tol, "Agreement tolerance")->capture_default_str();
  eval_cmd->add_option("--format", eval.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  eval_cmd->add_option("--out", eval.out, "Write output to this file instead of stdout");

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and emit a report");
  verify_cmd
      ->add_option("--suite", verify.suite,
                   "paper-constants | theorem-grid | concluding | specfun-identities | beta-terms")
      ->required();
  verify_cmd->add_option("--tol", verify.tol, "Pass tolerance (default depends on the suite)");
  verify_cmd->add_option("--format", verify.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "Write the report to this file instead of stdout");

  IntegralConfig integral;
  auto* integral_cmd = app.add_subcommand("integral", "Tanh-sinh quadrature of one integrand");
  integral_cmd->add_option("--kernel", integral.kernel, "lnx | lnratio")->required();
  integral_cmd->add_option("--variant", integral.variant, "thm1 | thm2 | c1 | c2 | c3 | c4")
      ->required();
  integral_cmd->add_option("--z", integral.z, "Integrand parameter")->required();
  integral_cmd->add_option("--m", integral.m, "Integrand order m >= 0")->capture_default_str();
  integral_cmd->add_option("--tol", integral.tol, "Relative quadrature tolerance")
      ->capture_default_str();
  integral_cmd->add_option("--format", integral.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();

  ConstantsConfig constants;
  auto* constants_cmd =
      app.add_subcommand("constants", "Print special values of Li2, Cl2 and Catalan's constant");
  constants_cmd->add_flag("--registry", constants.registry,
                          "Also list the registry of known evaluations");

  std::vector<const char*> argv{"trisum"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval, out);
    if (verify_cmd->parsed()) return run_verify(verify, out);
    if (integral_cmd->parsed()) return run_integral(integral, out);
    return run_constants(constants, out);
  } catch (const UsageError& e) {
    err << "trisum: error: " << e.message << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "trisum: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "trisum: error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace trisum::cli
