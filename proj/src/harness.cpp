#include "trisum/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>

#include "json.hpp"

#include "trisum/closedform.hpp"
#include "trisum/error.hpp"
#include "trisum/quadrature.hpp"
#include "trisum/specfun.hpp"

namespace trisum {

namespace {

constexpr double kPi = std::numbers::pi;

// Fixed seeds keep the randomized identity grids reproducible.
constexpr std::uint64_t kLandenSeed = 0x1a2d3e;
constexpr std::uint64_t kDuplicationSeed = 0x2b3c4d;
constexpr std::uint64_t kClausenSeed = 0x3c4d5e;
constexpr int kRandomSamples = 50;
constexpr int kUnitCircleSamples = 64;

const std::vector<double> kGridZ = {2.0, 3.0, -4.0, -8.0, 5.0, -2.0};
constexpr unsigned kGridMaxM = 4;
const std::vector<double> kConcludingZ = {0.25, 0.5, 0.9};

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Runs body, stamps runtime, and turns library failures into a failing record.
template <typename Body>
VerificationRecord timed(VerificationRecord record, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  bool failed = false;
  try {
    body(record);
  } catch (const Error&) {
    failed = true;
  }
  const auto stop = std::chrono::steady_clock::now();
  record.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  finalize_record(record);
  if (failed) record.pass = false;
  return record;
}

VerificationRecord identity_record(std::string id, double z, double lhs, double rhs, double tol) {
  VerificationRecord r;
  r.id = std::move(id);
  r.family = "identity";
  r.z = z;
  r.tol = tol;
  return timed(std::move(r), [&](VerificationRecord& rec) {
    rec.closed = lhs;
    rec.series_oracle = rhs;
  });
}

std::vector<VerificationRecord> paper_constants_suite(double tol, const SuiteOptions& options) {
  std::vector<VerificationRecord> out;
  for (const auto& c : paper_constants()) {
    VerificationRecord r;
    r.id = c.id;
    r.family = "constant";
    r.z = c.z;
    r.m = static_cast<int>(c.m);
    r.tol = tol;
    out.push_back(timed(std::move(r), [&](VerificationRecord& rec) {
      rec.closed = c.value.evaluate();
      rec.series_oracle =
          c.scale * sum_series(c.family, c.z, c.m, series_tolerance_for(tol), options.series).value;
      rec.quad_oracle =
          c.scale * family_quadrature(c.family, c.z, c.m, quadrature_tolerance_for(tol));
    }));
  }
  return out;
}

std::vector<VerificationRecord> theorem_grid_suite(double tol, const SuiteOptions& options) {
  std::vector<VerificationRecord> out;
  for (auto family : kTheoremFamilies) {
    for (double z : kGridZ) {
      for (unsigned m = 0; m <= kGridMaxM; ++m) {
        VerificationRecord r;
        r.id = std::string(to_string(family)) + "/z=" + short_number(z) + "/m=" + std::to_string(m);
        r.family = std::string(to_string(family));
        r.z = z;
        r.m = static_cast<int>(m);
        r.tol = tol;
        out.push_back(timed(std::move(r), [&](VerificationRecord& rec) {
          rec.closed = closed_sum(family, z, m).total;
          rec.series_oracle =
              sum_series(family, z, m, series_tolerance_for(tol), options.series).value;
          rec.quad_oracle = family_quadrature(family, z, m, quadrature_tolerance_for(tol));
        }));
      }
    }
  }
  return out;
}

std::vector<VerificationRecord> concluding_suite(double tol, const SuiteOptions& options) {
  std::vector<VerificationRecord> out;
  for (auto family : {SeriesFamily::C1, SeriesFamily::C2, SeriesFamily::C3, SeriesFamily::C4}) {
    for (double z : kConcludingZ) {
      VerificationRecord r;
      r.id = std::string(to_string(family)) + "/z=" + short_number(z);
      r.family = std::string(to_string(family));
      r.z = z;
      r.tol = tol;
      out.push_back(timed(std::move(r), [&](VerificationRecord& rec) {
        rec.series_oracle =
            sum_series(family, z, 0, series_tolerance_for(tol), options.series).value;
        rec.quad_oracle = family_quadrature(family, z, 0, quadrature_tolerance_for(tol));
      }));
    }
  }
  return out;
}

std::vector<VerificationRecord> specfun_suite(double tol) {
  std::vector<VerificationRecord> out;
  const double G = catalan();

  // Special values.
  out.push_back(identity_record("li2(1)", 1.0, dilog(1.0).real(), kPi * kPi / 6.0, tol));
  out.push_back(identity_record("li2(1/2)", 0.5, dilog(0.5).real(),
                                kPi * kPi / 12.0 - 0.5 * std::numbers::ln2 * std::numbers::ln2,
                                tol));
  out.push_back(identity_record("re li2(i)", 0.0, dilog({0.0, 1.0}).real(), -kPi * kPi / 48.0, tol));
  out.push_back(identity_record("im li2(i)", 0.0, dilog({0.0, 1.0}).imag(), G, tol));
  out.push_back(identity_record("re li2(-i)", 0.0, dilog({0.0, -1.0}).real(), -kPi * kPi / 48.0, tol));
  out.push_back(identity_record("im li2(-i)", 0.0, dilog({0.0, -1.0}).imag(), -G, tol));
  out.push_back(identity_record("cl2(pi/2)", kPi / 2, clausen2(kPi / 2), G, tol));
  out.push_back(identity_record("cl2(-pi/2)", -kPi / 2, clausen2(-kPi / 2), -G, tol));
  out.push_back(identity_record("cl2(3pi/2)", 1.5 * kPi, clausen2(1.5 * kPi), -G, tol));
  for (int n = 1; n <= 3; ++n) {
    out.push_back(identity_record("cl2(" + std::to_string(n) + "pi)", n * kPi,
                                  clausen2(n * kPi), 0.0, tol));
  }

  // Unit-circle decomposition of Li_2(e^{i theta}) on [-2 pi, 2 pi].
  for (int i = 0; i < kUnitCircleSamples; ++i) {
    const double theta = -2.0 * kPi + 4.0 * kPi * i / (kUnitCircleSamples - 1);
    const ComplexValue v = dilog(std::polar(1.0, theta));
    const std::string tag = "[" + std::to_string(i) + "]";
    out.push_back(identity_record(
        "unit-circle-re" + tag, theta, v.real(),
        kPi * kPi / 6.0 + (theta * theta - 2.0 * kPi * std::abs(theta)) / 4.0, tol));
    out.push_back(
        identity_record("unit-circle-im" + tag, theta, v.imag(), clausen2(theta), tol));
  }

  // Landen: Li2(x) + Li2(x/(x-1)) = -ln^2(1-x)/2 for real x < 1.
  {
    std::mt19937_64 rng(kLandenSeed);
    std::uniform_real_distribution<double> dist(-20.0, 1.0);
    for (int i = 0; i < kRandomSamples; ++i) {
      const double x = dist(rng);
      const double l = std::log1p(-x);
      out.push_back(identity_record("landen[" + std::to_string(i) + "]", x,
                                    dilog(x).real() + dilog(x / (x - 1.0)).real(), -0.5 * l * l,
                                    tol));
    }
  }

  // Duplication: Li2(x) + Li2(-x) = Li2(x^2)/2 for complex |x| < 1.
  {
    std::mt19937_64 rng(kDuplicationSeed);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < kRandomSamples; ++i) {
      const ComplexValue x = std::polar(radius(rng), angle(rng));
      const ComplexValue lhs = dilog(x) + dilog(-x);
      const ComplexValue rhs = 0.5 * dilog(x * x);
      const std::string tag = "[" + std::to_string(i) + "]";
      out.push_back(identity_record("duplication-re" + tag, std::abs(x), lhs.real(), rhs.real(), tol));
      out.push_back(identity_record("duplication-im" + tag, std::abs(x), lhs.imag(), rhs.imag(), tol));
    }
  }

  // Clausen reflections.
  {
    std::mt19937_64 rng(kClausenSeed);
    std::uniform_real_distribution<double> dist(-2.0 * kPi, 2.0 * kPi);
    for (int i = 0; i < kRandomSamples; ++i) {
      const double t = dist(rng);
      const std::string tag = "[" + std::to_string(i) + "]";
      out.push_back(identity_record("clausen-shift" + tag, t, clausen2(kPi + t),
                                    -clausen2(kPi - t), tol));
      out.push_back(identity_record("clausen-reflect" + tag, t, clausen2(t),
                                    -clausen2(2.0 * kPi - t), tol));
      out.push_back(identity_record("clausen-duplicate" + tag, t, 0.5 * clausen2(2.0 * t),
                                    clausen2(t) - clausen2(kPi - t), tol));
    }
  }

  // H_{2n} = H_n/2 + O_n and H_{2n-1} = H_{n-1}/2 + O_n: compensated doubles
  // on the left, the right side evaluated in exact rationals.
  {
    constexpr std::size_t kMaxN = 200;
    const HarmonicCache cache(2 * kMaxN);
    for (std::size_t n = 1; n <= kMaxN; ++n) {
      const Rational even = cache.exact(n) / 2 + cache.odd_exact(n);
      const Rational odd = cache.exact(n - 1) / 2 + cache.odd_exact(n);
      const std::string tag = "[" + std::to_string(n) + "]";
      out.push_back(identity_record("harmonic-even" + tag, static_cast<double>(n),
                                    harmonic(2 * n), even.convert_to<double>(), tol));
      out.push_back(identity_record("harmonic-odd" + tag, static_cast<double>(n),
                                    harmonic(2 * n - 1), odd.convert_to<double>(), tol));
    }
  }
  return out;
}

std::vector<VerificationRecord> beta_terms_suite(double tol) {
  std::vector<VerificationRecord> out;
  for (unsigned k = 0; k <= 30; ++k) {
    VerificationRecord r;
    r.id = "beta[" + std::to_string(k) + "]";
    r.family = "identity";
    r.m = static_cast<int>(k);
    r.tol = tol;
    out.push_back(timed(std::move(r), [&](VerificationRecord& rec) {
      const TermValue t = base_term_exact(TermKind::A, k);
      rec.closed = -t.exact->convert_to<double>();
      rec.series_oracle = -t.value;
      rec.quad_oracle = beta_term_integral(k);
    }));
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_number(const std::optional<double>& v, const char* missing) {
  return v ? format_number(*v) : missing;
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::PaperConstants: return "paper-constants";
    case Suite::TheoremGrid: return "theorem-grid";
    case Suite::Concluding: return "concluding";
    case Suite::SpecfunIdentities: return "specfun-identities";
    case Suite::BetaTerms: return "beta-terms";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (auto s : kAllSuites) {
    if (to_string(s) == name) return s;
  }
  throw UnknownSuite("unknown suite: " + std::string(name));
}

double default_tolerance(Suite suite) {
  switch (suite) {
    case Suite::PaperConstants: return 1e-10;
    case Suite::TheoremGrid: return 1e-9;
    case Suite::Concluding: return 1e-9;
    case Suite::SpecfunIdentities: return 1e-13;
    case Suite::BetaTerms: return 1e-11;
  }
  return 1e-10;
}

double series_tolerance_for(double tol) { return std::clamp(tol * 1e-3, 1e-15, 1e-6); }

double quadrature_tolerance_for(double tol) { return std::clamp(tol * 1e-2, 1e-14, 1e-6); }

void finalize_record(VerificationRecord& record) {
  std::vector<double> values;
  for (const auto& v : {record.closed, record.series_oracle, record.quad_oracle}) {
    if (v) values.push_back(*v);
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      dev = std::max(dev, std::abs(values[i] - values[j]));
    }
  }
  const double reference =
      record.closed ? *record.closed : (record.series_oracle ? *record.series_oracle : 0.0);
  record.abs_diff = dev;
  record.rel_diff = reference != 0.0 ? dev / std::abs(reference) : dev;
  const bool finite = std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
  record.pass = values.size() >= 2 && finite &&
                dev <= record.tol * std::max(1.0, std::abs(reference));
}

std::vector<VerificationRecord> run_suite(Suite suite, double tol, const SuiteOptions& options) {
  if (!(tol >= 1e-13)) {
    throw DomainError("run_suite: tol must be >= 1e-13");
  }
  switch (suite) {
    case Suite::PaperConstants: return paper_constants_suite(tol, options);
    case Suite::TheoremGrid: return theorem_grid_suite(tol, options);
    case Suite::Concluding: return concluding_suite(tol, options);
    case Suite::SpecfunIdentities: return specfun_suite(tol);
    case Suite::BetaTerms: return beta_terms_suite(tol);
  }
  throw UnknownSuite("unknown suite");
}

std::vector<VerificationRecord> run_suite(std::string_view name, double tol,
                                          const SuiteOptions& options) {
  return run_suite(parse_suite(name), tol, options);
}

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "table") return ReportFormat::Table;
  throw DomainError("unknown report format: " + std::string(name));
}

std::string iso8601_utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format,
                 const ReportHeader& header, std::ostream& out) {
  switch (format) {
    case ReportFormat::Json: {
      const auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };
      out << "{\"suite\":" << quote(header.suite) << ",\"tol\":" << format_number(header.tol)
          << ",\"generated_at\":"
          << quote(header.generated_at.empty() ? iso8601_utc_now() : header.generated_at)
          << ",\"records\":[";
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << (i ? "," : "") << "{\"id\":" << quote(r.id) << ",\"family\":" << quote(r.family)
            << ",\"z\":" << format_number(r.z) << ",\"m\":" << r.m
            << ",\"closed\":" << optional_number(r.closed, "null")
            << ",\"series_oracle\":" << optional_number(r.series_oracle, "null")
            << ",\"quad_oracle\":" << optional_number(r.quad_oracle, "null")
            << ",\"abs_diff\":" << format_number(r.abs_diff)
            << ",\"rel_diff\":" << format_number(r.rel_diff)
            << ",\"tol\":" << format_number(r.tol) << ",\"pass\":" << (r.pass ? "true" : "false")
            << ",\"runtime_ms\":" << format_number(r.runtime_ms) << "}";
      }
      out << "]}\n";
      break;
    }
    case ReportFormat::Csv: {
      out << "id,family,z,m,closed,series_oracle,quad_oracle,abs_diff,rel_diff,tol,pass,runtime_ms\n";
      for (const auto& r : records) {
        out << csv_escape(r.id) << ',' << csv_escape(r.family) << ',' << format_number(r.z) << ','
            << r.m << ',' << optional_number(r.closed, "") << ','
            << optional_number(r.series_oracle, "") << ',' << optional_number(r.quad_oracle, "")
            << ',' << format_number(r.abs_diff) << ',' << format_number(r.rel_diff) << ','
            << format_number(r.tol) << ',' << (r.pass ? "true" : "false") << ','
            << format_number(r.runtime_ms) << '\n';
      }
      break;
    }
    case ReportFormat::Table: {
      char line[256];
      std::snprintf(line, sizeof line, "%-26s %-9s %8s %2s %24s %24s %24s %10s %s\n", "id", "family",
                    "z", "m", "closed", "series", "quadrature", "abs_diff", "status");
      out << line;
      const auto cell = [](const std::optional<double>& v) {
        if (!v) return std::string("-");
        char b[40];
        std::snprintf(b, sizeof b, "%.17g", *v);
        return std::string(b);
      };
      std::size_t failures = 0;
      for (const auto& r : records) {
        std::snprintf(line, sizeof line, "%-26s %-9s %8g %2d %24s %24s %24s %10.3g %s\n",
                      r.id.c_str(), r.family.c_str(), r.z, r.m, cell(r.closed).c_str(),
                      cell(r.series_oracle).c_str(), cell(r.quad_oracle).c_str(), r.abs_diff,
                      r.pass ? "PASS" : "FAIL");
        out << line;
        if (!r.pass) ++failures;
      }
      out << records.size() << " records, " << failures << " failed (suite " << header.suite
          << ", tol " << short_number(header.tol) << ")\n";
      break;
    }
  }
}

void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format,
                 const ReportHeader& header, const std::filesystem::path& path) {
  std::ofstream file(path);
  if (!file) {
    throw IoError("cannot open report file: " + path.string());
  }
  emit_report(records, format, header, file);
  file.flush();
  if (!file) {
    throw IoError("failed writing report file: " + path.string());
  }
}

}  // namespace trisum
