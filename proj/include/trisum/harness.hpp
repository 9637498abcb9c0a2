#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trisum/series.hpp"

namespace trisum {

/// One verification case. Values that a suite does not produce (e.g. the
/// closed form of an alternating family) are absent and serialize as null.
struct VerificationRecord {
  std::string id;
  std::string family;  ///< series family name, "constant" or "identity"
  double z = 0.0;
  int m = 0;
  std::optional<double> closed;
  std::optional<double> series_oracle;
  std::optional<double> quad_oracle;
  double abs_diff = 0.0;  ///< max pairwise deviation among present values
  double rel_diff = 0.0;  ///< abs_diff / |reference|, reference = closed or series
  double tol = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

enum class Suite { PaperConstants, TheoremGrid, Concluding, SpecfunIdentities, BetaTerms };

inline constexpr Suite kAllSuites[] = {Suite::PaperConstants, Suite::TheoremGrid,
                                       Suite::Concluding, Suite::SpecfunIdentities,
                                       Suite::BetaTerms};

std::string_view to_string(Suite suite);
/// Throws UnknownSuite.
Suite parse_suite(std::string_view name);

/// 1e-10 for paper-constants, 1e-9 for theorem-grid and concluding,
/// 1e-13 for specfun-identities, 1e-11 for beta-terms.
double default_tolerance(Suite suite);

/// Oracle tolerances used when verifying at an overall tolerance tol.
double series_tolerance_for(double tol);
double quadrature_tolerance_for(double tol);

struct SuiteOptions {
  SeriesOptions series;
};

/// Fills abs_diff, rel_diff and pass from the present values.
void finalize_record(VerificationRecord& record);

/// Records come back in a fixed order; rerunning a suite reproduces them
/// except for runtime_ms. Throws UnknownSuite, DomainError for tol < 1e-13.
std::vector<VerificationRecord> run_suite(Suite suite, double tol, const SuiteOptions& options = {});
std::vector<VerificationRecord> run_suite(std::string_view name, double tol,
                                          const SuiteOptions& options = {});

enum class ReportFormat { Json, Csv, Table };

/// Throws DomainError for an unknown format name.
ReportFormat parse_format(std::string_view name);

struct ReportHeader {
  std::string suite;
  double tol = 0.0;
  std::string generated_at;  ///< ISO-8601 UTC; filled with the current time when empty
};

std::string iso8601_utc_now();

void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format,
                 const ReportHeader& header, std::ostream& out);

/// Throws IoError when the file cannot be written.
void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format,
                 const ReportHeader& header, const std::filesystem::path& path);

}  // namespace trisum
