#pragma once

// Machine-readable output. JSON documents carry schema_version; every float is
// written with 17 significant digits so 64-bit values round-trip exactly.

#include <string>
#include <string_view>

#include "meanineq/numeric_means.hpp"
#include "meanineq/verifier.hpp"

namespace meanineq {

inline constexpr int kSchemaVersion = 1;

enum class Format { kJson, kCsv };

Format parse_format(std::string_view s);

/// "%.17g"; non-finite values become null in JSON and empty in CSV.
std::string format_double(double v);

/// Fields, in order: schema_version, mode, function, lhs, rhs, gap, tol, verdict, seed, dims, atoms.
std::string emit_report(const InequalityReport& report, Format format);
std::string emit_report(const CampaignSummary& summary, Format format);
std::string emit_report(const AxiomReport& axioms, const ConcavityVerdict& concavity, Format format);

/// Inverse of emit_report(InequalityReport, kJson). Throws UsageError on schema mismatch.
InequalityReport parse_report_json(std::string_view json);

}  // namespace meanineq
