#pragma once

#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "cleanness.hpp"
#include "finite_ring.hpp"
#include "theorem_suite.hpp"

namespace jclean {

// Ring recipes as JSON. Kinds: modular-integers, quotient-polynomial,
// explicit-tables, truncated-power-series. input_error on malformed input.
RingSpec ring_spec_from_json(const std::string& text);
std::string ring_spec_to_json(const RingSpec& spec);

std::string analysis_to_json(const FiniteRing& r, const RingAnalysis& an);

// Accepts the [[a,b],[c,d]] literal or a {"a":..,"b":..,"c":..,"d":..} object;
// entries may be names or indices.
FMatrix matrix_from_text(const FiniteRing& r, const std::string& text);

std::string verdict_to_json(FmContext& ctx, const FMatrix& A, CleanKind kind,
                            const std::string& decided_by,
                            const std::optional<CleanCertificate>& cert,
                            std::optional<bool> agrees_with_oracle);

std::string report_to_json(const CheckReport& rep);
std::string reports_to_json(const std::vector<CheckReport>& reps);

std::string census_csv_header();
std::string census_row_csv(const CensusRow& row);

std::string catalog_to_json();

}  // namespace jclean
