#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "mucb/harness.hpp"
#include "mucb/ldi.hpp"

namespace mucb::cli {

// Shortest decimal that round-trips to the same double; "inf" for +infinity.
std::string format_double(double x);
std::string format_optional(const std::optional<double>& x);  // "NA" when empty

// t,mean_regret,stderr,theorem1_bound,policy; rows sorted by (policy, t).
void write_regret_csv(std::ostream& os, std::span<const AggregateResult> results);

// t,arm,anomaly_type,frequency,stderr,envelope
void write_anomalies_csv(std::ostream& os, const AggregateResult& result);

// n,beta,exact_tail,chernoff_bound,mc_estimate,mc_stderr,minorant,rate_value
void write_ldi_csv(std::ostream& os, std::span<const LdiRow> rows);

}  // namespace mucb::cli
