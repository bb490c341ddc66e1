#include "mucb/cli/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

namespace mucb::cli {

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string("NA");
}

void write_regret_csv(std::ostream& os, std::span<const AggregateResult> results) {
  std::vector<const AggregateResult*> ordered;
  for (const auto& r : results) ordered.push_back(&r);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return policy_name(a->policy) < policy_name(b->policy);
  });

  os << "t,mean_regret,stderr,theorem1_bound,policy\n";
  for (const auto* r : ordered) {
    // Checkpoints are strictly increasing, so rows are already in t order.
    for (const auto& s : r->regret) {
      os << s.t << ',' << format_double(s.mean_regret) << ',' << format_double(s.stderr_regret) << ','
         << format_optional(r->policy == PolicyKind::mucb ? s.theorem1_bound : std::nullopt) << ','
         << policy_name(r->policy) << '\n';
    }
  }
}

void write_anomalies_csv(std::ostream& os, const AggregateResult& result) {
  os << "t,arm,anomaly_type,frequency,stderr,envelope\n";
  for (const auto& f : result.anomalies) {
    os << f.t << ',' << f.arm << ',' << f.anomaly_type << ',' << format_double(f.frequency) << ','
       << format_double(f.std_error) << ',' << format_double(f.envelope) << '\n';
  }
}

void write_ldi_csv(std::ostream& os, std::span<const LdiRow> rows) {
  os << "n,beta,exact_tail,chernoff_bound,mc_estimate,mc_stderr,minorant,rate_value\n";
  for (const auto& r : rows) {
    os << r.n << ',' << format_double(r.beta) << ',' << format_double(r.exact_tail) << ','
       << format_double(r.chernoff_bound) << ',' << format_double(r.mc_estimate) << ','
       << format_double(r.mc_stderr) << ',' << format_double(r.minorant) << ','
       << format_double(r.rate_value) << '\n';
  }
}

}  // namespace mucb::cli
