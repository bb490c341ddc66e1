#include "mucb/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "mucb/analysis.hpp"
#include "mucb/env.hpp"
#include "mucb/errors.hpp"

namespace mucb {

std::string_view policy_name(PolicyKind kind) {
  return kind == PolicyKind::mucb ? "mucb" : "ucb1";
}

void ExperimentConfig::validate() const {
  if (means.size() < 2)
    throw InvalidArgument("means: need at least 2 arms, got " + std::to_string(means.size()));
  for (double m : means)
    if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("means: every mean must be positive and finite");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha: must be finite and >= 0");
  if (runs < 1) throw InvalidArgument("runs: must be >= 1");
  if (horizon < means.size()) throw InvalidArgument("horizon: must be >= number of arms");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || checkpoints[i] > horizon)
      throw InvalidArgument("checkpoints: " + std::to_string(checkpoints[i]) + " is outside [1, horizon]");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw InvalidArgument("checkpoints: must be strictly increasing");
  }
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon) {
  std::vector<std::uint64_t> out;
  for (int half_decades = 2;; ++half_decades) {
    const auto t = static_cast<std::uint64_t>(std::llround(std::pow(10.0, half_decades / 2.0)));
    if (t >= horizon) break;
    out.push_back(t);
  }
  out.push_back(horizon);
  return out;
}

std::vector<std::uint64_t> ExperimentConfig::resolved_checkpoints() const {
  return checkpoints.empty() ? default_checkpoints(horizon) : checkpoints;
}

namespace {

void fill_report(PolicyKind policy, const PolicyState& state, IndexReport& report) {
  if (policy == PolicyKind::mucb)
    compute_indexes_into(state, report);
  else
    ucb1_report_into(state, report);
}

CheckpointRecord make_checkpoint(const BanditProblem& problem, const std::vector<std::size_t>& suboptimal,
                                 double alpha, const PolicyState& state, const IndexReport& report) {
  CheckpointRecord rec;
  rec.t = state.round;
  rec.pulls = state.pulls;
  rec.pseudo_regret = pseudo_regret(problem, state.pulls);
  rec.anomaly1.assign(suboptimal.size(), 0);
  if (state.round < 2 || !(alpha > 0.0)) return rec;

  rec.anomalies_evaluated = true;
  const double mu_star = problem.best_mean();
  for (std::size_t i = 0; i < suboptimal.size(); ++i) {
    const std::size_t k = suboptimal[i];
    const std::uint64_t u_k = u_threshold(problem.ratios()[k], alpha, state.round);
    rec.anomaly1[i] = detect_anomaly1(DecisionState{state.pulls[k], report.arms[k].index}, u_k, mu_star);
  }
  const std::size_t best = problem.best_index();
  rec.anomaly2 = detect_anomaly2(DecisionState{state.pulls[best], report.arms[best].index}, mu_star);
  return rec;
}

}  // namespace

EpisodeTrace run_episode(const ExperimentConfig& config, std::uint64_t episode_id,
                         const EpisodeOptions& options) {
  config.validate();
  const BanditProblem problem = make_problem(config.means);
  const std::vector<std::size_t> suboptimal = problem.suboptimal_arms();
  const std::vector<std::uint64_t> checkpoints = config.resolved_checkpoints();
  ExponentialEnvironment env(problem, config.seed, episode_id);

  EpisodeTrace trace;
  trace.episode_id = episode_id;
  if (options.record_history) {
    trace.choices.reserve(config.horizon);
    trace.rewards.reserve(config.horizon);
  }
  trace.checkpoints.reserve(checkpoints.size());

  PolicyState state = PolicyState::initial(problem.num_arms(), config.alpha);
  IndexReport report;
  std::size_t next_cp = 0;
  for (std::uint64_t round = 0;; ++round) {
    fill_report(config.policy, state, report);
    if (next_cp < checkpoints.size() && checkpoints[next_cp] == round) {
      trace.checkpoints.push_back(make_checkpoint(problem, suboptimal, config.alpha, state, report));
      ++next_cp;
    }
    if (round == config.horizon) break;

    const std::size_t arm = select_arm(report);
    const double reward = env.pull(arm);
    if (options.record_history) {
      trace.choices.push_back(static_cast<std::uint32_t>(arm));
      trace.rewards.push_back(reward);
    }
    if (options.observer) options.observer(RoundView{round, state, report, arm, reward});
    apply_update(state, arm, reward);
  }
  return trace;
}

std::vector<std::uint32_t> play(std::size_t num_arms, double alpha, PolicyKind policy,
                                std::uint64_t rounds, const RewardSource& source,
                                const RoundObserver& observer) {
  PolicyState state = PolicyState::initial(num_arms, alpha);
  IndexReport report;
  std::vector<std::uint32_t> choices;
  choices.reserve(rounds);
  for (std::uint64_t round = 0; round < rounds; ++round) {
    fill_report(policy, state, report);
    const std::size_t arm = select_arm(report);
    const double reward = source(arm, state.pulls[arm]);
    choices.push_back(static_cast<std::uint32_t>(arm));
    if (observer) observer(RoundView{round, state, report, arm, reward});
    apply_update(state, arm, reward);
  }
  return choices;
}

std::vector<AnomalyFrequency> anomaly_frequencies(std::span<const EpisodeTrace> traces,
                                                  const BanditProblem& problem, double alpha) {
  std::vector<AnomalyFrequency> out;
  if (traces.empty()) return out;
  const std::vector<std::size_t> suboptimal = problem.suboptimal_arms();
  const std::size_t num_cp = traces.front().checkpoints.size();
  const double runs = static_cast<double>(traces.size());

  auto binomial = [runs](std::uint64_t hits, AnomalyFrequency& f) {
    f.frequency = static_cast<double>(hits) / runs;
    f.std_error = std::sqrt(f.frequency * (1.0 - f.frequency) / runs);
  };

  for (std::size_t c = 0; c < num_cp; ++c) {
    const CheckpointRecord& ref = traces.front().checkpoints[c];
    if (!ref.anomalies_evaluated) continue;
    const double envelope = anomaly_envelope(ref.t, alpha);

    for (std::size_t i = 0; i < suboptimal.size(); ++i) {
      std::uint64_t hits = 0;
      for (const auto& tr : traces) hits += tr.checkpoints.at(c).anomaly1.at(i);
      AnomalyFrequency f;
      f.t = ref.t;
      f.arm = suboptimal[i];
      f.anomaly_type = 1;
      f.u_value = u_threshold(problem.ratios()[suboptimal[i]], alpha, ref.t);
      f.envelope = envelope;
      binomial(hits, f);
      out.push_back(f);
    }

    std::uint64_t hits = 0;
    for (const auto& tr : traces) hits += tr.checkpoints.at(c).anomaly2 ? 1 : 0;
    AnomalyFrequency f;
    f.t = ref.t;
    f.arm = problem.best_index();
    f.anomaly_type = 2;
    f.envelope = envelope;
    binomial(hits, f);
    out.push_back(f);
  }
  return out;
}

AggregateResult aggregate(const ExperimentConfig& config, std::span<const EpisodeTrace> traces) {
  if (traces.empty()) throw InvalidArgument("aggregate: no traces");
  std::vector<const EpisodeTrace*> ordered;
  ordered.reserve(traces.size());
  for (const auto& tr : traces) ordered.push_back(&tr);
  std::sort(ordered.begin(), ordered.end(),
            [](const EpisodeTrace* a, const EpisodeTrace* b) { return a->episode_id < b->episode_id; });

  const BanditProblem problem = make_problem(config.means);

  AggregateResult result;
  result.policy = config.policy;
  result.runs = ordered.size();
  const double n = static_cast<double>(ordered.size());
  const std::size_t num_cp = ordered.front()->checkpoints.size();
  for (std::size_t c = 0; c < num_cp; ++c) {
    CheckpointSummary s;
    s.t = ordered.front()->checkpoints[c].t;
    double sum = 0.0;
    for (const auto* tr : ordered) sum += tr->checkpoints.at(c).pseudo_regret;
    s.mean_regret = sum / n;
    if (ordered.size() > 1) {
      double ss = 0.0;
      for (const auto* tr : ordered) {
        const double d = tr->checkpoints[c].pseudo_regret - s.mean_regret;
        ss += d * d;
      }
      s.stderr_regret = std::sqrt(ss / (n - 1.0) / n);
    }
    if (config.alpha > 4.0 && s.t >= 2) s.theorem1_bound = theorem1_bound(problem, config.alpha, s.t);
    result.regret.push_back(s);
  }

  // Frequencies are order-independent counts; no reordering needed.
  result.anomalies = anomaly_frequencies(traces, problem, config.alpha);
  return result;
}

std::vector<EpisodeTrace> run_episodes(const ExperimentConfig& config) {
  config.validate();
  std::vector<EpisodeTrace> traces(config.runs);
  unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.runs));

  EpisodeOptions options;
  options.record_history = false;
  if (workers <= 1) {
    for (std::uint64_t e = 0; e < config.runs; ++e) traces[e] = run_episode(config, e, options);
    return traces;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t e = next++; e < config.runs && !failed; e = next++) {
          try {
            traces[e] = run_episode(config, e, options);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return traces;
}

AggregateResult run_experiment(const ExperimentConfig& config) {
  const std::vector<EpisodeTrace> traces = run_episodes(config);
  return aggregate(config, traces);
}

}  // namespace mucb
