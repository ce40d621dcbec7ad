#include "elympus/harness/significance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace elympus {

namespace {

void require_samples(std::size_t na, std::size_t nb) {
  if (na < kMinSamples || nb < kMinSamples) {
    throw InsufficientSamples("significance testing needs at least " + std::to_string(kMinSamples) +
                              " samples per side (got " + std::to_string(na) + " and " + std::to_string(nb) + ")");
  }
}

std::string label_of(const AggregateStats& s) { return s.optimizer.empty() ? s.instance : s.optimizer; }

}  // namespace

TestResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b, double alpha) {
  require_samples(a.size(), b.size());
  struct Item {
    double v;
    bool from_a;
  };
  std::vector<Item> all;
  for (double v : a) all.push_back({v, true});
  for (double v : b) all.push_back({v, false});
  std::sort(all.begin(), all.end(), [](const Item& x, const Item& y) { return x.v < y.v; });
  const double n1 = static_cast<double>(a.size()), n2 = static_cast<double>(b.size());
  const double N = n1 + n2;
  double rank_sum_a = 0.0, tie_term = 0.0;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j].v == all[i].v) ++j;
    const double avg = 0.5 * static_cast<double>(i + 1 + j);
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    for (std::size_t k = i; k < j; ++k) {
      if (all[k].from_a) rank_sum_a += avg;
    }
    i = j;
  }
  const double u = rank_sum_a - n1 * (n1 + 1) / 2.0;
  const double mean = n1 * n2 / 2.0;
  const double var = n1 * n2 / 12.0 * ((N + 1) - tie_term / (N * (N - 1)));
  TestResult r;
  if (var <= 0.0) return r;
  const double diff = u - mean;
  const double corrected = std::max(0.0, std::fabs(diff) - 0.5);
  r.statistic = (diff < 0 ? -corrected : corrected) / std::sqrt(var);
  r.p_value = std::erfc(std::fabs(r.statistic) / std::sqrt(2.0));
  r.significant = r.p_value < alpha;
  return r;
}

TestResult sign_test(const std::vector<double>& a, const std::vector<double>& b, double alpha) {
  if (a.size() != b.size()) throw SpecError("sign test needs paired samples of equal length");
  require_samples(a.size(), b.size());
  std::size_t pos = 0, neg = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) ++pos;
    if (a[i] < b[i]) ++neg;
  }
  const std::size_t n = pos + neg;
  TestResult r;
  r.statistic = static_cast<double>(pos);
  if (n == 0) return r;
  const std::size_t k = std::min(pos, neg);
  // log-space binomial tail
  double tail = 0.0;
  for (std::size_t i = 0; i <= k; ++i) {
    const double log_c = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(i) + 1) -
                         std::lgamma(static_cast<double>(n - i) + 1);
    tail += std::exp(log_c - static_cast<double>(n) * std::log(2.0));
  }
  r.p_value = std::min(1.0, 2.0 * tail);
  r.significant = r.p_value < alpha;
  return r;
}

ComparisonReport compare_stats(const std::vector<AggregateStats>& stats, double alpha) {
  if (stats.size() < 2) throw SpecError("comparison needs at least two result sets");
  ComparisonReport report;
  std::map<std::string, std::size_t> wins;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    for (std::size_t j = i + 1; j < stats.size(); ++j) {
      const auto& A = stats[i];
      const auto& B = stats[j];
      PairwiseComparison pc{label_of(A), label_of(B), std::nullopt, std::nullopt, "", ""};
      if (A.successes != B.successes) {
        pc.better = A.successes > B.successes ? pc.a : pc.b;
        pc.reason = "more successful runs";
      } else {
        pc.rank_sum = wilcoxon_rank_sum(A.ffe_until_best_samples, B.ffe_until_best_samples, alpha);
        std::vector<double> pa, pb;
        for (std::size_t x = 0; x < A.sample_seeds.size(); ++x) {
          for (std::size_t y = 0; y < B.sample_seeds.size(); ++y) {
            if (A.sample_seeds[x] == B.sample_seeds[y]) {
              pa.push_back(A.ffe_until_best_samples[x]);
              pb.push_back(B.ffe_until_best_samples[y]);
            }
          }
        }
        if (pa.size() >= kMinSamples) pc.sign = sign_test(pa, pb, alpha);
        if (pc.rank_sum->significant) {
          pc.better = median(A.ffe_until_best_samples) < median(B.ffe_until_best_samples) ? pc.a : pc.b;
          pc.reason = "significantly fewer FFE until best";
        } else {
          pc.reason = "no significant difference";
        }
      }
      if (!pc.better.empty()) ++wins[pc.better];
      report.pairs.push_back(std::move(pc));
    }
  }
  for (const auto& s : stats) {
    if (wins[label_of(s)] == stats.size() - 1) report.most_effective = label_of(s);
  }
  return report;
}

std::string ComparisonReport::to_text() const {
  std::ostringstream out;
  for (const auto& p : pairs) {
    out << p.a << " vs " << p.b << ": ";
    if (p.better.empty()) {
      out << p.reason;
    } else {
      out << p.better << " better (" << p.reason << ")";
    }
    if (p.rank_sum) out << "; rank-sum z=" << p.rank_sum->statistic << " p=" << p.rank_sum->p_value;
    if (p.sign) out << "; sign p=" << p.sign->p_value;
    out << '\n';
  }
  out << "most effective: " << (most_effective.empty() ? "none" : most_effective) << '\n';
  return out.str();
}

}  // namespace elympus
