#include "csbm/model.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "csbm/kv.hpp"
#include "csbm/rng.hpp"

namespace csbm {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void check_rates(double alpha, double beta) {
  if (alpha < 0 || beta < 0) {
    throw std::invalid_argument("rates: alpha and beta must be nonnegative");
  }
}

}  // namespace

ModelParams::ModelParams(int n_, double alpha_, double beta_, double s_)
    : n(n_), alpha(alpha_), beta(beta_), s(s_) {
  if (n < 2) throw std::invalid_argument("ModelParams: n must be >= 2");
  check_rates(alpha, beta);
  if (s < 0 || s > 1) throw std::invalid_argument("ModelParams: s must be in [0,1]");
  // Reject rather than clamp: a silently clamped rate distorts thresholds.
  if (p() > 1 || q() > 1) {
    throw std::invalid_argument("ModelParams: edge probability exceeds 1");
  }
}

double ModelParams::p() const { return alpha * std::log(n) / n; }
double ModelParams::q() const { return beta * std::log(n) / n; }

double chernoff_hellinger(double alpha, double beta) {
  check_rates(alpha, beta);
  return (alpha + beta) / 2 - std::sqrt(alpha * beta);
}

double connectivity_threshold(double alpha, double beta) {
  check_rates(alpha, beta);
  return (alpha + beta) / 2;
}

const char* to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::Green: return "green";
    case RegionLabel::Cyan: return "cyan";
    case RegionLabel::DarkBlue: return "dark_blue";
    case RegionLabel::Pink: return "pink";
    case RegionLabel::Red: return "red";
    case RegionLabel::Boundary: return "boundary";
  }
  return "?";
}

RegionLabel classify_region(double alpha, double beta, double s, double tol) {
  const double dch = chernoff_hellinger(alpha, beta);
  const double tc = connectivity_threshold(alpha, beta);
  const double single = s * dch;                      // recovery from G1 alone
  const double match = s * s * tc;                    // exact graph matching
  const double genie = (1 - (1 - s) * (1 - s)) * dch; // recovery given pi_star
  const double combined = match + s * (1 - s) * dch;  // the joint threshold

  for (double d : {single, match, genie, combined}) {
    if (std::abs(d - 1) <= tol) return RegionLabel::Boundary;
  }
  if (single > 1) return RegionLabel::Green;
  if (match > 1 && genie > 1) return RegionLabel::Cyan;
  if (combined > 1 && genie > 1) return RegionLabel::DarkBlue;
  if (genie > 1) return RegionLabel::Pink;
  return RegionLabel::Red;
}

std::size_t PairPartition::index(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n_ || i == j) throw std::out_of_range("PairPartition: bad pair");
  const std::size_t ii = static_cast<std::size_t>(i);
  return ii * (2 * static_cast<std::size_t>(n_) - ii - 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

Labeling CorrelatedPair::sigma_star2() const {
  Labeling out(sigma_star.size(), 0);
  for (std::size_t i = 0; i < pi_star.size(); ++i) {
    out[pi_star[i]] = sigma_star[i];
  }
  return out;
}

namespace {

Labeling sample_sigma(int n, std::uint64_t seed) {
  Labeling sigma(n);
  for (int i = 0; i < n; ++i) {
    sigma[i] = (rng::draw(seed, rng::kSigma, i) & 1) ? 1 : -1;
  }
  return sigma;
}

std::vector<int> sample_permutation(int n, std::uint64_t seed) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  rng::Stream stream(seed, rng::kPermutation);
  for (int i = n - 1; i >= 1; --i) {
    const int j = static_cast<int>(stream.next_below(i + 1));
    std::swap(pi[i], pi[j]);
  }
  return pi;
}

}  // namespace

CorrelatedPair generate_subsampling(const ModelParams& params, std::uint64_t seed) {
  const int n = params.n;
  CorrelatedPair pair;
  pair.sigma_star = sample_sigma(n, seed);
  pair.pi_star = sample_permutation(n, seed);
  pair.g1 = Graph(n);
  pair.g2 = Graph(n);
  const double p = params.p(), q = params.q(), s = params.s;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double rate = pair.sigma_star[i] == pair.sigma_star[j] ? p : q;
      if (rng::uniform(seed, rng::kParentEdge, i, j) >= rate) continue;
      if (rng::uniform(seed, rng::kSubsample1, i, j) < s) {
        pair.g1.push_edge_unchecked(i, j);
      }
      if (rng::uniform(seed, rng::kSubsample2, i, j) < s) {
        pair.g2.push_edge_unchecked(pair.pi_star[i], pair.pi_star[j]);
      }
    }
  }
  pair.g1.finalize();
  pair.g2.finalize();
  return pair;
}

CorrelatedPair generate_partition(const ModelParams& params, std::uint64_t seed) {
  const int n = params.n;
  CorrelatedPair pair;
  pair.sigma_star = sample_sigma(n, seed);
  pair.pi_star = sample_permutation(n, seed);
  pair.g1 = Graph(n);
  pair.g2 = Graph(n);
  pair.partition.emplace(n);
  const double p = params.p(), q = params.q(), s = params.s;
  const double c00 = (1 - s) * (1 - s);
  const double c01 = c00 + s * (1 - s);
  const double c10 = c01 + s * (1 - s);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double u = rng::uniform(seed, rng::kPairClass, i, j);
      const PairClass cls = u < c00   ? PairClass::E00
                            : u < c01 ? PairClass::E01
                            : u < c10 ? PairClass::E10
                                      : PairClass::E11;
      pair.partition->set(i, j, cls);
      const double rate = pair.sigma_star[i] == pair.sigma_star[j] ? p : q;
      if (rng::uniform(seed, rng::kParentEdge, i, j) >= rate) continue;
      if (cls == PairClass::E10 || cls == PairClass::E11) {
        pair.g1.push_edge_unchecked(i, j);
      }
      if (cls == PairClass::E01 || cls == PairClass::E11) {
        pair.g2.push_edge_unchecked(pair.pi_star[i], pair.pi_star[j]);
      }
    }
  }
  pair.g1.finalize();
  pair.g2.finalize();
  return pair;
}

double overlap(const Labeling& sig_hat, const Labeling& sig_star) {
  if (sig_hat.size() != sig_star.size() || sig_hat.empty()) {
    throw std::invalid_argument("overlap: labelings must be total and same size");
  }
  long long sum = 0;
  for (std::size_t i = 0; i < sig_hat.size(); ++i) {
    if (std::abs(sig_hat[i]) != 1 || std::abs(sig_star[i]) != 1) {
      throw std::invalid_argument("overlap: partial labeling");
    }
    sum += static_cast<long long>(sig_hat[i]) * sig_star[i];
  }
  return std::abs(static_cast<double>(sum)) / static_cast<double>(sig_hat.size());
}

EventFReport check_event_f(const CorrelatedPair& pair, const ModelParams& params) {
  if (!pair.partition) {
    throw std::invalid_argument("check_event_f: instance has no pair partition");
  }
  const int n = params.n;
  const double slack = std::pow(n, 0.75);
  long long v_plus = 0;
  for (int x : pair.sigma_star) v_plus += (x == 1);
  const long long v_minus = n - v_plus;

  EventFReport report;
  auto fail = [&report](std::string msg) {
    report.pass = false;
    report.violation = std::move(msg);
    return report;
  };

  for (auto [name, v] : {std::pair{"|V+|", v_plus}, std::pair{"|V-|", v_minus}}) {
    if (v < n / 2.0 - slack || v > n / 2.0 + slack) {
      return fail(std::string("balance: ") + name + "=" + std::to_string(v));
    }
  }
  const double s = params.s;
  if (s == 0 || s == 1) return report;  // degenerate partition, balance only

  const std::array<double, 4> s_ab = {
      (1 - s) * (1 - s), s * (1 - s), s * (1 - s), s * s};

  // counts[i][cls][0] = same-community potential neighbors, [1] = cross.
  std::vector<std::array<std::array<int, 2>, 4>> counts(
      n, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int cls = static_cast<int>(pair.partition->at(i, j));
      const int same = pair.sigma_star[i] == pair.sigma_star[j] ? 0 : 1;
      ++counts[i][cls][same];
      ++counts[j][cls][same];
    }
  }
  for (int i = 0; i < n; ++i) {
    const double v_same = pair.sigma_star[i] == 1 ? v_plus : v_minus;
    const double v_opp = pair.sigma_star[i] == 1 ? v_minus : v_plus;
    for (int cls = 0; cls < 4; ++cls) {
      const double lo_s = s_ab[cls] * (v_same - slack);
      const double hi_s = s_ab[cls] * (v_same + slack);
      const double lo_o = s_ab[cls] * (v_opp - slack);
      const double hi_o = s_ab[cls] * (v_opp + slack);
      if (counts[i][cls][0] < lo_s || counts[i][cls][0] > hi_s ||
          counts[i][cls][1] < lo_o || counts[i][cls][1] > hi_o) {
        std::ostringstream msg;
        msg << "vertex " << i << " class E" << (cls >> 1) << (cls & 1)
            << " counts (" << counts[i][cls][0] << "," << counts[i][cls][1]
            << ") outside [" << lo_s << "," << hi_s << "] x [" << lo_o << ","
            << hi_o << "]";
        return fail(msg.str());
      }
    }
  }
  return report;
}

void save_instance(const std::string& dir, const CorrelatedPair& pair,
                   const ModelParams& params, std::uint64_t seed,
                   const std::string& generator) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  write_edge_list_file(dir + "/g1.edges", pair.g1);
  write_edge_list_file(dir + "/g2.edges", pair.g2);
  {
    std::ofstream out(dir + "/pi_star.txt");
    for (int x : pair.pi_star) out << x << "\n";
  }
  {
    std::ofstream out(dir + "/sigma_star.txt");
    for (int x : pair.sigma_star) out << (x > 0 ? "+1" : "-1") << "\n";
  }
  KvRecord meta;
  meta["n"] = std::to_string(params.n);
  meta["alpha"] = fmt_double(params.alpha);
  meta["beta"] = fmt_double(params.beta);
  meta["s"] = fmt_double(params.s);
  meta["seed"] = std::to_string(seed);
  meta["generator"] = generator;
  write_kv_file(dir + "/meta", meta);
}

LoadedInstance load_instance(const std::string& dir) {
  const KvRecord meta = read_kv_file(dir + "/meta");
  ModelParams params(std::stoi(kv_get(meta, "n")), std::stod(kv_get(meta, "alpha")),
                     std::stod(kv_get(meta, "beta")), std::stod(kv_get(meta, "s")));
  CorrelatedPair pair;
  pair.g1 = read_edge_list_file(dir + "/g1.edges");
  pair.g2 = read_edge_list_file(dir + "/g2.edges");
  if (pair.g1.size() != params.n || pair.g2.size() != params.n) {
    throw std::runtime_error("load_instance: graph size disagrees with meta");
  }
  {
    std::ifstream in(dir + "/pi_star.txt");
    if (!in) throw std::runtime_error("cannot open " + dir + "/pi_star.txt");
    pair.pi_star.resize(params.n);
    std::vector<char> seen(params.n, 0);
    for (int i = 0; i < params.n; ++i) {
      if (!(in >> pair.pi_star[i]) || pair.pi_star[i] < 0 ||
          pair.pi_star[i] >= params.n || seen[pair.pi_star[i]]++) {
        throw std::runtime_error("load_instance: pi_star is not a permutation");
      }
    }
  }
  {
    std::ifstream in(dir + "/sigma_star.txt");
    if (!in) throw std::runtime_error("cannot open " + dir + "/sigma_star.txt");
    pair.sigma_star.resize(params.n);
    for (int i = 0; i < params.n; ++i) {
      int x;
      if (!(in >> x) || (x != 1 && x != -1)) {
        throw std::runtime_error("load_instance: bad sigma_star entry");
      }
      pair.sigma_star[i] = x;
    }
  }
  return {std::move(pair), params, std::stoull(kv_get(meta, "seed")),
          kv_get(meta, "generator")};
}

}  // namespace csbm
