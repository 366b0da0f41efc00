#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csbm/graph.hpp"

namespace csbm {

// CSBM(n, alpha*log(n)/n, beta*log(n)/n, s) parameterization.
struct ModelParams {
  int n;
  double alpha;
  double beta;
  double s;

  ModelParams(int n, double alpha, double beta, double s);
  double p() const;  // alpha * log(n) / n
  double q() const;  // beta * log(n) / n
};

// Community labeling: +1/-1 per vertex, 0 = undefined.
using Labeling = std::vector<int>;

double chernoff_hellinger(double alpha, double beta);     // (a+b)/2 - sqrt(ab)
double connectivity_threshold(double alpha, double beta); // (a+b)/2

enum class RegionLabel { Green, Cyan, DarkBlue, Pink, Red, Boundary };
const char* to_string(RegionLabel r);

// Ordered region tests on the discriminants s*D+, s^2*Tc, (1-(1-s)^2)*D+,
// and s^2*Tc + s(1-s)*D+ against 1; any discriminant within tol of 1
// yields Boundary.
RegionLabel classify_region(double alpha, double beta, double s,
                            double tol = 1e-9);

enum class PairClass : std::uint8_t { E00 = 0, E01 = 1, E10 = 2, E11 = 3 };

// Four-way class per unordered vertex pair {i,j}, i < j.
class PairPartition {
 public:
  explicit PairPartition(int n)
      : n_(n), cls_(static_cast<std::size_t>(n) * (n - 1) / 2, 0) {}

  PairClass at(int i, int j) const {
    return static_cast<PairClass>(cls_[index(i, j)]);
  }
  void set(int i, int j, PairClass c) {
    cls_[index(i, j)] = static_cast<std::uint8_t>(c);
  }
  int size() const { return n_; }

 private:
  std::size_t index(int i, int j) const;
  int n_;
  std::vector<std::uint8_t> cls_;
};

struct CorrelatedPair {
  Graph g1;
  Graph g2;
  std::vector<int> pi_star;  // hidden permutation, G1 id -> G2 id
  Labeling sigma_star;       // ground truth in G1 coordinates
  std::optional<PairPartition> partition;

  // sigma_star composed with pi_star^{-1}: labels in G2 coordinates.
  Labeling sigma_star2() const;
};

// Parent-graph subsampling construction. Deterministic in (params, seed);
// partition field absent.
CorrelatedPair generate_subsampling(const ModelParams& params,
                                    std::uint64_t seed);

// Random-partition construction; partition field populated.
CorrelatedPair generate_partition(const ModelParams& params,
                                  std::uint64_t seed);

// (1/n) |sum_i sig_hat(i) sig_star(i)|; both labelings must be total.
double overlap(const Labeling& sig_hat, const Labeling& sig_star);

struct EventFReport {
  bool pass = true;
  std::string violation;  // first violated bound, empty on pass
};

// Balance and potential-neighbor-count bounds of the partition construction;
// requires the partition field. At s in {0,1} only the balance clause applies.
EventFReport check_event_f(const CorrelatedPair& pair, const ModelParams& params);

// Instance directory: g1.edges, g2.edges, pi_star.txt, sigma_star.txt, meta.
void save_instance(const std::string& dir, const CorrelatedPair& pair,
                   const ModelParams& params, std::uint64_t seed,
                   const std::string& generator);

struct LoadedInstance {
  CorrelatedPair pair;
  ModelParams params;
  std::uint64_t seed;
  std::string generator;
};
LoadedInstance load_instance(const std::string& dir);

}  // namespace csbm
