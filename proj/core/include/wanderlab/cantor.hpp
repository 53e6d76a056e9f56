#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wanderlab/interval.hpp"
#include "wanderlab/maps.hpp"

namespace wanderlab::cantor {

enum class BridgeKind : std::uint8_t { s, u };

// Itinerary word; letters run 1..r.
using Word = std::vector<std::uint8_t>;

std::string word_to_string(const Word& w);

struct Bridge {
  BridgeKind kind = BridgeKind::s;
  int generation = 0;
  Word itinerary;
  Interval iv;
};

struct Gap {
  Interval iv;
  int generation = 0;  // generation at which the gap opens
};

struct ThicknessReport {
  double tau = 0;
  int depth = 0;
  Interval witness_gap;
  Interval witness_bridge;
  int witness_gap_generation = 0;
  double witness_point = 0;  // the gap boundary point realizing the infimum
  std::size_t gap_count = 0;
};

// Traversal handle.  Affine-core systems carry the composed branch map
// Phi_w(t) = aff_a * t + aff_b in internal coordinates; generic systems
// recompute intervals from the itinerary.
struct Node {
  Interval iv;
  int generation = 0;
  Word word;
  double aff_a = 1.0, aff_b = 0.0;
};

// Exactly self-similar representation: branch maps affine in an internal
// coordinate, composed with a monotone output transform.
struct AffineCore {
  std::vector<double> scale;   // per letter (1-based index shifted by 1)
  std::vector<double> offset;
  Interval base;               // hull in internal coordinates
  enum class Out : std::uint8_t { identity, two_cos_pi } out = Out::identity;
  bool out_increasing() const { return out == Out::identity; }
  double out_eval(double t) const;
};

// Nonlinear branch family: inv_branch(letter, y) maps the hull into the
// letter's sub-interval; steps(letter) = how many applications of the
// expanding map one letter consumes (z for quadratic u-bridges, else 1).
struct GenericCore {
  std::function<double(int, double)> inv_branch;
  std::vector<int> steps;
  Interval base;
};

class CantorApprox {
 public:
  static constexpr std::size_t kDefaultStoreCap = 1u << 21;

  BridgeKind kind() const { return kind_; }
  int depth() const { return depth_; }
  int alphabet() const { return r_; }
  Interval hull() const { return hull_; }
  const maps::ScalarMap& psi() const { return psi_; }
  int expansion_power() const { return a0_; }     // a0 with |(Psi^a0)'| > gamma on samples
  double expansion_rate() const { return gamma_; }

  Node root() const;
  Node child(const Node& n, int letter) const;
  std::vector<Node> children(const Node& n) const;  // in ascending spatial order
  bool is_affine() const { return affine_.has_value(); }
  const AffineCore* affine() const { return affine_ ? &*affine_ : nullptr; }

  // Materialized level (generation <= stored_depth()).
  const std::vector<Bridge>& level(int generation) const;
  int stored_depth() const { return stored_depth_; }

  // Streams the generation-`depth` cover left to right without
  // materializing it.  Used by thickness and the gap machinery.
  void for_each_leaf(int depth, const std::function<void(const Interval&)>& fn) const;

  // Deepest bridge of generation <= max_gen whose interval contains x.
  Node locate(double x, int max_gen) const;

  // internal: construction helpers
  CantorApprox(BridgeKind kind, int depth, AffineCore core, maps::ScalarMap psi,
               std::size_t store_cap);
  CantorApprox(BridgeKind kind, int depth, GenericCore core, maps::ScalarMap psi,
               std::size_t store_cap);

  // letters sorted by branch position (internal ascending)
  const std::vector<int>& letters_ascending() const { return letters_asc_; }

  void set_expansion(int a0, double gamma) {
    a0_ = a0;
    gamma_ = gamma;
  }
  // u-side data: marked periodic endpoints
  double q1 = 0, q2 = 0;
  int m_period = 0;
  double mu = 0;

 private:
  BridgeKind kind_;
  int depth_;
  int r_;
  Interval hull_;
  std::optional<AffineCore> affine_;
  std::optional<GenericCore> generic_;
  maps::ScalarMap psi_;
  int a0_ = 1;
  double gamma_ = 0;
  std::vector<int> letters_asc_;
  int stored_depth_ = 0;
  std::vector<std::vector<Bridge>> levels_;

  void materialize(std::size_t cap);
};

struct SBridgeOptions {
  bool enforce_slim = false;      // require max level-1 width < (9/21) |B(0)|
  double markov_tol = 1e-9;
  std::size_t store_cap = CantorApprox::kDefaultStoreCap;
};

// Dynamically defined s-side Cantor set: full shift over the given Markov
// intervals under the expanding map psi.
CantorApprox s_bridges(const maps::ScalarMap& psi, const std::vector<Interval>& markov,
                       int depth, const SBridgeOptions& opts = {});

// Exactly affine Cantor set, branches given by sub-intervals of the hull.
CantorApprox make_affine_cantor(const Interval& hull, const std::vector<Interval>& branches,
                                int depth, BridgeKind kind = BridgeKind::s,
                                std::size_t store_cap = CantorApprox::kDefaultStoreCap);

// u-bridges of the quadratic family F_mu(x) = x^2 + mu associated with the
// period-m orbit; at mu = -2 the exact tent-conjugate core is used.
CantorApprox u_bridges_quadratic(double mu, int m, int depth,
                                 std::size_t store_cap = CantorApprox::kDefaultStoreCap);

// Thickness of the generation-`depth` cover, with the maximal-bridge
// extension rule evaluated exactly by a monotone-stack sweep.
ThicknessReport thickness(const CantorApprox& approx, int depth);

struct GapLemmaResult {
  bool applicable = false;  // linked and tau1*tau2 > 1
  bool witness_found = false;
  double witness = 0;
  int depth1 = 0, depth2 = 0;
  double tau1 = 0, tau2 = 0;
  std::string reason;  // which hypothesis failed, for certificates
};

GapLemmaResult gap_lemma_check(const CantorApprox& K1, const CantorApprox& K2);

// Bridge membership: true when x lies in the generation-`depth` cover.
bool cover_contains(const CantorApprox& K, double x, int depth);

struct RatioStats {
  int letter = 0;
  double min_ratio = 0, max_ratio = 0;  // |A_k| / |A_{k+1}|
  std::size_t count = 0;
  double lo_bound = 0, hi_bound = 0;    // 3*2^{j-2}, 5*2^{j-2}
  bool pass = false;
};

struct DistortionReport {
  std::vector<RatioStats> per_letter;
  double min_gap_ratio = 0;       // |G_{k+1}| / |A_{k+1}|  (>= 2^{-(m+1)})
  double min_bottom_ratio = 0;    // |A_{k+1}| / |I_k|      (>= 1/3)
  double min_sibling_ratio = 0;   // |~A_{k+1}| / |A_{k+1}| (>= 1/3)
  double gap_bound = 0;
  bool pass = false;
  int gen_lo = 0, gen_hi = 0;
};

// Parent/child length-ratio statistics over generations [gen_lo, gen_hi],
// grouped by the child's last letter, checked against the u-side
// distortion bounds.
DistortionReport distortion_report(const CantorApprox& approx, int gen_lo, int gen_hi);

// Smallest generation from which distortion_report passes for 7
// consecutive generations; -1 when none found below `limit`.
int find_kappa(const CantorApprox& approx, int limit);

struct CDeltaReport {
  double delta = 0;
  double c_delta = 0;      // sup |log distortion| over admissible pairs
  std::size_t pairs = 0;
};

// Empirical bounded-distortion constant at scale delta, using the
// approx's eventual-expansion power a0.
CDeltaReport distortion_constant(const CantorApprox& approx, double delta);

// log-log slope of c(delta) over a dyadic delta grid.
double distortion_exponent(const CantorApprox& approx, double delta_hi, int n_halvings);

void dump_bridges_csv(const CantorApprox& approx, int depth, std::ostream& os,
                      std::size_t max_rows = 1u << 20);

}  // namespace wanderlab::cantor
