#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fidl/frame.hpp"

namespace fidl {

/// Pair of lattice congruences on A and B.
struct FidlCongruence {
  Partition theta_a;
  Partition theta_b;

  friend bool operator==(const FidlCongruence&, const FidlCongruence&) = default;
  friend auto operator<=>(const FidlCongruence&, const FidlCongruence&) = default;
};

/// Componentwise inclusion of relations.
bool refines(const FidlCongruence& lhs, const FidlCongruence& rhs);

enum class Compatibility { fusion, implication, both };

std::string_view to_string(Compatibility c);

/// First failure of (C1) and/or (C2) as {"condition", "a", "c", "b", "d"}.
std::optional<nlohmann::json> compatibility_failure(const FidlModule& m, const FidlCongruence& c,
                                                    Compatibility which);

/// All pairs of lattice congruences passing `which`, found by enumerating
/// every partition of both sorts. Throws BudgetExceeded past the partition
/// budget. Sorted ascending.
std::vector<FidlCongruence> congruences_by_partitions(const FidlModule& m, Compatibility which);

/// Same list, with the lattice congruences of each sort taken as theta(Y) for
/// every set Y of primes. Sorted ascending.
std::vector<FidlCongruence> congruences_by_spectra(const FidlModule& m, Compatibility which);

/// Partition oracle when within budget, spectral oracle otherwise.
std::vector<FidlCongruence> congruences(const FidlModule& m, Compatibility which);

/// Neighborhood sets of a frame. Maximality and minimality are taken inside
/// the set of points related by the triple, not in the whole poset.
Subset r1_set(const FiFrame& f, Element y, Element z);  // maximal x with (x,y,z) in R
Subset r2_set(const FiFrame& f, Element x, Element z);  // maximal y with (x,y,z) in R
Subset t1_set(const FiFrame& f, Element x, Element z);  // maximal y with (y,x,z) in T
Subset t3_set(const FiFrame& f, Element y, Element x);  // minimal z with (y,x,z) in T
std::vector<std::pair<Element, Element>> max_r_inverse(const FiFrame& f, Element z);  // (x, y)
std::vector<std::pair<Element, Element>> d_set(const FiFrame& f, Element x);          // (y, z)

struct ClosedPair {
  Subset z1;  // points of X
  Subset z2;  // points of Y
  bool r_closed{false};
  bool t_closed{false};
  bool strongly_closed() const { return r_closed && t_closed; }

  friend bool operator==(const ClosedPair& a, const ClosedPair& b) { return a.z1 == b.z1 && a.z2 == b.z2; }
};

enum class ClosedKind { r_closed, t_closed, strongly_closed };

/// Precomputed neighborhood requirements of a frame.
class ClosedPairTester {
public:
  explicit ClosedPairTester(const FiFrame& f);
  ClosedPair evaluate(const Subset& z1, const Subset& z2) const;
  /// Least strongly closed pair containing the seed.
  ClosedPair closure(Subset z1, Subset z2) const;
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }

private:
  std::size_t nx_, ny_;
  std::vector<Subset> max_first_, max_second_;  // per z: x and y components of Max(R^-1(z))
  std::vector<Subset> d_first_, d_second_;      // per x: y and z components of D(x)
};

/// All pairs of the given kind in ascending order of the mask z1 | z2 << |X|.
/// Throws BudgetExceeded when |X| + |Y| exceeds the closed-pair budget.
std::vector<ClosedPair> enumerate_closed_pairs(const FiFrame& f, ClosedKind kind);
std::vector<ClosedPair> enumerate_strongly_closed(const FiFrame& f);

ClosedPair closure_strongly_closed(const FiFrame& f, const Subset& seed1, const Subset& seed2);

/// (theta(Z1), theta(Z2)) without any closedness requirement.
FidlCongruence theta_of(const FidlModule& m, const CanonicalFrame& c, const Subset& z1, const Subset& z2);

/// Throws NotStronglyClosed unless z is strongly closed in c.frame, and
/// ConditionViolation if the resulting pair fails (C1) or (C2).
FidlCongruence theta_pair(const FidlModule& m, const CanonicalFrame& c, const ClosedPair& z);

struct PairingReport {
  std::string name;  // "fusion", "implication", "both"
  std::size_t closed_count{0};
  std::size_t congruence_count{0};
  bool into{false};            // every theta lands in the congruence list
  bool bijective{false};
  bool order_reversing{false};
  nlohmann::json discrepancies = nlohmann::json::array();
  bool pass() const { return into && bijective && order_reversing; }
};

struct AntiIsoReport {
  std::vector<PairingReport> pairings;
  bool oracles_agree{true};  // only meaningful when the partition oracle ran
  bool partition_oracle_ran{false};
  bool pass() const;
};

AntiIsoReport anti_isomorphism_check(const FidlModule& m);

enum class Verdict { trivial, simple, si_not_simple, not_si };

std::string_view to_string(Verdict v);

struct Discrepancy {
  std::string kind;  // "point_closure_simple", "point_closure_si", "closed_pairs_simple"
  nlohmann::json record;
};

struct ClassifyReport {
  Verdict verdict{Verdict::trivial};
  bool subdirectly_irreducible{true};
  std::size_t con_size{0};
  std::size_t strongly_closed_count{0};
  std::vector<FidlCongruence> con;
  std::vector<ClosedPair> strongly_closed;
  std::optional<bool> point_closure_simple;  // criterion "cl(P,Q) full for all (P,Q)"
  std::optional<bool> point_closure_si;      // criterion "J non-empty and not everything"
  std::vector<Discrepancy> discrepancies;

  std::size_t count(std::string_view kind) const;
};

ClassifyReport classify(const FidlModule& m);

nlohmann::json congruence_to_json(const FidlCongruence& c);
nlohmann::json closed_pair_to_json(const ClosedPair& z);
nlohmann::json to_json(const ClassifyReport& r);
nlohmann::json to_json(const AntiIsoReport& r);

}  // namespace fidl
