#ifndef TORUSMAPS_CHARACTERISTICS_HPP
#define TORUSMAPS_CHARACTERISTICS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusmaps/exactlin.hpp"

namespace torusmaps {

struct GenusNotZero : std::domain_error {
  GenusNotZero() : std::domain_error("modular genus is not zero") {}
};

// Valency of one orbit of lower-period points: the orbit period n_i together
// with d_i, the inverse mod lambda_i = n/n_i of the local rotation class.
struct Valency {
  Int n_i;
  Int d_i;
};

bool operator==(const Valency& a, const Valency& b);
bool operator!=(const Valency& a, const Valency& b);
bool operator<(const Valency& a, const Valency& b);  // by (n_i, d_i)

// The conjugacy invariant (n, p, (n_1,d_1), ..., (n_k,d_k)) of a periodic
// map of period n on the orientable surface of genus p.
struct CompleteCharacteristic {
  Int n;
  Int p;
  std::vector<Valency> orbits;  // stored canonically: n_i descending, then d_i ascending

  // Validates the type invariants (n_i | n, n_i < n, 1 <= d_i <= lambda_i - 1,
  // gcd(d_i, lambda_i) = 1) and canonicalizes the orbit order.
  // Throws std::invalid_argument on violation.
  static CompleteCharacteristic make(Int n, Int p, std::vector<Valency> orbits);
};

bool operator==(const CompleteCharacteristic& a, const CompleteCharacteristic& b);
bool operator!=(const CompleteCharacteristic& a, const CompleteCharacteristic& b);
bool operator<(const CompleteCharacteristic& a, const CompleteCharacteristic& b);
std::string to_string(const CompleteCharacteristic& k);

// Genus g of the orbit space, from 2p + sum(n_i) - 2 = n(2g + k - 2);
// nullopt when no integer g >= 0 solves it.
std::optional<Int> modular_genus(const CompleteCharacteristic& k);

// sum(d_i n_i) = 0 (mod n); vacuously true for k = 0.
bool valency_sum_ok(const CompleteCharacteristic& k);

// gcd(n_1 d_1, ..., n_k d_k, n) = 1; only defined when the modular genus is 0,
// throws GenusNotZero otherwise.
bool sphere_gcd_ok(const CompleteCharacteristic& k);

struct Admissibility {
  bool ok = false;
  std::string reason;  // names the first failed condition; "ok" when admissible
  explicit operator bool() const { return ok; }
};

// Realizability of k by an orientation preserving periodic homeomorphism.
Admissibility is_admissible(const CompleteCharacteristic& k);

// Same period, same genus, same multiset of valencies.
bool equivalent(const CompleteCharacteristic& a, const CompleteCharacteristic& b);

// All admissible characteristics with p = 1 and at least one orbit: exactly
// the seven of the canonical list, in canonical order.
std::vector<CompleteCharacteristic> enumerate_torus_nonfree();

// All admissible characteristics with genus p, period <= n_max and orbit
// count <= k_max (free ones included), deduplicated, in canonical order.
std::vector<CompleteCharacteristic> enumerate_general(long p, long n_max, long k_max);

// kappa_1 .. kappa_7; index j-1 holds kappa_j.
const std::array<CompleteCharacteristic, 7>& canonical_nonfree_characteristics();

// 1..7 when k is equivalent to a canonical nonfree characteristic.
std::optional<int> canonical_index(const CompleteCharacteristic& k);

// Bounds behind the enumerators, exposed as checkable predicates.
// k = 0 forces p = n(g-1) + 1.
bool free_genus_relation_holds(const CompleteCharacteristic& k);
// k >= 1 forces p > n(g-1) + 1.
bool nonfree_genus_bound_holds(const CompleteCharacteristic& k);
// k >= 1 forces 0 < k <= sum(n_i) <= nk/2 < nk.
bool orbit_sum_bounds_hold(const CompleteCharacteristic& k);
// p = 1, k >= 1 forces 2 < 2n/(n-1) <= k <= 4.
bool torus_orbit_count_bound_holds(const CompleteCharacteristic& k);

}  // namespace torusmaps

#endif
