#include "torusmaps/characteristics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace torusmaps {

bool operator==(const Valency& a, const Valency& b) {
  return a.n_i == b.n_i && a.d_i == b.d_i;
}
bool operator!=(const Valency& a, const Valency& b) { return !(a == b); }

bool operator<(const Valency& a, const Valency& b) {
  const int c = cmp(a.n_i, b.n_i);
  if (c != 0) return c < 0;
  return cmp(a.d_i, b.d_i) < 0;
}

CompleteCharacteristic CompleteCharacteristic::make(Int n, Int p,
                                                    std::vector<Valency> orbits) {
  if (n < 1) throw std::invalid_argument("period must be positive");
  if (p < 0) throw std::invalid_argument("genus must be non-negative");
  for (const auto& o : orbits) {
    if (o.n_i < 1 || o.n_i >= n || n % o.n_i != 0)
      throw std::invalid_argument("orbit period must be a proper divisor of the period");
    const Int lambda = n / o.n_i;
    if (o.d_i < 1 || o.d_i >= lambda || gcd(o.d_i, lambda) != 1)
      throw std::invalid_argument("valency must be a unit mod n/n_i");
  }
  std::sort(orbits.begin(), orbits.end(), [](const Valency& a, const Valency& b) {
    const int c = cmp(a.n_i, b.n_i);
    if (c != 0) return c > 0;  // n_i descending
    return cmp(a.d_i, b.d_i) < 0;
  });
  return CompleteCharacteristic{std::move(n), std::move(p), std::move(orbits)};
}

bool operator==(const CompleteCharacteristic& a, const CompleteCharacteristic& b) {
  return a.n == b.n && a.p == b.p && a.orbits == b.orbits;
}
bool operator!=(const CompleteCharacteristic& a, const CompleteCharacteristic& b) {
  return !(a == b);
}

bool operator<(const CompleteCharacteristic& a, const CompleteCharacteristic& b) {
  int c = cmp(a.n, b.n);
  if (c != 0) return c < 0;
  c = cmp(a.p, b.p);
  if (c != 0) return c < 0;
  if (a.orbits.size() != b.orbits.size()) return a.orbits.size() < b.orbits.size();
  return std::lexicographical_compare(a.orbits.begin(), a.orbits.end(),
                                      b.orbits.begin(), b.orbits.end());
}

std::string to_string(const CompleteCharacteristic& k) {
  std::ostringstream os;
  os << "(n=" << k.n.get_str() << ", p=" << k.p.get_str();
  if (!k.orbits.empty()) {
    os << ", orbits={";
    bool first = true;
    for (const auto& o : k.orbits) {
      if (!first) os << ",";
      first = false;
      os << "(" << o.n_i.get_str() << "," << o.d_i.get_str() << ")";
    }
    os << "}";
  }
  os << ")";
  return os.str();
}

std::optional<Int> modular_genus(const CompleteCharacteristic& k) {
  Int sum_n = 0;
  for (const auto& o : k.orbits) sum_n += o.n_i;
  const Int kk(k.orbits.size());
  // 2p + sum(n_i) - 2 = n(2g + k - 2)  =>  2 n g = 2p + sum(n_i) - 2 - n(k - 2)
  const Int num = 2 * k.p + sum_n - 2 - k.n * (kk - 2);
  if (num < 0 || num % (2 * k.n) != 0) return std::nullopt;
  return num / (2 * k.n);
}

bool valency_sum_ok(const CompleteCharacteristic& k) {
  Int s = 0;
  for (const auto& o : k.orbits) s += o.d_i * o.n_i;
  return s % k.n == 0;
}

bool sphere_gcd_ok(const CompleteCharacteristic& k) {
  const auto g = modular_genus(k);
  if (!g || *g != 0) throw GenusNotZero{};
  Int acc = k.n;
  for (const auto& o : k.orbits) acc = gcd(acc, o.n_i * o.d_i);
  return acc == 1;
}

Admissibility is_admissible(const CompleteCharacteristic& k) {
  if (!valency_sum_ok(k))
    return {false, "valency sum condition (2) fails: sum d_i n_i is not divisible by n"};
  const auto g = modular_genus(k);
  if (!g)
    return {false, "genus relation (3) fails: no integer modular genus g >= 0"};
  if (*g == 0 && !sphere_gcd_ok(k))
    return {false, "sphere gcd condition (4) fails: gcd(n_1 d_1,...,n_k d_k, n) > 1"};
  return {true, "admissible"};
}

bool equivalent(const CompleteCharacteristic& a, const CompleteCharacteristic& b) {
  return a == b;  // storage order is canonical, so this is multiset equality
}

namespace {

// Non-decreasing lists (l_1 <= ... <= l_slots), each l >= max(2, lo), with
// sum of reciprocals exactly `target`.
void reciprocal_sum_lists(int slots, Int lo, const Rat& target,
                          std::vector<Int>& acc,
                          const std::function<void(const std::vector<Int>&)>& emit) {
  if (slots == 0) {
    if (target == 0) emit(acc);
    return;
  }
  if (target <= 0) return;
  // 1/l <= target  and  slots/l >= target
  Int l = lo < 2 ? Int(2) : lo;
  const Rat inv_target = 1 / target;
  Int min_l;
  mpz_cdiv_q(min_l.get_mpz_t(), inv_target.get_num_mpz_t(), inv_target.get_den_mpz_t());
  if (l < min_l) l = min_l;
  for (; Rat(l) * target <= slots; ++l) {
    acc.push_back(l);
    reciprocal_sum_lists(slots - 1, l, target - Rat(1, l), acc, emit);
    acc.pop_back();
  }
}

// All valency assignments for the given non-decreasing orbit periods;
// equal periods carry non-decreasing d so every multiset appears once.
void for_each_valency_list(const Int& n, const std::vector<Int>& periods, size_t pos,
                           std::vector<Valency>& acc,
                           const std::function<void(const std::vector<Valency>&)>& emit) {
  if (pos == periods.size()) {
    emit(acc);
    return;
  }
  const Int lambda = n / periods[pos];
  Int d_start = 1;
  if (pos > 0 && periods[pos] == periods[pos - 1]) d_start = acc.back().d_i;
  for (Int d = d_start; d < lambda; ++d) {
    if (gcd(d, lambda) != 1) continue;
    acc.push_back(Valency{periods[pos], d});
    for_each_valency_list(n, periods, pos + 1, acc, emit);
    acc.pop_back();
  }
}

void sort_unique(std::vector<CompleteCharacteristic>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<CompleteCharacteristic> enumerate_torus_nonfree() {
  std::vector<CompleteCharacteristic> out;
  for (int k = 3; k <= 4; ++k) {
    std::vector<Int> acc;
    reciprocal_sum_lists(k, 2, Rat(k - 2), acc, [&](const std::vector<Int>& lambdas) {
      // With genus 0 forced, n/lcm(lambda_i) divides gcd(n_1 d_1,...,n_k d_k,n),
      // so the gcd condition pins n = lcm(lambda_i).
      Int n = 1;
      for (const auto& l : lambdas) n = lcm(n, l);
      std::vector<Int> periods;
      periods.reserve(lambdas.size());
      for (auto it = lambdas.rbegin(); it != lambdas.rend(); ++it) periods.push_back(n / *it);
      std::sort(periods.begin(), periods.end());
      std::vector<Valency> vacc;
      for_each_valency_list(n, periods, 0, vacc, [&](const std::vector<Valency>& vs) {
        auto kappa = CompleteCharacteristic::make(n, 1, vs);
        if (is_admissible(kappa).ok) out.push_back(std::move(kappa));
      });
    });
  }
  sort_unique(out);
  return out;
}

std::vector<CompleteCharacteristic> enumerate_general(long p, long n_max, long k_max) {
  if (p < 0) throw std::invalid_argument("genus must be non-negative");
  if (n_max < 1) throw std::invalid_argument("period cap must be positive");
  if (k_max < 0) throw std::invalid_argument("orbit cap must be non-negative");

  std::vector<CompleteCharacteristic> out;
  const Int P(p);
  for (long n_l = 1; n_l <= n_max; ++n_l) {
    const Int n(n_l);
    {
      auto free_kappa = CompleteCharacteristic::make(n, P, {});
      if (is_admissible(free_kappa).ok) out.push_back(std::move(free_kappa));
    }
    std::vector<Int> divisors;
    for (long m = 1; m + m <= n_l; ++m)
      if (n_l % m == 0) divisors.push_back(Int(m));
    if (divisors.empty()) continue;

    // Non-decreasing period multisets of size k over the proper divisors.
    std::vector<Int> periods;
    std::function<void(int, size_t)> rec = [&](int slots, size_t from) {
      if (slots == 0) {
        Int sum_n = 0;
        for (const auto& m : periods) sum_n += m;
        const Int num = 2 * P + sum_n - 2 - n * (Int(periods.size()) - 2);
        if (num < 0 || num % (2 * n) != 0) return;  // no integer modular genus
        std::vector<Valency> vacc;
        for_each_valency_list(n, periods, 0, vacc, [&](const std::vector<Valency>& vs) {
          auto kappa = CompleteCharacteristic::make(n, P, vs);
          if (is_admissible(kappa).ok) out.push_back(std::move(kappa));
        });
        return;
      }
      for (size_t i = from; i < divisors.size(); ++i) {
        periods.push_back(divisors[i]);
        rec(slots - 1, i);
        periods.pop_back();
      }
    };
    for (long k = 1; k <= k_max; ++k) rec(static_cast<int>(k), 0);
  }
  sort_unique(out);
  return out;
}

const std::array<CompleteCharacteristic, 7>& canonical_nonfree_characteristics() {
  static const std::array<CompleteCharacteristic, 7> list = {
      CompleteCharacteristic::make(2, 1, {{1, 1}, {1, 1}, {1, 1}, {1, 1}}),
      CompleteCharacteristic::make(3, 1, {{1, 1}, {1, 1}, {1, 1}}),
      CompleteCharacteristic::make(3, 1, {{1, 2}, {1, 2}, {1, 2}}),
      CompleteCharacteristic::make(6, 1, {{3, 1}, {2, 1}, {1, 1}}),
      CompleteCharacteristic::make(6, 1, {{3, 1}, {2, 2}, {1, 5}}),
      CompleteCharacteristic::make(4, 1, {{2, 1}, {1, 1}, {1, 1}}),
      CompleteCharacteristic::make(4, 1, {{2, 1}, {1, 3}, {1, 3}}),
  };
  return list;
}

std::optional<int> canonical_index(const CompleteCharacteristic& k) {
  const auto& list = canonical_nonfree_characteristics();
  for (size_t j = 0; j < list.size(); ++j)
    if (equivalent(k, list[j])) return static_cast<int>(j) + 1;
  return std::nullopt;
}

bool free_genus_relation_holds(const CompleteCharacteristic& k) {
  if (!k.orbits.empty()) return true;
  const auto g = modular_genus(k);
  return g && k.p == k.n * (*g - 1) + 1;
}

bool nonfree_genus_bound_holds(const CompleteCharacteristic& k) {
  if (k.orbits.empty()) return true;
  const auto g = modular_genus(k);
  return g && k.p > k.n * (*g - 1) + 1;
}

bool orbit_sum_bounds_hold(const CompleteCharacteristic& k) {
  if (k.orbits.empty()) return true;
  const Int kk(k.orbits.size());
  Int sum_n = 0;
  for (const auto& o : k.orbits) sum_n += o.n_i;
  return 0 < kk && kk <= sum_n && 2 * sum_n <= k.n * kk && k.n * kk > sum_n;
}

bool torus_orbit_count_bound_holds(const CompleteCharacteristic& k) {
  if (k.p != 1 || k.orbits.empty()) return true;
  const Int kk(k.orbits.size());
  return 2 * k.n <= kk * (k.n - 1) && kk <= 4;
}

}  // namespace torusmaps
