#include "conductor/local_field.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "conductor/error.hpp"
#include "conductor/group.hpp"

namespace conductor {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

struct Split {
  u64 pk = 1;     // p-part of m
  u64 mprime = 1; // prime-to-p part
  int k = 0;
};

Split split(unsigned p, u64 m) {
  Split s;
  s.mprime = m;
  while (s.mprime % p == 0) {
    s.mprime /= p;
    s.pk *= p;
    ++s.k;
  }
  return s;
}

// x = a mod m1, x = b mod m2 with coprime moduli
u64 crt(u64 a, u64 m1, u64 b, u64 m2) {
  const u64 m = m1 * m2;
  for (u64 x = a % m1; x < m; x += m1)
    if (x % m2 == b % m2) return x;
  throw Error("crt failed");
}

std::vector<u64> closure(u64 m, const std::vector<u64>& gens) {
  std::set<u64> seen{1 % m};
  std::vector<u64> todo{1 % m};
  while (!todo.empty()) {
    const u64 x = todo.back();
    todo.pop_back();
    for (u64 g : gens) {
      const u64 y = mulmod(x, g % m, m);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t order_mod(u64 a, u64 m) {
  if (m == 1) return 1;
  std::size_t o = 1;
  for (u64 x = a % m; x != 1; x = mulmod(x, a, m)) ++o;
  return o;
}

u64 primitive_root_prime_power(unsigned p, int k) {
  const u64 pk = ipow(p, static_cast<unsigned>(k));
  const u64 phi = pk / p * (p - 1);
  const auto fac = prime_factors(phi);
  for (u64 g = 2;; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (u64 q : fac)
      if (powmod(g, phi / q, pk) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

bool subset(const std::vector<u64>& a, const std::vector<u64>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<u64> local_galois_group(unsigned p, u64 m) {
  const Split s = split(p, m);
  const auto frob = closure(s.mprime, {p % s.mprime});
  std::vector<u64> out;
  for (u64 a = 0; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    if (std::binary_search(frob.begin(), frob.end(), a % s.mprime)) out.push_back(a);
  }
  if (m == 1) out = {0};
  return out;
}

std::vector<u64> inertia_group(unsigned p, u64 m) {
  const Split s = split(p, m);
  std::vector<u64> out;
  for (u64 a : local_galois_group(p, m))
    if (a % s.mprime == 1 % s.mprime) out.push_back(a);
  return out;
}

AbelianLocalField::AbelianLocalField(unsigned p, u64 m, const std::vector<u64>& stab_gens) : p_(p), m_(m) {
  if (p == 2 || !is_prime(p)) throw InvalidInput("p must be an odd prime");
  if (m == 0) throw InvalidInput("field modulus must be positive");
  const auto d = local_galois_group(p, m);
  for (u64 g : stab_gens) {
    if (!std::binary_search(d.begin(), d.end(), g % m))
      throw InvalidInput("stabilizer generator " + std::to_string(g) + " is not in the local Galois group mod " +
                         std::to_string(m));
  }
  stab_ = closure(m, stab_gens);
  finish();
}

AbelianLocalField AbelianLocalField::unramified(unsigned p, unsigned f) {
  AbelianLocalField k = cyclotomic(p, ipow(p, f) - 1);
  // shrink to a small presentation
  return field_of_values({}, k);
}

void AbelianLocalField::finish() {
  // drop primes from m while the field stays inside the smaller cyclotomic field
  bool changed = true;
  while (changed && m_ > 1) {
    changed = false;
    for (u64 q : prime_factors(m_)) {
      const u64 mm = m_ / q;
      bool inside = true;
      for (u64 a : local_galois_group(p_, m_))
        if (a % mm == 1 % mm && !std::binary_search(stab_.begin(), stab_.end(), a)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      std::set<u64> img;
      for (u64 a : stab_) img.insert(a % mm);
      m_ = mm;
      stab_.assign(img.begin(), img.end());
      changed = true;
      break;
    }
  }
  const auto d = local_galois_group(p_, m_);
  const auto in = inertia_group(p_, m_);
  std::size_t si = 0;
  for (u64 a : in)
    if (std::binary_search(stab_.begin(), stab_.end(), a)) ++si;
  e_ = static_cast<int>(in.size() / si);
  f_ = static_cast<int>(d.size() / stab_.size() / static_cast<std::size_t>(e_));

  // conductor-discriminant over the characters of D/stab, D = <F> x <g>
  const Split s = split(p_, m_);
  if (s.k == 0) {
    d_abs_ = 0;
    return;
  }
  const u64 a = order_mod(p_, s.mprime);
  const u64 b = s.pk / p_ * (p_ - 1);
  const u64 frob = crt(p_ % s.mprime, s.mprime, 1, s.pk);
  const u64 g = crt(1, s.mprime, primitive_root_prime_power(p_, s.k), s.pk);
  std::unordered_map<u64, std::pair<u64, u64>> coords;
  u64 fx = 1 % m_;
  for (u64 x = 0; x < a; ++x) {
    u64 gy = fx;
    for (u64 y = 0; y < b; ++y) {
      coords[gy] = {x, y};
      gy = mulmod(gy, g, m_);
    }
    fx = mulmod(fx, frob, m_);
  }
  std::vector<std::pair<u64, u64>> sc;
  for (u64 st : stab_) sc.push_back(coords.at(st));
  long total = 0;
  for (u64 sx = 0; sx < a; ++sx)
    for (u64 ty = 0; ty < b; ++ty) {
      bool trivial = true;
      for (auto [x, y] : sc)
        if ((sx * x * b + ty * y * a) % (a * b) != 0) {
          trivial = false;
          break;
        }
      if (!trivial || ty == 0) continue;
      int c = 1;
      for (u64 ppow = 1; (ty * (p_ - 1) * ppow) % b != 0; ppow *= p_) ++c;
      total += c;
    }
  if (total % f_ != 0) throw Error("discriminant valuation not divisible by the residue degree");
  d_abs_ = static_cast<int>(total / f_);
}

std::vector<u64> AbelianLocalField::stab_generators() const {
  std::vector<u64> gens;
  std::vector<u64> cur{1 % m_};
  for (u64 x : stab_) {
    if (std::binary_search(cur.begin(), cur.end(), x)) continue;
    gens.push_back(x);
    cur = closure(m_, gens);
  }
  return gens;
}

AbelianLocalField AbelianLocalField::lift(u64 M) const {
  if (M % m_ != 0) throw InvalidInput("field modulus must divide the lift modulus");
  std::vector<u64> st;
  for (u64 a : local_galois_group(p_, M))
    if (std::binary_search(stab_.begin(), stab_.end(), a % m_)) st.push_back(a);
  AbelianLocalField out = *this;
  out.m_ = M;
  out.stab_ = std::move(st);
  return out;
}

std::string AbelianLocalField::describe() const {
  if (degree() == 1) return "Q_" + std::to_string(p_);
  return "e=" + std::to_string(e_) + " f=" + std::to_string(f_) + " inside Q_" + std::to_string(p_) + "(zeta_" +
         std::to_string(m_) + ")";
}

bool operator==(const AbelianLocalField& a, const AbelianLocalField& b) {
  if (a.p_ != b.p_ || a.degree() != b.degree()) return false;
  const u64 M = std::lcm(a.m_, b.m_);
  return a.lift(M).stab_ == b.lift(M).stab_;
}

AbelianLocalField field_of_values(std::span<const CycloNumber> vals, const AbelianLocalField& base) {
  u64 M = base.m();
  for (const auto& v : vals) M = std::lcm(M, v.conductor());
  const auto lifted = base.lift(M);
  std::vector<u64> st;
  for (u64 a : lifted.stab()) {
    bool fixes = true;
    for (const auto& v : vals)
      if (!v.is_rational() && galois_apply(v, static_cast<long long>(a), M) != v) {
        fixes = false;
        break;
      }
    if (fixes) st.push_back(a);
  }
  return AbelianLocalField(base.p(), M, st);
}

AbelianLocalField adjoin_roots_of_unity(const AbelianLocalField& base, u64 n) {
  const CycloNumber z = CycloNumber::root_of_unity(n, 1);
  return field_of_values(std::span<const CycloNumber>(&z, 1), base);
}

bool contains(const AbelianLocalField& big, const AbelianLocalField& small) {
  if (big.p() != small.p()) return false;
  const u64 M = std::lcm(big.m(), small.m());
  return subset(big.lift(M).stab(), small.lift(M).stab());
}

std::vector<u64> galois_residues(const AbelianLocalField& k, u64 n) {
  const u64 M = std::lcm(k.m(), n);
  std::set<u64> out;
  const auto lifted = k.lift(M);
  for (u64 a : lifted.stab()) out.insert(a % n);
  return {out.begin(), out.end()};
}

int different_exponent(const AbelianLocalField& field) { return field.d_abs(); }

IdealValuation relative_inverse_different(const AbelianLocalField& k_chi, const AbelianLocalField& k) {
  if (!contains(k_chi, k)) throw InvalidInput("base field is not contained in the extension");
  const long e_rel = k_chi.e() / k.e();
  return {k_chi, -(static_cast<long>(k_chi.d_abs()) - e_rel * k.d_abs())};
}

}  // namespace conductor
