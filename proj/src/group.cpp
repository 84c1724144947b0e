#include "conductor/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "conductor/error.hpp"

namespace conductor {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

FiniteGroup FiniteGroup::from_law(std::size_t order, MulFn mul, std::vector<Elem> gens) {
  FiniteGroup g;
  g.order_ = order;
  if (order <= kTableBound) {
    g.table_.resize(order * order);
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b) g.table_[a * order + b] = mul(a, b);
  } else {
    g.law_ = std::move(mul);
  }
  g.gens_ = std::move(gens);
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidInput("multiplication table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidInput("multiplication table is not square");
    for (Elem x : row)
      if (x >= n) throw InvalidInput("multiplication table entry out of range");
  }
  // locate the identity
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e == n) throw InvalidInput("multiplication table has no identity");
  std::vector<Elem> to_new(n), to_old(n);
  std::iota(to_old.begin(), to_old.end(), 0);
  std::swap(to_old[0], to_old[e]);
  for (std::size_t i = 0; i < n; ++i) to_new[to_old[i]] = static_cast<Elem>(i);

  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.table_[a * n + b] = to_new[table[to_old[a]][to_old[b]]];
  // Latin square + associativity; exhaustive at table sizes
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) seen[g.table_[a * n + b]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw InvalidInput("multiplication table row is not a permutation");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table_[g.table_[a * n + b] * n + c] != g.table_[a * n + g.table_[b * n + c]])
          throw InvalidInput("multiplication table is not associative");
  // greedy generators
  std::vector<Elem> gens;
  std::vector<Elem> span{0};
  for (Elem x = 1; x < n && span.size() < n; ++x) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = subgroup_closure(g, gens);
  }
  g.gens_ = std::move(gens);
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& gens,
                                           std::uint32_t degree) {
  using Perm = std::vector<std::uint32_t>;
  for (const auto& s : gens) {
    if (s.size() != degree) throw InvalidInput("permutation has wrong degree");
    std::vector<char> seen(degree, 0);
    for (auto x : s) {
      if (x >= degree || seen[x]) throw InvalidInput("generator is not a permutation");
      seen[x] = 1;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  // compose(a, b) = a after b, i.e. (a*b)(x) = a(b(x))
  auto compose = [degree](const Perm& a, const Perm& b) {
    Perm r(degree);
    for (std::uint32_t x = 0; x < degree; ++x) r[x] = a[b[x]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      Perm q = compose(elems[i], s);
      if (index.emplace(q, static_cast<Elem>(elems.size())).second) elems.push_back(std::move(q));
    }
  }
  std::vector<Elem> gen_idx;
  for (const auto& s : gens) {
    Elem x = index.at(s);
    if (x != 0 && std::find(gen_idx.begin(), gen_idx.end(), x) == gen_idx.end()) gen_idx.push_back(x);
  }
  auto shared_elems = std::make_shared<std::vector<Perm>>(elems);
  auto shared_index = std::make_shared<std::map<Perm, Elem>>(std::move(index));
  FiniteGroup g = from_law(
      elems.size(),
      [shared_elems, shared_index, compose](Elem a, Elem b) {
        return shared_index->at(compose((*shared_elems)[a], (*shared_elems)[b]));
      },
      std::move(gen_idx));
  g.perms_ = std::move(elems);
  return g;
}

void FiniteGroup::finish() {
  inverse_.assign(order_, 0);
  std::vector<char> done(order_, 0);
  done[0] = 1;
  for (Elem a = 1; a < order_; ++a) {
    if (done[a]) continue;
    // the last power before returning to the identity is a^-1
    Elem x = a, prev = 0;
    while (x != 0) {
      prev = x;
      x = mul(x, a);
    }
    inverse_[a] = prev;
    inverse_[prev] = a;
    done[a] = done[prev] = 1;
  }
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = 0, base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::elem_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return a == 0 ? 1 : k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Elem a = 0; a < order_; ++a) e = std::lcm(e, elem_order(a));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : gens_)
    for (Elem b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Elem> ConjugacyClasses::reps() const {
  std::vector<Elem> r;
  for (const auto& c : classes) r.push_back(c.front());
  return r;
}

std::vector<std::size_t> ConjugacyClasses::sizes() const {
  std::vector<std::size_t> r;
  for (const auto& c : classes) r.push_back(c.size());
  return r;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  ConjugacyClasses cc;
  cc.class_of.assign(n, kNone);
  for (Elem x = 0; x < n; ++x) {
    if (cc.class_of[x] != kNone) continue;
    const std::size_t id = cc.classes.size();
    std::vector<Elem> orbit{x};
    cc.class_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem s : g.generators()) {
        Elem y = g.conj(s, orbit[i]);
        if (cc.class_of[y] == kNone) {
          cc.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cc.classes.push_back(std::move(orbit));
  }
  return cc;
}

std::vector<Elem> subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<Elem> commutator_subgroup(const FiniteGroup& g) {
  // normal closure of generator commutators equals [G,G]
  std::vector<Elem> comms;
  for (Elem a : g.generators())
    for (Elem b : g.generators()) {
      Elem c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (c != 0) comms.push_back(c);
    }
  std::vector<Elem> sub = subgroup_closure(g, comms);
  for (bool grown = true; grown;) {
    grown = false;
    std::vector<Elem> extra;
    for (Elem x : sub)
      for (Elem s : g.generators()) {
        Elem y = g.conj(s, x);
        if (!std::binary_search(sub.begin(), sub.end(), y)) extra.push_back(y);
      }
    if (!extra.empty()) {
      comms.insert(comms.end(), extra.begin(), extra.end());
      sub = subgroup_closure(g, comms);
      grown = true;
    }
  }
  return sub;
}

std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem s : g.generators())
      if (g.mul(s, x) != g.mul(x, s)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return z;
}

GroupAutomorphism::GroupAutomorphism(std::shared_ptr<const FiniteGroup> domain, std::vector<Elem> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  const FiniteGroup& g = *domain_;
  if (images_.size() != g.order()) throw InvalidInput("automorphism image list has wrong length");
  if (images_[0] != 0) throw InvalidInput("automorphism does not fix the identity");
  std::vector<char> seen(g.order(), 0);
  for (Elem x : images_) {
    if (x >= g.order() || seen[x]) throw InvalidInput("automorphism is not bijective");
    seen[x] = 1;
  }
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem s : g.generators())
      if (images_[g.mul(a, s)] != g.mul(images_[a], images_[s]))
        throw InvalidInput("automorphism is not multiplicative");
}

GroupAutomorphism GroupAutomorphism::identity(std::shared_ptr<const FiniteGroup> domain) {
  std::vector<Elem> im(domain->order());
  std::iota(im.begin(), im.end(), 0);
  return GroupAutomorphism(std::move(domain), std::move(im));
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  std::vector<Elem> im(images_.size());
  for (Elem x = 0; x < images_.size(); ++x) im[images_[x]] = x;
  return GroupAutomorphism(domain_, std::move(im));
}

GroupAutomorphism GroupAutomorphism::compose(const GroupAutomorphism& other) const {
  std::vector<Elem> im(images_.size());
  for (Elem x = 0; x < images_.size(); ++x) im[x] = images_[other.images_[x]];
  return GroupAutomorphism(domain_, std::move(im));
}

GroupAutomorphism GroupAutomorphism::power(long long k) const {
  const long long ord = static_cast<long long>(order());
  k %= ord;
  if (k < 0) k += ord;
  GroupAutomorphism r = identity(domain_);
  for (long long i = 0; i < k; ++i) r = compose(r);
  return r;
}

bool GroupAutomorphism::is_identity() const {
  for (Elem x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t GroupAutomorphism::order() const {
  std::size_t k = 1;
  std::vector<Elem> cur = images_;
  auto is_id = [](const std::vector<Elem>& v) {
    for (Elem x = 0; x < v.size(); ++x)
      if (v[x] != x) return false;
    return true;
  };
  while (!is_id(cur)) {
    for (auto& x : cur) x = images_[x];
    ++k;
  }
  return k;
}

SemidirectData::SemidirectData(std::shared_ptr<const FiniteGroup> h, GroupAutomorphism alpha, unsigned p)
    : h_(std::move(h)), alpha_(std::move(alpha)), p_(p) {
  if (p % 2 == 0 || !is_prime(p)) throw InvalidInput("p must be an odd prime, got " + std::to_string(p));
  if (&alpha_.domain() != h_.get() && alpha_.domain().order() != h_->order())
    throw InvalidInput("alpha is not an automorphism of h");
  std::size_t ord = alpha_.order();
  while (ord % p == 0) {
    ord /= p;
    ++n_;
  }
  if (ord != 1) throw InvalidInput("the order of alpha must be a power of p");
}

std::size_t SemidirectData::p_pow_n() const { return ipow(p_, n_); }

FiniteQuotient finite_quotient(const SemidirectData& sd, unsigned m) {
  if (m < sd.n())
    throw InvalidInput("invalid quotient: level " + std::to_string(m) + " is below n = " +
                       std::to_string(sd.n()));
  const std::size_t hn = sd.h().order();
  const std::size_t pm = ipow(sd.p(), m);
  const std::size_t pn = sd.p_pow_n();
  // inv_pows[j] = alpha^{-j}
  auto h = sd.h_ptr();
  auto inv_pows = std::make_shared<std::vector<std::vector<Elem>>>();
  GroupAutomorphism ainv = sd.alpha().inverse();
  GroupAutomorphism cur = GroupAutomorphism::identity(h);
  for (std::size_t j = 0; j < pn; ++j) {
    inv_pows->push_back(cur.images());
    cur = ainv.compose(cur);
  }
  // (g^i h)(g^j h') = g^{i+j} alpha^{-j}(h) h'
  auto law = [h, inv_pows, hn, pm, pn](Elem a, Elem b) -> Elem {
    const std::size_t i = a / hn, j = b / hn;
    const Elem ha = a % hn, hb = b % hn;
    const Elem moved = (*inv_pows)[j % pn][ha];
    return static_cast<Elem>(((i + j) % pm) * hn + h->mul(moved, hb));
  };
  std::vector<Elem> gens(h->generators().begin(), h->generators().end());
  if (pm > 1) gens.push_back(static_cast<Elem>(hn));
  FiniteQuotient q;
  q.group = std::make_shared<FiniteGroup>(FiniteGroup::from_law(hn * pm, law, std::move(gens)));
  q.level = m;
  q.h_order = hn;
  q.gamma_order = pm;
  return q;
}

}  // namespace conductor
