#include "conductor/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "conductor/error.hpp"

namespace conductor {

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      ps.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) ps.push_back(m);
  return ps;
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t r = m;
  for (auto q : prime_factors(m)) r = r / q * (q - 1);
  return r;
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::vector<mpz_class> compute_cyclotomic(std::uint64_t m) {
  // x^m - 1 divided by Phi_d for every proper divisor d
  std::vector<mpz_class> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& phi = cyclotomic_polynomial(d);
    const std::size_t dp = phi.size() - 1;
    std::vector<mpz_class> quot(poly.size() - dp, 0);
    for (std::size_t i = poly.size() - 1; i + 1 > dp; --i) {
      mpz_class c = poly[i];
      if (c == 0) continue;
      quot[i - dp] = c;
      for (std::size_t k = 0; k <= dp; ++k) poly[i - dp + k] -= c * phi[k];
      if (i == dp) break;
    }
    poly = std::move(quot);
  }
  return poly;
}

// Reduce an integer polynomial modulo the monic Phi_m; result has length phi(m).
std::vector<mpz_class> reduce_mod_phi(std::vector<mpz_class> poly, std::uint64_t m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    mpz_class c = poly[i];
    for (std::size_t k = 0; k <= deg; ++k) poly[i - deg + k] -= c * phi[k];
  }
  poly.resize(deg, 0);
  return poly;
}

struct Projection {
  std::vector<std::size_t> rows;              // selected coordinates at conductor m
  std::vector<std::vector<mpq_class>> inv;    // phi(d) x phi(d)
};

// Exact inverse of a square rational matrix (throws on singular input).
std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw InvalidInput("singular matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    mpq_class s = 1 / a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= s;
      inv[c][k] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

const Projection& projection(std::uint64_t m, std::uint64_t d) {
  static std::map<std::pair<std::uint64_t, std::uint64_t>, Projection> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex());
    auto it = cache.find({m, d});
    if (it != cache.end()) return it->second;
  }
  const std::size_t fm = euler_phi(m), fd = euler_phi(d);
  // column j = zeta_d^j embedded at conductor m
  std::vector<std::vector<mpq_class>> cols;
  for (std::size_t j = 0; j < fd; ++j) {
    std::vector<mpz_class> dense(m, 0);
    dense[(j * (m / d)) % m] = 1;
    auto red = reduce_mod_phi(std::move(dense), m);
    cols.emplace_back(red.begin(), red.end());
  }
  // greedy choice of independent rows
  Projection pr;
  std::vector<std::vector<mpq_class>> basis;  // echelon rows for independence test
  std::vector<std::size_t> pivcol;
  for (std::size_t r = 0; r < fm && pr.rows.size() < fd; ++r) {
    std::vector<mpq_class> row(fd);
    for (std::size_t j = 0; j < fd; ++j) row[j] = cols[j][r];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (row[pivcol[b]] == 0) continue;
      mpq_class f = row[pivcol[b]] / basis[b][pivcol[b]];
      for (std::size_t j = 0; j < fd; ++j) row[j] -= f * basis[b][j];
    }
    auto nz = std::find_if(row.begin(), row.end(), [](const mpq_class& v) { return v != 0; });
    if (nz == row.end()) continue;
    pivcol.push_back(static_cast<std::size_t>(nz - row.begin()));
    basis.push_back(std::move(row));
    pr.rows.push_back(r);
  }
  std::vector<std::vector<mpq_class>> sub(fd, std::vector<mpq_class>(fd));
  for (std::size_t i = 0; i < fd; ++i)
    for (std::size_t j = 0; j < fd; ++j) sub[i][j] = cols[j][pr.rows[i]];
  pr.inv = invert(std::move(sub));
  std::lock_guard<std::mutex> lk(cache_mutex());
  return cache.emplace(std::make_pair(m, d), std::move(pr)).first->second;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// A generator of the cyclic group {a in (Z/m)^x : a = 1 mod d}.
std::uint64_t kernel_generator(std::uint64_t m, std::uint64_t d) {
  std::vector<std::uint64_t> elems;
  for (std::uint64_t a = 1; a < m; a += d)
    if (std::gcd(a, m) == 1) elems.push_back(a);
  if (m == 1) return 0;
  for (auto a : elems) {
    std::size_t ord = 1;
    for (std::uint64_t x = a; x != 1; x = mulmod(x, a, m)) ++ord;
    if (ord == elems.size()) return a;
  }
  throw InvalidInput("non-cyclic Galois kernel");  // not reachable for d = m/q
}

std::uint64_t canonical_conductor(std::uint64_t m) { return m % 4 == 2 ? m / 2 : m; }

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t m) {
  static std::map<std::uint64_t, std::vector<mpz_class>> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<mpz_class> poly = m == 1 ? std::vector<mpz_class>{-1, 1} : compute_cyclotomic(m);
  std::lock_guard<std::mutex> lk(cache_mutex());
  return cache.emplace(m, std::move(poly)).first->second;
}

CycloNumber::CycloNumber(const mpq_class& v) : m_(1), num_{v.get_num()}, den_(v.get_den()) {}

CycloNumber::CycloNumber(std::uint64_t m, std::vector<mpz_class> num, mpz_class den, bool minimal)
    : m_(m), num_(std::move(num)), den_(std::move(den)) {
  normalize_content();
  if (!minimal) minimize();
}

void CycloNumber::normalize_content() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1 && g != 0) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
  bool all_zero = std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
  if (all_zero) {
    m_ = 1;
    num_.assign(1, 0);
    den_ = 1;
  }
}

std::vector<mpz_class> CycloNumber::dense_at(std::uint64_t M) const {
  std::vector<mpz_class> dense(M, 0);
  const std::uint64_t step = M / m_;
  for (std::size_t j = 0; j < num_.size(); ++j) dense[(j * step) % M] += num_[j];
  return dense;
}

CycloNumber CycloNumber::from_dense(std::uint64_t M, std::vector<mpz_class> dense, mpz_class den) {
  if (M % 4 == 2) {
    // zeta_{2u}^j = (-1)^j zeta_u^{j(u+1)/2}
    const std::uint64_t u = M / 2;
    std::vector<mpz_class> folded(u, 0);
    for (std::uint64_t j = 0; j < M; ++j) {
      if (dense[j] == 0) continue;
      const std::uint64_t e = mulmod(j % u, (u + 1) / 2, u);
      if (j % 2 == 0) folded[e] += dense[j];
      else folded[e] -= dense[j];
    }
    dense = std::move(folded);
    M = u;
  }
  return CycloNumber(M, reduce_mod_phi(std::move(dense), M), std::move(den));
}

CycloNumber CycloNumber::root_of_unity(std::uint64_t n, long long k) {
  if (n == 0) throw InvalidInput("root of unity of order 0");
  long long e = k % static_cast<long long>(n);
  if (e < 0) e += static_cast<long long>(n);
  std::vector<mpz_class> dense(n, 0);
  dense[static_cast<std::size_t>(e)] = 1;
  return from_dense(n, std::move(dense), 1);
}

CycloNumber CycloNumber::from_exponents(std::uint64_t M, const std::vector<mpq_class>& coeffs) {
  if (coeffs.size() != M) throw InvalidInput("exponent vector length must equal its order");
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> dense(M);
  for (std::size_t j = 0; j < M; ++j) dense[j] = coeffs[j].get_num() * (den / coeffs[j].get_den());
  return from_dense(M, std::move(dense), den);
}

CycloNumber CycloNumber::from_power_basis(std::uint64_t m, const std::vector<mpq_class>& coeffs) {
  if (coeffs.size() != euler_phi(m)) throw InvalidInput("power-basis vector must have length phi(m)");
  std::vector<mpq_class> dense(m, 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) dense[j] = coeffs[j];
  return from_exponents(m, dense);
}

std::vector<mpq_class> CycloNumber::coeffs() const {
  std::vector<mpq_class> r(num_.size());
  for (std::size_t j = 0; j < num_.size(); ++j) {
    r[j] = mpq_class(num_[j], den_);
    r[j].canonicalize();
  }
  return r;
}

std::vector<mpq_class> CycloNumber::coeffs_at(std::uint64_t M) const {
  if (M % m_ != 0 || M % 4 == 2) throw InvalidInput("target conductor must be a canonical multiple");
  auto red = reduce_mod_phi(dense_at(M), M);
  std::vector<mpq_class> r(red.size());
  for (std::size_t j = 0; j < red.size(); ++j) {
    r[j] = mpq_class(red[j], den_);
    r[j].canonicalize();
  }
  return r;
}

mpq_class CycloNumber::rational_value() const {
  if (m_ != 1) throw InvalidInput("value is not rational");
  mpq_class r(num_[0], den_);
  r.canonicalize();
  return r;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (m_ == o.m_ && den_ == o.den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += o.num_[j];
    normalize_content();
    minimize();
    return *this;
  }
  const std::uint64_t L = std::lcm(m_, o.m_);
  const mpz_class a = o.den_, b = den_;
  auto da = dense_at(L), db = o.dense_at(L);
  for (std::size_t j = 0; j < L; ++j) da[j] = da[j] * a + db[j] * b;
  *this = from_dense(L, std::move(da), den_ * o.den_);
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  if (o.m_ == 1 && m_ == 1) {
    num_[0] *= o.num_[0];
    den_ *= o.den_;
    normalize_content();
    return *this;
  }
  if (o.m_ == 1 || m_ == 1) {
    const CycloNumber& s = m_ == 1 ? *this : o;
    CycloNumber r = m_ == 1 ? o : *this;
    for (auto& c : r.num_) c *= s.num_[0];
    r.den_ *= s.den_;
    r.normalize_content();
    *this = std::move(r);
    return *this;
  }
  const std::uint64_t L = std::lcm(m_, o.m_);
  std::vector<mpz_class> a = m_ == L ? num_ : reduce_mod_phi(dense_at(L), L);
  std::vector<mpz_class> b = o.m_ == L ? o.num_ : reduce_mod_phi(o.dense_at(L), L);
  std::vector<mpz_class> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  *this = CycloNumber(L, reduce_mod_phi(std::move(prod), L), den_ * o.den_);
  return *this;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  if (m_ == 1) return CycloNumber(mpq_class(den_, num_[0]));
  // solve (multiplication by x) y = 1 in the power basis
  const std::size_t f = num_.size();
  std::vector<std::vector<mpq_class>> mat(f, std::vector<mpq_class>(f));
  for (std::size_t j = 0; j < f; ++j) {
    std::vector<mpz_class> shifted(f + j, 0);
    for (std::size_t i = 0; i < f; ++i) shifted[i + j] = num_[i];
    auto col = reduce_mod_phi(std::move(shifted), m_);
    for (std::size_t i = 0; i < f; ++i) mat[i][j] = mpq_class(col[i], den_);
  }
  auto inv = invert(std::move(mat));
  std::vector<mpq_class> y(f);
  for (std::size_t i = 0; i < f; ++i) y[i] = inv[i][0];
  return from_power_basis(m_, y);
}

std::strong_ordering operator<=>(const CycloNumber& a, const CycloNumber& b) {
  if (a.m_ != b.m_) return a.m_ <=> b.m_;
  for (std::size_t j = 0; j < a.num_.size(); ++j) {
    const int c = cmp(a.num_[j] * b.den_, b.num_[j] * a.den_);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CycloNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    mpq_class c(num_[j], den_);
    c.canonicalize();
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpq_class a = abs(c);
    if (j == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << m_;
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

CycloNumber galois_apply_unchecked(const CycloNumber& x, std::uint64_t k, std::uint64_t modulus) {
  if (x.m_ == 1) return x;
  (void)modulus;
  const std::uint64_t m = x.m_;
  const std::uint64_t km = k % m;
  std::vector<mpz_class> dense(m, 0);
  for (std::size_t j = 0; j < x.num_.size(); ++j)
    if (x.num_[j] != 0) dense[mulmod(j, km, m)] += x.num_[j];
  // conjugates keep the minimal conductor
  return CycloNumber(m, reduce_mod_phi(std::move(dense), m), x.den_, true);
}

CycloNumber galois_apply(const CycloNumber& x, long long k) {
  const auto m = static_cast<long long>(x.conductor());
  long long kk = k % m;
  if (kk < 0) kk += m;
  if (std::gcd(kk, m) != 1 && m != 1)
    throw InvalidInput("invalid automorphism: gcd(" + std::to_string(k) + ", " + std::to_string(m) + ") != 1");
  return galois_apply_unchecked(x, static_cast<std::uint64_t>(kk), x.conductor());
}

CycloNumber galois_apply(const CycloNumber& x, long long k, std::uint64_t modulus) {
  if (modulus % x.conductor() != 0) throw InvalidInput("conductor does not divide the Galois modulus");
  const auto M = static_cast<long long>(modulus);
  long long kk = k % M;
  if (kk < 0) kk += M;
  if (std::gcd(kk, M) != 1 && M != 1) throw InvalidInput("invalid automorphism: k not coprime to modulus");
  return galois_apply_unchecked(x, static_cast<std::uint64_t>(kk), modulus);
}

CycloNumber complex_conjugate(const CycloNumber& x) {
  return x.conductor() == 1 ? x : galois_apply_unchecked(x, x.conductor() - 1, x.conductor());
}

bool lies_in_cyclotomic_subfield(const CycloNumber& x, std::uint64_t d) {
  d = canonical_conductor(d);
  const std::uint64_t L = std::lcm(x.conductor(), d);
  if (L == d) return true;
  // H_d is generated by at most one element per prime of L/d; check all of them
  for (std::uint64_t a = 1; a < L; a += d) {
    if (std::gcd(a, L) != 1) continue;
    if (!(galois_apply_unchecked(x, a % x.conductor(), x.conductor()) == x)) return false;
  }
  return true;
}

void CycloNumber::minimize() {
  if (m_ == 1) return;
  bool rational = true;
  for (std::size_t j = 1; j < num_.size() && rational; ++j) rational = num_[j] == 0;
  if (rational) {
    num_.resize(1);
    m_ = 1;
    return;
  }
  for (bool shrunk = true; shrunk && m_ > 1;) {
    shrunk = false;
    for (auto q : prime_factors(m_)) {
      const std::uint64_t d = canonical_conductor(m_ / q);
      const std::uint64_t g = kernel_generator(m_, d);
      if (!(galois_apply_unchecked(*this, g, m_) == *this)) continue;
      // rewrite in Q(zeta_d)
      const Projection& pr = projection(m_, d);
      const std::size_t fd = pr.inv.size();
      std::vector<mpq_class> y(fd, 0);
      for (std::size_t i = 0; i < fd; ++i)
        for (std::size_t k = 0; k < fd; ++k) y[i] += pr.inv[i][k] * num_[pr.rows[k]];
      mpz_class den = 1;
      for (const auto& c : y) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      std::vector<mpz_class> num(fd);
      for (std::size_t i = 0; i < fd; ++i) num[i] = y[i].get_num() * (den / y[i].get_den());
      m_ = d;
      num_ = std::move(num);
      den_ *= den;
      normalize_content();
      shrunk = true;
      break;
    }
  }
}

MinimalConductor minimal_conductor(const CycloNumber& x) { return {x.conductor(), x}; }

}  // namespace conductor
