#include "conductor/catalog.hpp"

#include <map>
#include <regex>

#include "conductor/error.hpp"

namespace conductor {

namespace {

using Perm = std::vector<std::uint32_t>;

Perm cycle_perm(std::uint32_t n, std::uint32_t offset, std::uint32_t degree) {
  Perm p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  for (std::uint32_t i = 0; i < n; ++i) p[offset + i] = offset + (i + 1) % n;
  return p;
}

// x -> a x on Z/n
Perm affine_mult(std::uint32_t n, std::uint32_t a) {
  Perm p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * i) % n);
  return p;
}

Perm reflection(std::uint32_t n) {
  Perm p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = (n - i) % n;
  return p;
}

FiniteGroup quaternion8() {
  // index = 4*sign + unit, units 1,i,j,k
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int s = (a / 4 + b / 4 + sign[ua][ub]) % 2;
      t[a][b] = static_cast<Elem>(4 * s + unit[ua][ub]);
    }
  return FiniteGroup::from_table(t);
}

FiniteGroup sl23() {
  // action on the 8 nonzero vectors of F_3^2, vector (x,y) -> index 3x+y-1
  auto perm_of = [](int a, int b, int c, int d) {
    Perm p(8);
    for (int v = 1; v < 9; ++v) {
      const int x = v / 3, y = v % 3;
      const int nx = (a * x + b * y) % 3, ny = (c * x + d * y) % 3;
      p[v - 1] = static_cast<std::uint32_t>(3 * nx + ny - 1);
    }
    return p;
  };
  return FiniteGroup::from_permutations({perm_of(1, 1, 0, 1), perm_of(1, 0, 1, 1)}, 8);
}

CycloMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  CycloMatrix m;
  for (auto r : rows) {
    std::vector<CycloNumber> row;
    for (long x : r) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

CycloMatrix scalar(const CycloNumber& x) { return {{x}}; }

std::shared_ptr<const FiniteGroup> make(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

}  // namespace

std::shared_ptr<const FiniteGroup> catalog_group(const std::string& name) {
  std::smatch mt;
  static const std::regex cyc("C([0-9]+)"), prod("C([0-9]+)xC([0-9]+)");
  if (std::regex_match(name, mt, cyc)) {
    const auto n = static_cast<std::uint32_t>(std::stoul(mt[1]));
    if (n == 0 || n > 2000) throw InvalidInput("cyclic group order out of range: " + name);
    if (n == 1) return make(FiniteGroup::from_permutations({}, 1));
    return make(FiniteGroup::from_permutations({cycle_perm(n, 0, n)}, n));
  }
  if (std::regex_match(name, mt, prod)) {
    const auto a = static_cast<std::uint32_t>(std::stoul(mt[1])), b = static_cast<std::uint32_t>(std::stoul(mt[2]));
    if (a < 2 || b < 2 || a * b > 2000) throw InvalidInput("direct product out of range: " + name);
    return make(FiniteGroup::from_permutations({cycle_perm(a, 0, a + b), cycle_perm(b, a, a + b)}, a + b));
  }
  if (name == "S3") return make(FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}, 3));
  if (name == "D4") return make(FiniteGroup::from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}}, 4));
  if (name == "Q8") return make(quaternion8());
  if (name == "A4") return make(FiniteGroup::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4));
  if (name == "D5") return make(FiniteGroup::from_permutations({cycle_perm(5, 0, 5), reflection(5)}, 5));
  if (name == "D7") return make(FiniteGroup::from_permutations({cycle_perm(7, 0, 7), reflection(7)}, 7));
  if (name == "C7:C3") return make(FiniteGroup::from_permutations({cycle_perm(7, 0, 7), affine_mult(7, 2)}, 7));
  if (name == "C19:C9") return make(FiniteGroup::from_permutations({cycle_perm(19, 0, 19), affine_mult(19, 4)}, 19));
  if (name == "F20") return make(FiniteGroup::from_permutations({cycle_perm(5, 0, 5), affine_mult(5, 2)}, 5));
  if (name == "S4") return make(FiniteGroup::from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}, 4));
  if (name == "A5") return make(FiniteGroup::from_permutations({{1, 2, 0, 3, 4}, {0, 1, 3, 4, 2}}, 5));
  if (name == "SL23") return make(sl23());
  if (name == "C3xS3")
    return make(FiniteGroup::from_permutations({{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 3, 5}, {0, 1, 2, 4, 5, 3}}, 6));
  throw InvalidInput("unknown catalog group: " + name);
}

std::vector<std::string> catalog_group_names() {
  return {"C1", "C2",  "C3",  "C4", "C5", "C6",    "C7",     "C8",  "C9", "C2xC2", "C3xC3", "S3",   "D4",
          "Q8", "A4",  "D5",  "D7", "F20", "C7:C3", "C19:C9", "S4", "A5", "SL23",  "C3xS3"};
}

std::vector<Elem> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& target, const std::vector<Elem>& images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size()) throw InvalidInput("need one image per generator");
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> img(g.order(), kUnset);
  img[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem x = queue[qi];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = g.mul(x, gens[k]);
      const Elem iy = target.mul(img[x], images[k]);
      if (img[y] == kUnset) {
        img[y] = iy;
        queue.push_back(y);
      } else if (img[y] != iy) {
        throw InvalidInput("generator images do not define a homomorphism");
      }
    }
  }
  return img;
}

CycloMatrix matrix_identity(std::size_t n) {
  CycloMatrix m(n, std::vector<CycloNumber>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

CycloMatrix matrix_mul(const CycloMatrix& a, const CycloMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  CycloMatrix c(n, std::vector<CycloNumber>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

CycloNumber matrix_trace(const CycloMatrix& a) {
  CycloNumber s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i][i];
  return s;
}

CycloNumber matrix_det(CycloMatrix a) {
  const std::size_t n = a.size();
  CycloNumber det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return CycloNumber();
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const CycloNumber inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const CycloNumber f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<CycloMatrix> representation_images(const FiniteGroup& g, const Representation& rep) {
  const auto& gens = g.generators();
  if (rep.gen_images.size() != gens.size()) throw InvalidInput("need one matrix per generator");
  std::vector<CycloMatrix> img(g.order());
  std::vector<bool> set(g.order(), false);
  img[0] = matrix_identity(rep.dim);
  set[0] = true;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem x = queue[qi];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = g.mul(x, gens[k]);
      CycloMatrix my = matrix_mul(img[x], rep.gen_images[k]);
      if (!set[y]) {
        img[y] = std::move(my);
        set[y] = true;
        queue.push_back(y);
      } else if (img[y] != my) {
        throw InvalidInput("matrices do not satisfy the group relations");
      }
    }
  }
  return img;
}

std::vector<Representation> catalog_representations(const std::string& name, const CharacterTable& table) {
  const FiniteGroup& g = *table.group;
  std::vector<Representation> reps;
  if (g.is_abelian()) {
    for (std::size_t row = 0; row < table.size(); ++row) {
      Representation r;
      for (Elem s : g.generators()) r.gen_images.push_back(scalar(table.value(row, s)));
      reps.push_back(std::move(r));
    }
  } else if (name == "S3") {
    // generators (0 1), (0 1 2)
    reps.push_back({1, {int_matrix({{1}}), int_matrix({{1}})}, 0});
    reps.push_back({1, {int_matrix({{-1}}), int_matrix({{1}})}, 0});
    reps.push_back({2, {int_matrix({{0, 1}, {1, 0}}), int_matrix({{-1, -1}, {1, 0}})}, 0});
  } else if (name == "D4") {
    // generators rotation, reflection
    for (long a : {1L, -1L})
      for (long b : {1L, -1L}) reps.push_back({1, {int_matrix({{a}}), int_matrix({{b}})}, 0});
    reps.push_back({2, {int_matrix({{0, -1}, {1, 0}}), int_matrix({{1, 0}, {0, -1}})}, 0});
  } else if (name == "A4") {
    // generators (0 1 2), (0 1)(2 3)
    for (int k = 0; k < 3; ++k)
      reps.push_back({1, {scalar(CycloNumber::root_of_unity(3, k)), int_matrix({{1}})}, 0});
    reps.push_back({3,
                    {int_matrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), int_matrix({{0, 1, 0}, {1, 0, 0}, {-1, -1, -1}})},
                    0});
  } else {
    throw Unsupported("no representation catalog for group " + name);
  }
  std::vector<bool> used(table.size(), false);
  for (auto& r : reps) {
    r.dim = r.gen_images.empty() ? 1 : r.gen_images[0].size();
    const auto img = representation_images(g, r);
    std::vector<CycloNumber> chi(table.classes.count());
    const auto cls = table.classes.reps();
    for (std::size_t c = 0; c < cls.size(); ++c) chi[c] = matrix_trace(img[cls[c]]);
    r.character = table.find_row(chi);
    if (r.character == table.size() || used[r.character])
      throw InvalidInput("catalog representation does not match an irreducible character of " + name);
    used[r.character] = true;
  }
  if (reps.size() != table.size()) throw InvalidInput("representation catalog incomplete for " + name);
  return reps;
}

SemidirectData catalog_semidirect(const std::string& name) {
  auto cyclic_mult = [](std::uint32_t n, std::uint32_t a, unsigned p) {
    auto h = catalog_group("C" + std::to_string(n));
    // elements are powers of the generator, so x -> a x sends index 1 to index a
    auto images = extend_homomorphism(*h, *h, {static_cast<Elem>(a % n)});
    return SemidirectData(h, GroupAutomorphism(h, images), p);
  };
  auto trivial = [](const std::string& h_name, unsigned p) {
    auto h = catalog_group(h_name);
    return SemidirectData(h, GroupAutomorphism::identity(h), p);
  };
  if (name == "Gamma") return trivial("C1", 3);
  if (name == "C3xZ3") return trivial("C3", 3);
  if (name == "S3xZ3") return trivial("S3", 3);
  if (name == "C7:Z3") return cyclic_mult(7, 2, 3);
  if (name == "C9:Z3") return cyclic_mult(9, 4, 3);
  if (name == "C19:Z3") return cyclic_mult(19, 4, 3);
  if (name == "C11:Z5") return cyclic_mult(11, 3, 5);
  if (name == "C3xC3:Z3") {
    auto h = catalog_group("C3xC3");
    const auto& gens = h->generators();
    auto images = extend_homomorphism(*h, *h, {h->mul(gens[0], gens[1]), gens[1]});
    return SemidirectData(h, GroupAutomorphism(h, images), 3);
  }
  throw InvalidInput("unknown semidirect catalog entry: " + name);
}

std::vector<std::string> catalog_semidirect_names() {
  return {"Gamma", "C3xZ3", "S3xZ3", "C7:Z3", "C9:Z3", "C3xC3:Z3", "C19:Z3", "C11:Z5"};
}

}  // namespace conductor
