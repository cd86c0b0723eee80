#include "galg/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace galg {

using Perm = std::vector<int>;
using CMat = Mat<CycloNum>;

class GroupBuilder {
 public:
  // Closes the permutation generators under composition ("apply a, then b")
  // and extends each representation from its generator images.
  static std::shared_ptr<FiniteGroup> from_perms(const std::string& name, const std::vector<Perm>& gens,
                                                 const std::vector<std::vector<CMat>>& irrep_gens) {
    auto G = std::make_shared<FiniteGroup>();
    G->name_ = name;
    const std::size_t pts = gens.front().size();
    Perm id(pts);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    std::map<Perm, int> label{{id, 0}};
    std::vector<std::pair<int, int>> parent{{-1, -1}};
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Perm h(pts);
        for (std::size_t x = 0; x < pts; ++x) h[x] = gens[s][elems[k][x]];
        if (label.emplace(h, static_cast<int>(elems.size())).second) {
          elems.push_back(h);
          parent.emplace_back(static_cast<int>(k), static_cast<int>(s));
        }
      }
    }
    const int n = static_cast<int>(elems.size());
    G->order_ = n;
    G->table_.assign(n * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Perm h(pts);
        for (std::size_t x = 0; x < pts; ++x) h[x] = elems[b][elems[a][x]];
        G->table_[a * n + b] = label.at(h);
      }
    for (const auto& ig : irrep_gens) {
      IrreducibleRep rep;
      rep.degree = static_cast<int>(ig.front().rows);
      rep.matrices.resize(n);
      rep.matrices[0] = CMat::identity(rep.degree);
      for (int k = 1; k < n; ++k) rep.matrices[k] = rep.matrices[parent[k].first] * ig[parent[k].second];
      G->irreps_.push_back(std::move(rep));
    }
    finish(*G);
    return G;
  }

  static std::shared_ptr<FiniteGroup> times_cyclic(const FiniteGroup& H, int m, const std::string& name) {
    if (m < 1) throw std::invalid_argument("cyclic factor order must be positive");
    auto G = std::make_shared<FiniteGroup>();
    G->name_ = name;
    const int h = H.order();
    const int n = h * m;
    G->order_ = n;
    G->table_.assign(n * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int g = H.mul(a % h, b % h);
        int c = (a / h + b / h) % m;
        G->table_[a * n + b] = g + h * c;
      }
    for (const auto& rep : H.irreps()) {
      for (int t = 0; t < m; ++t) {
        IrreducibleRep r;
        r.degree = rep.degree;
        r.matrices.resize(n);
        for (int a = 0; a < n; ++a) {
          CycloNum z = CycloNum::zeta(m, static_cast<long>(t) * (a / h));
          r.matrices[a] = z * rep.matrices[a % h];
        }
        G->irreps_.push_back(std::move(r));
      }
    }
    finish(*G);
    return G;
  }

 private:
  static void finish(FiniteGroup& G) {
    const int n = G.order_;
    for (int a = 0; a < n; ++a)
      if (G.mul(0, a) != a || G.mul(a, 0) != a) throw InternalError("group table: bad identity");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) throw InternalError("group table: not associative");
    G.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (G.mul(a, b) == 0) G.inverse_[a] = b;
    for (int a = 0; a < n; ++a)
      if (G.inverse_[a] < 0 || G.mul(G.inverse_[a], a) != 0) throw InternalError("group table: missing inverse");
    G.abelian_ = true;
    for (int a = 0; a < n && G.abelian_; ++a)
      for (int b = 0; b < n; ++b)
        if (G.mul(a, b) != G.mul(b, a)) {
          G.abelian_ = false;
          break;
        }
    G.elem_order_.assign(n, 1);
    G.exponent_ = 1;
    for (int a = 0; a < n; ++a) {
      int k = 1, x = a;
      while (x != 0) {
        x = G.mul(x, a);
        ++k;
      }
      G.elem_order_[a] = k;
      G.exponent_ = lcm_long(G.exponent_, k);
    }
    if (n % G.exponent_ != 0) throw InternalError("exponent does not divide the order");

    G.class_of_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      if (G.class_of_[a] >= 0) continue;
      std::vector<int> cls;
      for (int g = 0; g < n; ++g) {
        int c = G.mul(G.mul(g, a), G.inverse_[g]);
        if (G.class_of_[c] < 0) {
          G.class_of_[c] = static_cast<int>(G.classes_.size());
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      G.classes_.push_back(std::move(cls));
    }
    G.inverse_class_.resize(G.classes_.size());
    for (std::size_t c = 0; c < G.classes_.size(); ++c)
      G.inverse_class_[c] = G.class_of_[G.inverse_[G.classes_[c].front()]];

    // Representations: homomorphism check, characters, dimension count.
    int dimsum = 0;
    for (auto& rep : G.irreps_) {
      if (static_cast<int>(rep.matrices.size()) != n) throw InternalError("representation size mismatch");
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (rep.matrices[a] * rep.matrices[b] != rep.matrices[G.mul(a, b)])
            throw InternalError("representation is not a homomorphism on " + G.name_);
      rep.character.resize(n);
      for (int a = 0; a < n; ++a) {
        CycloNum t;
        for (int i = 0; i < rep.degree; ++i) t += rep.matrices[a](i, i);
        rep.character[a] = t;
      }
      dimsum += rep.degree * rep.degree;
    }
    if (dimsum != n) throw InternalError("irreducible degrees do not account for the group order");
    const int k = static_cast<int>(G.irreps_.size());
    if (k != static_cast<int>(G.classes_.size())) throw InternalError("irrep count differs from class count");
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) {
        CycloNum s;
        for (int g = 0; g < n; ++g) s += G.irreps_[x].character[g] * G.irreps_[y].character[G.inverse_[g]];
        if (s != CycloNum(x == y ? n : 0)) throw InternalError("character orthogonality fails on " + G.name_);
      }

    auto find_char = [&](const std::vector<CycloNum>& ch) {
      for (int y = 0; y < k; ++y)
        if (G.irreps_[y].character == ch) return y;
      for (int y = 0; y < k; ++y) {
        bool eq = true;
        for (int g = 0; g < n && eq; ++g) eq = (G.irreps_[y].character[g] == ch[g]);
        if (eq) return y;
      }
      throw InternalError("conjugate character not found in catalog");
    };
    G.dual_.resize(k);
    for (int x = 0; x < k; ++x) {
      std::vector<CycloNum> ch(n);
      for (int g = 0; g < n; ++g) ch[g] = G.irreps_[x].character[G.inverse_[g]];
      G.dual_[x] = find_char(ch);
    }
    const long e = G.exponent_;
    for (long a = 1; a <= std::max(e, 1L); ++a) {
      if (gcd_long(a, e) != 1) continue;
      if (e > 1 && a == e) continue;
      G.residues_.push_back(a);
      std::vector<int> perm(k);
      for (int x = 0; x < k; ++x) {
        std::vector<CycloNum> ch(n);
        for (int g = 0; g < n; ++g) ch[g] = galois_apply(a, G.irreps_[x].character[g]);
        perm[x] = find_char(ch);
      }
      G.galois_[a] = std::move(perm);
    }
  }
};

int FiniteGroup::galois_index(long a, int chi) const {
  long r = exponent_ == 1 ? 1 : ((a % exponent_) + exponent_) % exponent_;
  auto it = galois_.find(r);
  if (it == galois_.end()) throw std::invalid_argument("galois_index: residue not coprime to exponent");
  return it->second[chi];
}

namespace {

CMat scalar(const CycloNum& z) {
  CMat m(1, 1);
  m(0, 0) = z;
  return m;
}

CMat from_ints(std::size_t r, std::size_t c, std::initializer_list<long> v) {
  CMat m(r, c);
  std::size_t i = 0;
  for (long x : v) m.a[i++] = CycloNum(x);
  return m;
}

// Action on the sum-zero sublattice with basis e_i - e_{k-1}, row convention.
CMat standard_rep(const Perm& p) {
  const std::size_t k = p.size();
  CMat m(k - 1, k - 1);
  const int last = p[k - 1];
  for (std::size_t i = 0; i + 1 < k; ++i) {
    int a = p[i];
    if (a != static_cast<int>(k - 1)) m(i, a) += CycloNum(1);
    if (last != static_cast<int>(k - 1)) m(i, last) -= CycloNum(1);
  }
  return m;
}

int perm_sign(const Perm& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Induced permutation of the three pairings {01|23, 02|13, 03|12}.
Perm pairing_action(const Perm& p) {
  auto pairing_of = [](int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == 0) return b - 1;
    return 5 - a - b;  // partner of 0 is 6 - a - b
  };
  Perm out(3);
  const int firsts[3][2] = {{0, 1}, {0, 2}, {0, 3}};
  for (int i = 0; i < 3; ++i) out[i] = pairing_of(p[firsts[i][0]], p[firsts[i][1]]);
  return out;
}

std::shared_ptr<FiniteGroup> cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  Perm r(n);
  for (int i = 0; i < n; ++i) r[i] = (i + 1) % n;
  std::vector<std::vector<CMat>> reps;
  for (int k = 0; k < n; ++k) reps.push_back({scalar(CycloNum::zeta(n, k))});
  return GroupBuilder::from_perms("C" + std::to_string(n), {r}, reps);
}

std::shared_ptr<FiniteGroup> dihedral(int n, const std::string& name) {
  if (n < 3) throw std::invalid_argument("dihedral family requires n >= 3");
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  std::vector<std::vector<CMat>> reps;
  reps.push_back({scalar(1), scalar(1)});
  if (n % 2 == 0) {
    reps.push_back({scalar(1), scalar(-1)});
    reps.push_back({scalar(-1), scalar(1)});
    reps.push_back({scalar(-1), scalar(-1)});
  } else {
    reps.push_back({scalar(1), scalar(-1)});
  }
  for (int k = 1; 2 * k < n; ++k) {
    CycloNum t = CycloNum::zeta(n, k) + CycloNum::zeta(n, -k);
    CMat rr(2, 2);
    rr(0, 1) = CycloNum(-1);
    rr(1, 0) = CycloNum(1);
    rr(1, 1) = t;
    reps.push_back({rr, from_ints(2, 2, {0, 1, 1, 0})});
  }
  return GroupBuilder::from_perms(name, {r, s}, reps);
}

std::shared_ptr<FiniteGroup> symmetric4() {
  std::vector<Perm> gens{{1, 2, 3, 0}, {1, 0, 2, 3}};
  std::vector<std::vector<CMat>> reps(5);
  for (const auto& g : gens) {
    int sg = perm_sign(g);
    reps[0].push_back(scalar(1));
    reps[1].push_back(scalar(sg));
    reps[2].push_back(standard_rep(pairing_action(g)));
    reps[3].push_back(standard_rep(g));
    reps[4].push_back(CycloNum(sg) * standard_rep(g));
  }
  return GroupBuilder::from_perms("S4", gens, reps);
}

std::shared_ptr<FiniteGroup> alternating4() {
  std::vector<Perm> gens{{1, 2, 0, 3}, {1, 0, 3, 2}};
  std::vector<std::vector<CMat>> reps(4);
  reps[0] = {scalar(1), scalar(1)};
  reps[1] = {scalar(CycloNum::zeta(3, 1)), scalar(1)};
  reps[2] = {scalar(CycloNum::zeta(3, 2)), scalar(1)};
  reps[3] = {standard_rep(gens[0]), standard_rep(gens[1])};
  return GroupBuilder::from_perms("A4", gens, reps);
}

// Quaternion units as right multiplications on {1,i,j,k,-1,-i,-j,-k}.
std::shared_ptr<FiniteGroup> quaternion8() {
  // unit u in 0..3 is 1,i,j,k; product table with signs.
  const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto right_mult = [&](int u) {
    Perm p(8);
    for (int x = 0; x < 8; ++x) {
      int xb = x % 4, xs = x < 4 ? 1 : -1;
      int zb = prod[xb][u], zs = xs * sgn[xb][u];
      p[x] = zb + (zs < 0 ? 4 : 0);
    }
    return p;
  };
  std::vector<Perm> gens{right_mult(1), right_mult(2)};
  CycloNum z = CycloNum::zeta(4, 1);
  CMat ri(2, 2), rj = from_ints(2, 2, {0, 1, -1, 0});
  ri(0, 0) = z;
  ri(1, 1) = -z;
  std::vector<std::vector<CMat>> reps{{scalar(1), scalar(1)},
                                      {scalar(-1), scalar(1)},
                                      {scalar(1), scalar(-1)},
                                      {scalar(-1), scalar(-1)},
                                      {ri, rj}};
  return GroupBuilder::from_perms("Q8", gens, reps);
}

std::shared_ptr<FiniteGroup> base_group(const std::string& tok) {
  if (tok == "S3") return dihedral(3, "S3");
  if (tok == "S4") return symmetric4();
  if (tok == "A4") return alternating4();
  if (tok == "Q8") return quaternion8();
  auto number = [&](std::size_t from) {
    std::string digits = tok.substr(from);
    if (digits.empty() || digits.size() > 4 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("unknown group: " + tok);
    return std::stoi(digits);
  };
  if (tok.size() > 1 && tok[0] == 'C') return cyclic(number(1));
  if (tok.size() > 1 && tok[0] == 'D') return dihedral(number(1), tok);
  throw std::invalid_argument("unknown group: " + tok);
}

std::vector<std::string> split_x(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == 'x') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

GroupPtr build(const std::string& name) {
  auto parts = split_x(name);
  std::shared_ptr<FiniteGroup> g = base_group(parts[0]);
  std::string acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p.size() < 2 || p[0] != 'C') throw std::invalid_argument("only cyclic factors may follow 'x': " + name);
    auto c = base_group(p);
    acc += "x" + p;
    g = GroupBuilder::times_cyclic(*g, c->order(), acc);
  }
  if (g->order() > 96) throw std::invalid_argument("group too large for the catalog: " + name);
  return g;
}

}  // namespace

GroupPtr group_from_catalog(const std::string& name, const std::vector<int>& params) {
  std::string full = name;
  if (!params.empty()) {
    if (name == "C" && params.size() == 1) full = "C" + std::to_string(params[0]);
    else if (name == "C" && params.size() == 2) full = "C" + std::to_string(params[0]) + "xC" + std::to_string(params[1]);
    else if (name == "D" && params.size() == 1) full = "D" + std::to_string(params[0]);
    else throw std::invalid_argument("bad catalog parameters for " + name);
  }
  for (const auto& p : params)
    if (p < 1) throw std::invalid_argument("catalog parameters must be positive");
  static std::mutex mu;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(full);
  if (it != cache.end()) return it->second;
  GroupPtr g = build(full);
  cache.emplace(full, g);
  return g;
}

const std::vector<IrreducibleRep>& irreps(const FiniteGroup& g) { return g.irreps(); }

IrreducibleRep contragredient(const FiniteGroup& g, const IrreducibleRep& rep) {
  IrreducibleRep out;
  out.degree = rep.degree;
  out.matrices.resize(g.order());
  out.character.resize(g.order());
  for (int a = 0; a < g.order(); ++a) {
    out.matrices[a] = rep.matrices[g.inv(a)].transpose();
    out.character[a] = rep.character[g.inv(a)];
  }
  return out;
}

}  // namespace galg
