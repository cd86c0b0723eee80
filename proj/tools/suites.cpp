#include "suites.hpp"

#include <functional>
#include <stdexcept>

#include "galg/cyclo.hpp"
#include "galg/sampling.hpp"

namespace galg::suites {

using io::json;

namespace {

class Recorder {
 public:
  explicit Recorder(CheckResult& r) : r_(r) {}

  // Runs one case under `key`; exceptions count as failures.
  void check(const std::string& key, const std::function<bool()>& body, const std::function<json()>& instance) {
    ++r_.cases;
    auto& d = r_.details[key];
    if (d.is_null()) d = {{"cases", 0}, {"failures", 0}};
    d["cases"] = d["cases"].get<int>() + 1;
    bool ok = false;
    std::string error;
    try {
      ok = body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (ok) return;
    ++r_.failures;
    d["failures"] = d["failures"].get<int>() + 1;
    if (r_.witness.is_null()) {
      r_.witness = instance();
      r_.witness["check"] = key;
      if (!error.empty()) r_.witness["error"] = error;
    }
  }

 private:
  CheckResult& r_;
};

GroupPtr pick_group(Rng& rng, const std::vector<std::string>& names) {
  return group_from_catalog(names[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(names.size()) - 1))]);
}

long pick(Rng& rng, long lo, long hi) { return rng.uniform(lo, hi); }

// Element killing some but not all components: 1 - g for a random g != 1, or the norm element.
GroupAlgebraElement killer(const GroupPtr& g, Rng& rng) {
  if (g->order() == 1) return GroupAlgebraElement(g);
  if (rng.uniform(0, 1) == 0) {
    GroupAlgebraElement x(g);
    for (int h = 0; h < g->order(); ++h) x[h] = 1;
    return x;
  }
  return GroupAlgebraElement::one(g) - GroupAlgebraElement::basis(g, static_cast<int>(rng.uniform(1, g->order() - 1)));
}

GroupAlgebraMatrix random_basis(const GroupPtr& g, std::size_t n, Rng& rng) {
  if (n == 1) {
    GroupAlgebraMatrix m(g, 1, 1);
    m(0, 0) = GroupAlgebraElement::basis(g, static_cast<int>(rng.uniform(0, g->order() - 1)));
    return m;
  }
  return random_unimodular(g, n, rng, 2);
}

CentralElement random_central(const GroupPtr& g, Rng& rng, long height) {
  std::vector<Rational> c;
  for (int i = 0; i < g->num_classes(); ++i) c.emplace_back(rng.uniform(-height, height));
  return CentralElement::from_class_coords(g, c);
}

json instance(const GroupPtr& g, std::uint64_t seed, std::size_t index) {
  return {{"group", g->name()}, {"seed", seed}, {"case", index}};
}

GroupAlgebraMatrix scalar_matrix(const GroupAlgebraElement& x, std::size_t n) {
  return scale(x, GroupAlgebraMatrix::identity(x.group(), n));
}

// ---------------------------------------------------------------- criteria

void oracle_equivalence(Recorder& rec, std::uint64_t seed, const Budget& budget) {
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(seed, i);
    auto g = group_from_catalog("C", {static_cast<int>(pick(rng, 1, 8))});
    auto cols = static_cast<std::size_t>(pick(rng, 1, 4));
    auto rows = static_cast<std::size_t>(pick(rng, static_cast<long>(cols), 4));
    int a = static_cast<int>(pick(rng, 0, 2));
    auto m = random_matrix(g, rows, cols, rng, 5);
    rec.check(
        "fit_vs_classical",
        [&] {
          auto fit = fit_matrix(m, a, budget);
          return fit.exact && fit.lattice() == fit_classical_oracle(m, a).lattice();
        },
        [&] {
          auto j = instance(g, seed, i);
          j["matrix"] = io::to_json(m);
          j["a"] = a;
          return j;
        });
  }
}

Mat<CycloNum> character_matrix(const GroupAlgebraMatrix& m, int chi) {
  const auto& g = *m.group();
  Mat<CycloNum> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (int h = 0; h < g.order(); ++h)
        if (!is_zero(m(i, j)[h])) out(i, j) += CycloNum(m(i, j)[h]) * g.character(chi, h);
  return out;
}

void nrd_properties(Recorder& rec, std::uint64_t seed) {
  const std::vector<std::string> groups{"C6", "S3", "D4", "Q8", "A4"};
  for (std::size_t i = 0; i < 500; ++i) {
    Rng rng(seed, i);
    auto g = pick_group(rng, groups);
    auto n = static_cast<std::size_t>(pick(rng, 1, 3));
    auto a = random_matrix(g, n, n, rng, 2, 3), b = random_matrix(g, n, n, rng, 2, 3);
    rec.check(
        "multiplicative", [&] { return nrd(a * b) == nrd(a) * nrd(b); },
        [&] {
          auto j = instance(g, seed, i);
          j["a"] = io::to_json(a);
          j["b"] = io::to_json(b);
          return j;
        });
  }
  const std::vector<std::string> abelian{"C4", "C6", "C2xC2", "C2xC4", "C5"};
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(seed, 1000 + i);
    auto g = pick_group(rng, abelian);
    auto n = static_cast<std::size_t>(pick(rng, 1, 3));
    auto m = random_matrix(g, n, n, rng, 3);
    rec.check(
        "abelian_character_det",
        [&] {
          auto v = nrd(m);
          for (int chi = 0; chi < g->num_irreps(); ++chi)
            if (v[chi] != det(character_matrix(m, chi))) return false;
          return true;
        },
        [&] {
          auto j = instance(g, seed, 1000 + i);
          j["matrix"] = io::to_json(m);
          return j;
        });
  }
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(seed, 2000 + i);
    auto g = pick_group(rng, groups);
    auto rows = static_cast<std::size_t>(pick(rng, 1, 3));
    auto m = random_matrix(g, rows, rows, rng, 2, 3);
    rec.check(
        "hash_transpose", [&] { return nrd(hash_transpose(m)) == hash_involution(nrd(m)); },
        [&] {
          auto j = instance(g, seed, 2000 + i);
          j["matrix"] = io::to_json(m);
          return j;
        });
  }
}

void adjoint_identity(Recorder& rec, std::uint64_t seed) {
  const std::vector<std::string> groups{"C6", "S3", "D4", "Q8", "A4", "C2xC2"};
  int singular = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(seed, i);
    auto g = pick_group(rng, groups);
    auto n = static_cast<std::size_t>(pick(rng, 1, 3));
    auto m = random_matrix(g, n, n, rng, 2, 3);
    if (rng.uniform(0, 2) == 0) {
      auto k = killer(g, rng);
      for (std::size_t j = 0; j < n; ++j) m(0, j) = k * m(0, j);
    }
    auto v = nrd(m);
    if (!v.invertible()) ++singular;
    rec.check(
        "adjoint",
        [&] {
          auto adj = adjoint_star(m);
          auto p = scalar_matrix(v.to_group_algebra(), n);
          if (!(m * adj == p) || !(adj * m == p)) return false;
          for (int chi = 0; chi < g->num_irreps(); ++chi)
            if (block_matrix(adj, chi).is_zero() != v[chi].is_zero()) return false;
          return scale(GroupAlgebraElement::basis(g, 0, Rational(g->order())), adj).is_integral();
        },
        [&] {
          auto j = instance(g, seed, i);
          j["matrix"] = io::to_json(m);
          return j;
        });
  }
  rec.check("singular_components_exercised", [&] { return singular > 0; }, [] { return json::object(); });
}

const std::vector<std::string> kSmallGroups{"C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "A4", "D5", "S3xC2"};

void pairing_oracle(Recorder& rec, std::uint64_t seed) {
  for (std::size_t i = 0; i < 300; ++i) {
    Rng rng(seed, i);
    auto g = pick_group(rng, kSmallGroups);
    const bool big = g->name() == "A4";
    int r = static_cast<int>(pick(rng, 1, big ? 2 : 3));
    int k = std::min(r + static_cast<int>(pick(rng, 0, 1)), 3);
    auto w = random_matrix(g, r, k, rng, 2, 2), h = random_matrix(g, r, k, rng, 2, 2);
    rec.check(
        "pair_vs_gram",
        [&] {
          auto wr = matrix_rows(w), hr = matrix_rows(h);
          GroupAlgebraMatrix gram(g, r, r);
          for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) gram(a, b) = hom_apply(hr[a], wr[b]);
          return to_central(pair(wedge_homs(g, k, hr), wedge_elements(g, k, wr))) == nrd(gram.transpose());
        },
        [&] {
          auto j = instance(g, seed, i);
          j["elements"] = io::to_json(w);
          j["homs"] = io::to_json(h);
          return j;
        });
  }
  for (std::size_t i = 0; i < 60; ++i) {
    Rng rng(seed, 1000 + i);
    auto g = pick_group(rng, kSmallGroups);
    auto k = static_cast<std::size_t>(pick(rng, 1, 2));
    auto b = random_matrix(g, k, k, rng, 2, 2), phi = random_matrix(g, k, k, rng, 2, 2);
    rec.check(
        "endomorphism_scaling",
        [&] { return wedge_elements(g, k, matrix_rows(b * phi)) == scale(nrd(phi), wedge_elements(g, k, matrix_rows(b))); },
        [&] {
          auto j = instance(g, seed, 1000 + i);
          j["basis"] = io::to_json(b);
          j["phi"] = io::to_json(phi);
          return j;
        });
    auto basis = random_basis(g, k, rng);
    rec.check(
        "dual_normalization",
        [&] {
          auto v = pair(wedge_homs(g, k, dual_basis_homs(basis)), wedge_elements(g, k, matrix_rows(basis)));
          return to_central(v) == CentralElement::one(g);
        },
        [&] {
          auto j = instance(g, seed, 1000 + i);
          j["basis"] = io::to_json(basis);
          return j;
        });
  }
}

void epsilon_suite(Recorder& rec, std::uint64_t seed) {
  const std::vector<std::string> groups{"C6", "S3", "Q8"};
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(seed, i);
    auto g = pick_group(rng, groups);
    int dp = static_cast<int>(pick(rng, 2, 3)), d = static_cast<int>(pick(rng, 1, dp - 1));
    auto m = random_matrix(g, dp, d, rng, 2, 2), mp = random_matrix(g, dp, dp - d, rng, 2, 2);
    rec.check(
        "value_equals_nrd",
        [&] {
          std::vector<ModuleVector> homs;
          for (int c = 0; c < dp - d; ++c) {
            ModuleVector f;
            for (int l = 0; l < dp; ++l) f.push_back(mp(l, c));
            homs.push_back(f);
          }
          return to_central(pair(wedge_homs(g, dp, homs), epsilon_M(m))) == nrd(hconcat(mp, m));
        },
        [&] {
          auto j = instance(g, seed, i);
          j["M"] = io::to_json(m);
          j["M_prime"] = io::to_json(mp);
          return j;
        });
  }
  int vanishing = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(seed, 1000 + i);
    auto g = pick_group(rng, groups);
    int dp = static_cast<int>(pick(rng, 2, 3)), d = static_cast<int>(pick(rng, 1, dp - 1));
    auto m = random_matrix(g, dp, d, rng, 2, 2);
    if (rng.uniform(0, 1) == 0) {
      auto k = killer(g, rng);
      for (int l = 0; l < dp; ++l) m(l, 0) = m(l, 0) * k;
    }
    rec.check(
        "vanishing_criterion",
        [&] {
          auto eps = epsilon_M(m);
          if (!in_kernel_wedge(eps, m)) return false;
          for (int chi = 0; chi < g->num_irreps(); ++chi) {
            bool full = split_kernel_dim(m, chi) == (dp - d) * g->degree(chi);
            if (eps.is_zero_at(chi) == full) return false;
            if (!full) ++vanishing;
          }
          return true;
        },
        [&] {
          auto j = instance(g, seed, 1000 + i);
          j["M"] = io::to_json(m);
          return j;
        });
  }
  rec.check("vanishing_components_exercised", [&] { return vanishing > 0; }, [] { return json::object(); });
}

void theta_splitting(Recorder& rec, std::uint64_t seed) {
  const std::vector<std::string> groups{"C6", "S3", "D4", "Q8", "A4"};
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(seed, i);
    auto g = pick_group(rng, groups);
    int d = static_cast<int>(pick(rng, 1, g->name() == "A4" ? 2 : 3));
    int r = static_cast<int>(pick(rng, 0, d));
    std::vector<CentralElement> c;
    for (std::size_t s = 0; s < binomial(d, r); ++s) c.push_back(random_central(g, rng, 3));
    auto basis = random_basis(g, d, rng);
    rec.check(
        "section_then_theta",
        [&] {
          return theta_b(theta_b_section(g, d, r, c), d) == c && theta_b(theta_b_section(basis, r, c), basis) == c;
        },
        [&] {
          auto j = instance(g, seed, i);
          j["d"] = d;
          j["r"] = r;
          j["basis"] = io::to_json(basis);
          json cs = json::array();
          for (const auto& x : c) cs.push_back(io::to_json(x));
          j["tuple"] = cs;
          return j;
        });
  }
  for (const auto& name : {"C1", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "A4", "S4"}) {
    auto g = group_from_catalog(name);
    for (int d = 1; d <= 3; ++d)
      for (int r = 1; r <= d; ++r)
        rec.check(
            "bijectivity_grid", [&] { return theta_b_bijective(*g, d, r) == (g->is_abelian() || r == d); },
            [&] { return json{{"group", g->name()}, {"d", d}, {"r", r}}; });
  }
}

void detfun_signs(Recorder& rec, std::uint64_t seed) {
  const std::vector<std::string> groups{"C3", "C6", "S3", "D4", "Q8"};
  const std::vector<std::pair<int, int>> shapes{{1, 1}, {1, 2}, {2, 1}};
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(seed, i);
    auto g = pick_group(rng, groups);
    const auto& shape = shapes[static_cast<std::size_t>(rng.uniform(0, 2))];
    const int r1 = shape.first, r3 = shape.second;
    const int r2 = r1 + r3;
    auto G = random_unimodular(g, r2, rng, 2, 4);
    auto Gi = *matrix_inverse(G);
    GroupAlgebraMatrix left(g, r1, r2), right(g, r2, r3), lift(g, r3, r2);
    for (int a = 0; a < r1; ++a) left(a, a) = GroupAlgebraElement::one(g);
    for (int a = 0; a < r3; ++a) {
      right(r1 + a, a) = GroupAlgebraElement::one(g);
      lift(a, r1 + a) = GroupAlgebraElement::one(g);
    }
    auto theta = left * G, phi = Gi * right, s = lift * G;
    auto s2 = s + random_matrix(g, r3, r1, rng, 2, 2) * theta;
    auto x = det_free(random_basis(g, r1, rng)), y = det_free(random_basis(g, r3, rng));
    auto replay = [&] {
      auto j = instance(g, seed, i);
      j["theta"] = io::to_json(theta);
      j["phi"] = io::to_json(phi);
      j["section"] = io::to_json(s);
      j["section2"] = io::to_json(s2);
      return j;
    };
    rec.check(
        "tensor_swap_sign", [&] { return swap_commutes(x, y) && swap_commutes(y, x) && swap_commutes(x, x); }, replay);
    rec.check(
        "tensor_unit_and_associativity",
        [&] {
          auto u = det_unit(g);
          return tensor(u, x) == x && tensor(x, u) == x && tensor(tensor(x, y), x) == tensor(x, tensor(y, x)) &&
                 evaluate(inverse(x), x) == CentralElement::one(g);
        },
        replay);
    rec.check(
        "ses_section_independence", [&] { return ses_iso(theta, phi, s).factor == ses_iso(theta, phi, s2).factor; },
        replay);
    rec.check(
        "ses_order_swap",
        [&] {
          auto a = ses_iso(theta, phi, s), c = ses_iso(theta, phi, s, true);
          auto alpha = swap_sign(det_free(GroupAlgebraMatrix::identity(g, r1)), det_free(GroupAlgebraMatrix::identity(g, r3)));
          GroupAlgebraMatrix p(g, r2, r2);
          for (int k = 0; k < r1; ++k) p(k, r3 + k) = GroupAlgebraElement::one(g);
          for (int k = 0; k < r3; ++k) p(r1 + k, k) = GroupAlgebraElement::one(g);
          return c.factor == alpha * a.factor && apply_map(a.image.gen, p) == c.image.gen;
        },
        replay);
  }
}

void annihilation(Recorder& rec, std::uint64_t seed, const Budget& budget) {
  const std::vector<std::string> groups{"C4", "S3", "D4"};
  for (const auto& name : groups) {
    auto g = group_from_catalog(name);
    auto x = CentralElement::scalar(g, CycloNum(g->order()));
    rec.check(
        "order_in_delta", [&] { return delta_check(x, budget).verdict != Verdict::CertifiedNo; },
        [&] { return json{{"group", name}}; });
  }
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(seed, i);
    auto g = pick_group(rng, groups);
    auto n = static_cast<std::size_t>(pick(rng, 1, 2));
    GroupAlgebraMatrix m;
    do m = random_matrix(g, n, n, rng, 2, 3);
    while (!nrd(m).invertible());
    auto x = CentralElement::scalar(g, CycloNum(g->order()));
    rec.check(
        "annihilates", [&] { return annihilation_check(m, x).annihilates; },
        [&] {
          auto j = instance(g, seed, i);
          j["matrix"] = io::to_json(m);
          return j;
        });
  }
}

void cyclo_relation(Recorder& rec) {
  for (const auto& row : euler_family_check(30, 13))
    rec.check(
        "distribution", [&] { return row.pass; },
        [&] {
          return json{{"f", row.f}, {"ell", row.ell}, {"lhs", io::to_json(row.lhs)}, {"rhs", io::to_json(row.rhs)}};
        });
  rec.check(
      "flipped_guard_fails_somewhere",
      [] {
        for (const auto& row : euler_family_check(30, 13, true))
          if (!row.pass) return true;
        return false;
      },
      [] { return json{{"fmax", 30}, {"ellmax", 13}}; });
  for (long ell : {2L, 3L, 5L, 7L, 11L, 13L}) {
    AbelianFieldSpec spec{ell, {}};
    for (long a = 1; a < ell; ++a) spec.h.push_back(a);
    rec.check(
        "norm_at_prime", [&] { return cyclotomic_unit(spec) == CycloNum(ell); },
        [&] { return json{{"f", ell}}; });
  }
  rec.check(
      "norm_at_12", [] { return cyclotomic_unit({12, {1, 5, 7, 11}}) == CycloNum(1); },
      [] { return json{{"f", 12}}; });
}

void xi_sanity(Recorder& rec, const Budget& budget) {
  for (const auto& name : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "C2xC4"}) {
    auto g = group_from_catalog(name);
    rec.check(
        "abelian_equals_group_ring",
        [&] {
          auto xi = xi_approx(g, budget);
          return xi.exact && xi == group_ring_image(g);
        },
        [&] { return json{{"group", name}}; });
  }
  auto q8 = group_from_catalog("Q8");
  rec.check(
      "q8_generator",
      [&] {
        auto xi = xi_approx(q8, budget);
        std::vector<CycloNum> v{2, 0, 2, 0, 2};
        return xi.stable && xi.contains(CentralElement(q8, v));
      },
      [&] { return json{{"group", "Q8"}, {"budget", budget.to_string()}}; });
  for (const auto& name : {"C6", "S3", "D4", "Q8", "A4"}) {
    auto g = group_from_catalog(name);
    rec.check(
        "generators_consistent_integral",
        [&] {
          for (const auto& x : xi_approx(g, budget).basis_elements())
            if (!x.is_galois_consistent() || !x.is_algebraic_integer()) return false;
          return true;
        },
        [&] { return json{{"group", name}}; });
  }
}

}  // namespace

std::string criterion_title(int id) {
  switch (id) {
    case 1: return "commutative Fitting oracle equivalence";
    case 2: return "reduced norm properties";
    case 3: return "generalized adjoint identity";
    case 4: return "pairing oracle";
    case 5: return "epsilon_M kernel element";
    case 6: return "theta_b splitting";
    case 7: return "determinant functor signs";
    case 8: return "annihilation";
    case 9: return "cyclotomic distribution relation";
    case 10: return "xi sanity";
    default: throw std::invalid_argument("unknown criterion " + std::to_string(id));
  }
}

CheckResult run_criterion(int id, std::uint64_t seed, const Budget& budget) {
  CheckResult r;
  r.id = id;
  r.title = criterion_title(id);
  Recorder rec(r);
  switch (id) {
    case 1: oracle_equivalence(rec, seed, budget); break;
    case 2: nrd_properties(rec, seed); break;
    case 3: adjoint_identity(rec, seed); break;
    case 4: pairing_oracle(rec, seed); break;
    case 5: epsilon_suite(rec, seed); break;
    case 6: theta_splitting(rec, seed); break;
    case 7: detfun_signs(rec, seed); break;
    case 8: annihilation(rec, seed, budget); break;
    case 9: cyclo_relation(rec); break;
    case 10: xi_sanity(rec, budget); break;
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "nrd-props", "adjoint", "pairing", "epsilon", "detfun", "cyclo", "all"};
  return names;
}

std::vector<int> suite_criteria(const std::string& name) {
  if (name == "oracle") return {1, 10};
  if (name == "nrd-props") return {2};
  if (name == "adjoint") return {3, 8};
  if (name == "pairing") return {4, 6};
  if (name == "epsilon") return {5};
  if (name == "detfun") return {7};
  if (name == "cyclo") return {9};
  if (name == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw std::invalid_argument("unknown suite: " + name);
}

json to_json(const CheckResult& r) {
  json j = {{"criterion", r.id},    {"title", r.title},     {"cases", r.cases},
            {"failures", r.failures}, {"passed", r.passed()}, {"checks", r.details}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

}  // namespace galg::suites
