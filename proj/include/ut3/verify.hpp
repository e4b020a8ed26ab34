#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ut3/chain.hpp"
#include "ut3/json_io.hpp"

namespace ut3::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<double> residual;  // float suites only
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<Check> checks;
  double wall_seconds = 0.0;  // not serialized

  bool passed() const {
    for (const Check& c : checks)
      if (!c.passed) return false;
    return true;
  }

  void exact(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail), std::nullopt});
  }

  void bounded(std::string name, double residual, double bound) {
    checks.push_back({std::move(name), residual < bound, {}, residual});
  }

  /// Deterministic for a given seed and tolerance; wall time is left out.
  json::Json to_json() const {
    json::Json list = json::Json::array();
    for (const Check& c : checks) {
      json::Json item{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
      if (c.residual) item["residual"] = *c.residual;
      if (!c.detail.empty()) item["detail"] = c.detail;
      list.push_back(std::move(item));
    }
    return json::Json{{"suite", suite},
                      {"seed", seed},
                      {"tolerance", tolerance},
                      {"status", passed() ? "pass" : "fail"},
                      {"checks", std::move(list)}};
  }
};

/// The published character table, one string per class row; tokens are
/// 1, w, w2, 3, 3w, 3w2, 0.
inline CharacterTable published_character_table() {
  static constexpr std::array<std::array<const char*, kNumIrreps>, kNumClasses> rows = {{
      {"1", "1", "1", "1", "1", "1", "1", "1", "1", "3", "3"},
      {"1", "1", "1", "1", "1", "1", "1", "1", "1", "3w", "3w2"},
      {"1", "1", "1", "1", "1", "1", "1", "1", "1", "3w2", "3w"},
      {"1", "w", "w2", "1", "w", "w2", "1", "w", "w2", "0", "0"},
      {"1", "w2", "w", "1", "w2", "w", "1", "w2", "w", "0", "0"},
      {"1", "1", "1", "w", "w", "w", "w2", "w2", "w2", "0", "0"},
      {"1", "w", "w2", "w", "w2", "1", "w2", "1", "w", "0", "0"},
      {"1", "w2", "w", "w", "1", "w2", "w2", "w", "1", "0", "0"},
      {"1", "1", "1", "w2", "w2", "w2", "w", "w", "w", "0", "0"},
      {"1", "w", "w2", "w2", "1", "w", "w", "w2", "1", "0", "0"},
      {"1", "w2", "w", "w2", "w", "1", "w", "1", "w2", "0", "0"},
  }};
  auto value = [](std::string_view token) -> Cyclotomic {
    Cyclotomic::Int scale = 1;
    if (!token.empty() && token.front() >= '0' && token.front() <= '9') {
      scale = token.front() - '0';
      token.remove_prefix(1);
    }
    if (token.empty()) return scale;
    return Cyclotomic(scale) * omega_pow(token == "w" ? 1 : 2);
  };
  CharacterTable table{};
  for (std::size_t c = 0; c < kNumClasses; ++c)
    for (std::size_t i = 0; i < kNumIrreps; ++i) table[c][i] = value(rows[c][i]);
  return table;
}

inline void group_suite(VerifyReport& r) {
  const auto all = elements();
  bool assoc = true;
  for (GroupElement g : all)
    for (GroupElement h : all)
      for (GroupElement k : all) assoc = assoc && mul(mul(g, h), k) == mul(g, mul(h, k));
  r.exact("associativity (27^3 triples)", assoc);

  bool matrix_oracle = true;
  for (GroupElement g : all)
    for (GroupElement h : all) {
      const auto x = g.matrix();
      const auto y = h.matrix();
      std::array<std::array<int, 3>, 3> p{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int l = 0; l < 3; ++l) p[i][j] += x[i][l] * y[l][j];
      matrix_oracle = matrix_oracle && GroupElement(p[0][1], p[0][2], p[1][2]) == mul(g, h);
    }
  r.exact("mul agrees with 3x3 matrix product mod 3", matrix_oracle);

  bool inverses = true;
  for (GroupElement g : all) inverses = inverses && mul(g, inverse(g)).is_identity() && mul(inverse(g), g).is_identity();
  r.exact("inverse", inverses);

  const ElementSet z = center();
  const ElementSet expected_center{GroupElement(0, 0, 0), GroupElement(0, 1, 0), GroupElement(0, 2, 0)};
  r.exact("center = {g(0,b,0)}", z == expected_center);
  r.exact("commutator subgroup = center", commutator_subgroup(ElementSet(all.begin(), all.end()),
                                                              ElementSet(all.begin(), all.end())) == expected_center);

  const auto series = lower_central_series();
  r.exact("lower central series G > Z > {e}",
          series.size() == 3 && series[1] == expected_center && series[2] == ElementSet{GroupElement::identity()});

  const auto classes = conjugacy_classes();
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  bool class_index_ok = true;
  for (const auto& c : classes) {
    sizes.push_back(c.size());
    total += c.size();
    for (GroupElement g : c.members) class_index_ok = class_index_ok && class_position(g) + 1 == c.index;
  }
  r.exact("11 conjugacy classes, sizes (1,1,1,3,...,3)",
          classes.size() == 11 && sizes == std::vector<std::size_t>{1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3} && total == 27);
  r.exact("class lookup consistent with orbits", class_index_ok);

  bool hom = true;
  std::array<bool, 9> hit{};
  for (GroupElement g : all) {
    const auto [a, c] = abelianization_map(g);
    hit[static_cast<std::size_t>(3 * a + c)] = true;
    for (GroupElement h : all) {
      const auto [a2, c2] = abelianization_map(h);
      hom = hom && abelianization_map(mul(g, h)) == std::pair{mod3(a + a2), mod3(c + c2)};
    }
  }
  r.exact("abelianization: surjective hom onto F3 x F3", hom && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));

  bool cosets = true;
  for (GroupElement g : all)
    for (GroupElement h : subgroup_h()) cosets = cosets && right_coset_index(mul(h, g)) == right_coset_index(g);
  r.exact("right coset index constant on H g", cosets);
}

inline void cyclotomic_suite(VerifyReport& r, Rng& rng) {
  const Cyclotomic w = omega_pow(1);
  r.exact("w^3 = 1, 1 + w + w^2 = 0", w * w * w == Cyclotomic(1) && Cyclotomic(1) + w + w * w == Cyclotomic(0));
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    auto draw = [&] {
      return Cyclotomic(static_cast<Cyclotomic::Int>(rng.below(2000001)) - 1000000,
                        static_cast<Cyclotomic::Int>(rng.below(2000001)) - 1000000);
    };
    const Cyclotomic x = draw();
    const Cyclotomic y = draw();
    const Complex xc = to_complex(x);
    const Complex yc = to_complex(y);
    auto rel = [](Complex exact, Complex approx) {
      return std::abs(exact - approx) / std::max(1.0, std::abs(approx));
    };
    worst = std::max({worst, rel(to_complex(x * y), xc * yc), rel(to_complex(x + y), xc + yc),
                      rel(to_complex(conj(x)), std::conj(xc))});
  }
  r.bounded("exact ring ops match complex floats (relative)", worst, 1e-9);
}

inline void irreps_suite(VerifyReport& r) {
  r.exact("character table equals the published table", character_table() == published_character_table());

  bool hom = true;
  bool unitary = true;
  bool class_function = true;
  bool inverse_conj = true;
  for (IrrepLabel label : all_irreps()) {
    for (GroupElement g : elements()) {
      const IrrepMatrix m = evaluate(label, g);
      unitary = unitary && evaluate(label, inverse(g)) == m.adjoint();
      inverse_conj = inverse_conj && character_at(label, inverse(g)) == conj(m.trace());
      for (GroupElement h : elements()) {
        hom = hom && evaluate(label, mul(g, h)) == m * evaluate(label, h);
        class_function = class_function && character_at(label, conjugate(g, h)) == m.trace();
      }
    }
  }
  r.exact("homomorphism, 11 irreps x 729 pairs (exact)", hom);
  r.exact("unitarity rho(g^-1) = rho(g)^*", unitary);
  r.exact("characters constant on classes", class_function);
  r.exact("chi(g^-1) = conj(chi(g))", inverse_conj);

  bool orthonormal = true;
  for (IrrepLabel x : all_irreps())
    for (IrrepLabel y : all_irreps())
      orthonormal = orthonormal && inner_product(character(x), character(y)) == ExactRational(x == y ? 1 : 0);
  r.exact("<chi_i, chi_j> = delta_ij (exact)", orthonormal);

  int dim_squares = 0;
  for (IrrepLabel l : all_irreps()) dim_squares += l.dimension() * l.dimension();
  r.exact("sum of squared dimensions = 27", dim_squares == 27);

  bool induced = true;
  for (int k : {1, 2})
    for (GroupElement u : elements()) induced = induced && induced_character(k, u) == rho_3d(k, u).trace();
  r.exact("induced character = trace of rho_k (exact)", induced);
}

inline void decomposition_suite(VerifyReport& r, Rng& rng, double tol) {
  const MatrixRep regular = regular_representation();
  r.exact("type of regular representation = (1,...,1,3,3)", type_of(regular) == RepType::regular());
  const BlockBasis bb = block_basis(regular);
  r.bounded("block_basis residual, regular representation", bb.residual, 1e-9);

  int roundtrip_failures = 0;
  double scrambled_residual = 0.0;
  double projector_residual = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    RepType::Multiplicities m{};
    int dim = 0;
    while (dim == 0 || dim > 12) {
      dim = 0;
      for (std::size_t i = 0; i < kNumIrreps; ++i) {
        m[i] = static_cast<int>(rng.below(2));
        dim += m[i] * irrep_dimension(i);
      }
    }
    const RepType t(m);
    const MatrixRep canon = canonical_rep(t);
    if (type_of(canon) != t) roundtrip_failures += 1;
    const MatrixRep scrambled = canon.conjugated(Matrix::Identity(dim, dim) + 0.5 * rng.matrix(dim, dim));
    const BlockBasis sb = block_basis(scrambled);
    if (sb.type != t) roundtrip_failures += 1;
    scrambled_residual = std::max(scrambled_residual, sb.residual);

    Matrix sum = Matrix::Zero(dim, dim);
    for (IrrepLabel i : all_irreps()) {
      const Matrix p = isotypic_projector(scrambled, i);
      sum += p;
      projector_residual = std::max(projector_residual, max_abs(p * p - p));
      for (GroupElement g : elements())
        projector_residual = std::max(projector_residual, max_abs(p * scrambled(g) - scrambled(g) * p));
    }
    projector_residual = std::max(projector_residual, max_abs(sum - Matrix::Identity(dim, dim)));
  }
  r.exact("type_of(canonical_rep(t)) = t and scrambled round trip", roundtrip_failures == 0);
  r.bounded("block_basis residual, scrambled reps", scrambled_residual, 1e-9);
  r.bounded("projector algebra (idempotent, complete, equivariant)", projector_residual, tol);
}

/// Mixed fiber types used by the equivariance suites.
inline std::vector<RepType> mixed_types() {
  return {
      RepType({1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}),  // rho(0,0) + rho1
      RepType({0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}),
      RepType({2, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1}),
      RepType({0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0}),
      RepType({1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0}),
  };
}

inline void equivariance_suite(VerifyReport& r, Rng& rng, double tol, int pairs = 100) {
  const auto types = mixed_types();
  double conv = 0.0;
  double constraint = 0.0;
  for (int trial = 0; trial < pairs; ++trial) {
    const RepType& in = types[rng.below(types.size())];
    const RepType& out = types[rng.below(types.size())];
    const EquivariantFilter filter = random_filter(in, out, rng);
    const FeatureMap f = FeatureMap::random(in, rng);
    conv = std::max(conv, equivariance_residual(f, filter));
    if (trial < 10) constraint = std::max(constraint, constraint_residual(filter));
  }
  r.bounded("steerable convolution equivariance, " + std::to_string(pairs) + " random pairs", conv, tol);
  r.bounded("kernel constraint psi(x) rho_V(u) = rho_W(u) psi(x)", constraint, tol);

  double nonlin = 0.0;
  for (const RepType& t : types) {
    const FeatureMap f = FeatureMap::random(t, rng);
    const auto phi = shifted_relu(0.3);
    const FeatureMap base = norm_nonlinearity(f, phi);
    for (GroupElement g : elements())
      nonlin = std::max(nonlin, distance(norm_nonlinearity(induced_action(g, f), phi), induced_action(g, base)));
  }
  r.bounded("norm nonlinearity commutes with the action", nonlin, tol);

  double actions = 0.0;
  const FeatureMap s = FeatureMap::random(RepType::of(IrrepLabel::one_dim(0, 0)), rng);
  const FeatureMap v = FeatureMap::random(types[2], rng);
  for (GroupElement g : elements())
    for (GroupElement u : elements()) {
      actions = std::max(actions, distance(left_translate(g, left_translate(u, s)), left_translate(mul(g, u), s)));
      actions = std::max(actions, distance(induced_action(g, induced_action(u, v)), induced_action(mul(g, u), v)));
    }
  r.bounded("left translation and induced action are representations", actions, tol);

  double annihilation = 0.0;
  {
    const RepType in = RepType::of(IrrepLabel::three_dim(1));
    const RepType out = RepType::of(IrrepLabel::three_dim(2));
    KernelTable raw;
    for (Matrix& k : raw) k = rng.matrix(3, 3);
    for (const Matrix& k : project_filter(raw, in, out).kernel_table()) annihilation = std::max(annihilation, max_abs(k));
  }
  r.bounded("projection between rho1 and rho2 fibers is zero", annihilation, tol);
}

/// (in, out) pairs with fiber dimension <= 6 for the filter-space rank check.
inline std::vector<std::pair<RepType, RepType>> filter_space_cases() {
  const auto one = [](int r, int s) { return IrrepLabel::one_dim(r, s); };
  RepType::Multiplicities a{}, b{}, c{}, d{};
  a[0] = 1, a[9] = 1;            // rho(0,0) + rho1
  b[0] = 2, b[1] = 1, b[9] = 1;  // 2 rho(0,0) + rho(0,1) + rho1
  c[9] = 2;                      // 2 rho1
  d[0] = 1, d[3] = 2, d[10] = 1; // rho(0,0) + 2 rho(1,0) + rho2
  return {
      {RepType::of(IrrepLabel::three_dim(1)), RepType::of(IrrepLabel::three_dim(2))},
      {RepType::of(one(0, 0)), RepType::of(one(0, 0))},
      {RepType(a), RepType(a)},
      {RepType(a), RepType(b)},
      {RepType(c), RepType(a)},
      {RepType(d), RepType(b)},
  };
}

inline void filter_space_suite(VerifyReport& r) {
  for (const auto& [in, out] : filter_space_cases()) {
    const Eigen::Index rank = numerical_rank(reynolds_operator(in, out), 1e-8);
    const int expected = parameter_count(in, out);
    r.exact("rank of projection " + in.to_string() + " -> " + out.to_string(), rank == expected,
            "rank " + std::to_string(rank) + ", expected " + std::to_string(expected));
  }
}

inline void chain_suite(VerifyReport& r, Rng& rng, double tol, int maps = 10) {
  const auto types = mixed_types();
  bool ok = true;
  double worst = 0.0;
  for (int trial = 0; trial < maps; ++trial) {
    const RepType& in = types[rng.below(types.size())];
    const RepType& out = types[rng.below(types.size())];
    const EquivariantFilter filter = random_filter(in, out, rng);
    const ChainImage image = chain_image(filter, isotypic_filtration(in), kRankTolerance, tol);
    ok = ok && image.certified();
    for (const ChainLevel& l : image.levels) worst = std::max({worst, l.invariance, l.nesting, l.containment});
  }
  r.exact("image chains certified for " + std::to_string(maps) + " random filters", ok);
  r.bounded("worst chain residual", worst, tol);
}

inline void example_suite(VerifyReport& r) {
  const auto [nontrivial, trivial] = example_4_5();
  r.bounded("(f * chi_(1,0))(e) = 0", std::abs(nontrivial), 1e-12);
  r.bounded("(f * chi_triv)(e) = 27", std::abs(trivial - Complex(27.0, 0.0)), 1e-12);
  const FeatureMap ones = FeatureMap::scalar([](GroupElement) { return Complex(1.0, 0.0); });
  double sieve = 0.0;
  for (int pos = 0; pos < 9; ++pos) {
    const IrrepLabel label = IrrepLabel::from_position(static_cast<std::size_t>(pos));
    const FeatureMap out = group_convolve(ones, character_map(label));
    const Complex expected = label.is_trivial() ? 27.0 : 0.0;
    for (GroupElement g : elements()) sieve = std::max(sieve, std::abs(out(g)(0) - expected));
  }
  r.bounded("character sieve, 9 characters x 27 points", sieve, 1e-12);
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"group",  "cyclotomic",   "irreps", "decomposition",
                                              "equivariance", "filter-space", "chain",  "example"};
  return names;
}

/// Runs one suite, or every suite for "all". Unknown names throw std::invalid_argument.
inline VerifyReport run_suite(const std::string& name, std::uint64_t seed, double tol) {
  VerifyReport r;
  r.suite = name;
  r.seed = seed;
  r.tolerance = tol;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  const bool all = name == "all";
  bool matched = all;
  auto want = [&](const char* s) {
    const bool hit = all || name == s;
    matched = matched || hit;
    return hit;
  };
  if (want("group")) group_suite(r);
  if (want("cyclotomic")) cyclotomic_suite(r, rng);
  if (want("irreps")) irreps_suite(r);
  if (want("decomposition")) decomposition_suite(r, rng, tol);
  if (want("equivariance")) equivariance_suite(r, rng, tol);
  if (want("filter-space")) filter_space_suite(r);
  if (want("chain")) chain_suite(r, rng, tol);
  if (want("example")) example_suite(r);
  if (!matched) throw std::invalid_argument("unknown suite '" + name + "'");
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace ut3::verify
