#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ut3 {

/// Residue modulo 3, always in {0, 1, 2}.
constexpr int mod3(long long x) noexcept {
  const long long r = x % 3;
  return static_cast<int>(r < 0 ? r + 3 : r);
}

/**
 * An element of the unitriangular group UT_3(F_3), stored as the three free
 * entries of
 *
 *     [[1, a, b],
 *      [0, 1, c],
 *      [0, 0, 1]]
 *
 * so b is the top-right corner. Entries are reduced mod 3 on construction.
 */
class GroupElement {
 public:
  static constexpr std::size_t kOrder = 27;

  constexpr GroupElement() noexcept = default;
  constexpr GroupElement(long long a, long long b, long long c) noexcept
      : a_(static_cast<std::uint8_t>(mod3(a))),
        b_(static_cast<std::uint8_t>(mod3(b))),
        c_(static_cast<std::uint8_t>(mod3(c))) {}

  constexpr int a() const noexcept { return a_; }
  constexpr int b() const noexcept { return b_; }
  constexpr int c() const noexcept { return c_; }

  /// Position in the fixed enumeration order 9a + 3b + c.
  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(9 * a_ + 3 * b_ + c_);
  }

  static constexpr GroupElement from_index(std::size_t i) noexcept {
    return GroupElement(static_cast<long long>(i / 9), static_cast<long long>((i / 3) % 3),
                        static_cast<long long>(i % 3));
  }

  static constexpr GroupElement identity() noexcept { return GroupElement{}; }

  constexpr bool is_identity() const noexcept { return a_ == 0 && b_ == 0 && c_ == 0; }

  /// The element as a 3x3 integer matrix (entries in {0,1,2}).
  constexpr std::array<std::array<int, 3>, 3> matrix() const noexcept {
    return {{{1, a_, b_}, {0, 1, c_}, {0, 0, 1}}};
  }

  /// "a,b,c", the key used by every JSON format in this library.
  std::string key() const {
    return std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_);
  }

  friend constexpr bool operator==(GroupElement, GroupElement) noexcept = default;
  friend constexpr auto operator<=>(GroupElement x, GroupElement y) noexcept {
    return x.index() <=> y.index();
  }

  friend std::ostream& operator<<(std::ostream& os, GroupElement g) {
    return os << "g(" << g.a() << "," << g.b() << "," << g.c() << ")";
  }

 private:
  std::uint8_t a_ = 0;
  std::uint8_t b_ = 0;
  std::uint8_t c_ = 0;
};

using ElementSet = std::vector<GroupElement>;

/// All 27 elements in index order.
constexpr std::array<GroupElement, GroupElement::kOrder> elements() noexcept {
  std::array<GroupElement, GroupElement::kOrder> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = GroupElement::from_index(i);
  return out;
}

/// (a, b, c)(a', b', c') = (a + a', b + b' + a c', c + c').
constexpr GroupElement mul(GroupElement g, GroupElement h) noexcept {
  return GroupElement(g.a() + h.a(), g.b() + h.b() + g.a() * h.c(), g.c() + h.c());
}

constexpr GroupElement operator*(GroupElement g, GroupElement h) noexcept { return mul(g, h); }

constexpr GroupElement inverse(GroupElement g) noexcept {
  return GroupElement(-g.a(), -g.b() + g.a() * g.c(), -g.c());
}

/// g h g^-1 h^-1; always central, with top-right entry a1 c2 - a2 c1.
constexpr GroupElement commutator(GroupElement g, GroupElement h) noexcept {
  return mul(mul(g, h), mul(inverse(g), inverse(h)));
}

/// h g h^-1
constexpr GroupElement conjugate(GroupElement g, GroupElement by) noexcept {
  return mul(mul(by, g), inverse(by));
}

namespace detail {

inline ElementSet sorted_unique(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const ElementSet& s, GroupElement g) {
  return std::find(s.begin(), s.end(), g) != s.end();
}

/// Closure of a generating set under multiplication (finite group, so this is
/// the generated subgroup).
inline ElementSet generated_subgroup(const ElementSet& generators) {
  ElementSet sub{GroupElement::identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    const ElementSet current = sub;
    for (GroupElement x : current) {
      for (GroupElement s : generators) {
        const GroupElement y = mul(x, s);
        if (!contains(sub, y)) {
          sub.push_back(y);
          grew = true;
        }
      }
    }
  }
  return sorted_unique(std::move(sub));
}

}  // namespace detail

/// Elements commuting with all of G, found by brute force.
inline ElementSet center() {
  ElementSet out;
  for (GroupElement z : elements()) {
    bool central = true;
    for (GroupElement g : elements()) {
      if (mul(z, g) != mul(g, z)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(z);
  }
  return out;
}

/// Subgroup generated by all commutators [x, y] with x in `left`, y in `right`.
inline ElementSet commutator_subgroup(const ElementSet& left, const ElementSet& right) {
  ElementSet gens;
  for (GroupElement x : left)
    for (GroupElement y : right) gens.push_back(commutator(x, y));
  return detail::generated_subgroup(detail::sorted_unique(std::move(gens)));
}

/// [G, [G,G], {e}]: G_0 = G, G_{i+1} = [G, G_i], stopped at the trivial group.
inline std::vector<ElementSet> lower_central_series() {
  const auto all = elements();
  std::vector<ElementSet> series{ElementSet(all.begin(), all.end())};
  while (series.back().size() > 1) {
    ElementSet next = commutator_subgroup(series.front(), series.back());
    if (next == series.back()) break;  // not nilpotent; cannot happen here
    series.push_back(std::move(next));
  }
  return series;
}

struct ConjugacyClass {
  std::size_t index = 0;  // 1..11
  GroupElement representative;
  ElementSet members;  // sorted by element index

  std::size_t size() const noexcept { return members.size(); }
};

/// Class representatives in the order C_1 ... C_11.
inline constexpr std::array<GroupElement, 11> kClassRepresentatives = {
    GroupElement(0, 0, 0), GroupElement(0, 1, 0), GroupElement(0, 2, 0), GroupElement(0, 0, 1),
    GroupElement(0, 0, 2), GroupElement(1, 0, 0), GroupElement(1, 0, 1), GroupElement(1, 0, 2),
    GroupElement(2, 0, 0), GroupElement(2, 0, 1), GroupElement(2, 0, 2)};

inline constexpr std::size_t kNumClasses = kClassRepresentatives.size();

inline ElementSet conjugacy_orbit(GroupElement g) {
  ElementSet orbit;
  for (GroupElement h : elements()) orbit.push_back(conjugate(g, h));
  return detail::sorted_unique(std::move(orbit));
}

/// Brute-force orbits, ordered by the fixed representative list.
inline std::vector<ConjugacyClass> conjugacy_classes() {
  std::vector<ConjugacyClass> out;
  out.reserve(kNumClasses);
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    out.push_back({i + 1, kClassRepresentatives[i], conjugacy_orbit(kClassRepresentatives[i])});
  }
  return out;
}

/// 0-based position of the class containing g.
constexpr std::size_t class_position(GroupElement g) noexcept {
  // Central elements are singleton classes; every other class is {g(a, *, c)}.
  if (g.a() == 0 && g.c() == 0) return static_cast<std::size_t>(g.b());
  if (g.a() == 0) return static_cast<std::size_t>(g.c() == 1 ? 3 : 4);
  return static_cast<std::size_t>(5 + 3 * (g.a() - 1) + g.c());
}

constexpr std::array<std::size_t, kNumClasses> class_sizes() noexcept {
  return {1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3};
}

/// The quotient map G -> G/[G,G] = F_3 x F_3, g(a,b,c) -> (a, c).
constexpr std::pair<int, int> abelianization_map(GroupElement g) noexcept {
  return {g.a(), g.c()};
}

/// The abelian normal subgroup H = {g(0, b, c)}.
inline ElementSet subgroup_h() {
  ElementSet out;
  for (GroupElement g : elements())
    if (g.a() == 0) out.push_back(g);
  return out;
}

/// Index n of the right coset H g(n,0,0) containing g; H g = H g' iff a = a'.
constexpr int right_coset_index(GroupElement g) noexcept { return g.a(); }

constexpr std::array<GroupElement, 3> right_coset_representatives() noexcept {
  return {GroupElement(0, 0, 0), GroupElement(1, 0, 0), GroupElement(2, 0, 0)};
}

}  // namespace ut3
