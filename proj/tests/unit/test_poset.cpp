#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "posetcodes/poset.hpp"
#include "posetcodes/verify.hpp"

using namespace posetcodes;

namespace {

Mask m_of(std::initializer_list<int> elements) {
  Mask m = 0;
  for (int e : elements) m |= singleton(e);
  return m;
}

}  // namespace

TEST_CASE("two-level poset construction") {
  Poset p = make_hierarchical(2, 4);
  CHECK(p.down(1) == m_of({1}));
  CHECK(p.down(2) == m_of({2}));
  CHECK(p.down(3) == m_of({1, 2, 3}));
  CHECK(p.down(4) == m_of({1, 2, 4}));

  Poset anti = make_hierarchical(3, 3);
  for (int i = 1; i <= 3; ++i) CHECK(anti.down(i) == singleton(i));

  Poset chain = make_hierarchical(1, 2);
  CHECK(chain.down(1) == m_of({1}));
  CHECK(chain.down(2) == m_of({1, 2}));

  CHECK_THROWS_AS(make_hierarchical(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_hierarchical(4, 3), std::invalid_argument);
}

TEST_CASE("order ideal membership") {
  Poset p = Poset::from_covers(4, {{1, 2}, {3, 4}});
  CHECK(p.is_order_ideal(m_of({1, 2})));
  CHECK_FALSE(p.is_order_ideal(m_of({2})));
  CHECK(p.is_order_ideal(0));
  CHECK(p.is_order_ideal(p.universe()));
}

TEST_CASE("ideal closure") {
  Poset p = Poset::from_covers(4, {{1, 2}, {3, 4}});
  CHECK(p.ideal_closure(m_of({2})) == m_of({1, 2}));
  CHECK(p.ideal_closure(0) == 0);

  Poset h = make_hierarchical(2, 5);
  CHECK(h.ideal_closure(m_of({1, 3, 4})) == m_of({1, 2, 3, 4}));
}

TEST_CASE("down-set collections of a single ideal") {
  Poset fig1 = Poset::from_covers(4, {{2, 1}, {4, 3}});
  CHECK(fig1.down_ideals(m_of({1, 2})) ==
        std::vector<Mask>({0, m_of({2}), m_of({1, 2})}));

  Poset h = make_hierarchical(2, 4);
  CHECK(h.down_ideals(m_of({1, 2})) ==
        std::vector<Mask>({0, m_of({1}), m_of({2}), m_of({1, 2})}));
  CHECK(h.down_ideals(m_of({1, 2, 3})).size() == 5);  // 2^m + 2^|B| - 1

  CHECK_THROWS_AS(h.down_ideals(m_of({3})), std::invalid_argument);
}

TEST_CASE("down-set collections of a family") {
  Poset fig1 = Poset::from_covers(4, {{2, 1}, {4, 3}});
  IdealFamily fam1(fig1, {m_of({1, 2}), m_of({3, 4})});
  CHECK(family_downsets(fig1, fam1) ==
        std::vector<Mask>({0, m_of({2}), m_of({1, 2}), m_of({4}), m_of({3, 4})}));

  Poset fig2 = Poset::from_covers(4, {{2, 1}, {1, 3}, {1, 4}});
  IdealFamily fam2(fig2, {m_of({1, 2, 3}), m_of({1, 2, 4})});
  CHECK(family_downsets(fig2, fam2) ==
        std::vector<Mask>(
            {0, m_of({2}), m_of({1, 2}), m_of({1, 2, 3}), m_of({1, 2, 4})}));

  Poset anti = Poset::antichain(3);
  IdealFamily full(anti, {anti.universe()});
  CHECK(family_downsets(anti, full).size() == 8);

  CHECK_THROWS_AS(IdealFamily(fig1, {}), std::invalid_argument);
  CHECK_THROWS_AS(IdealFamily(fig1, {m_of({1})}), std::invalid_argument);
}

TEST_CASE("family deduplication") {
  Poset p = Poset::antichain(3);
  IdealFamily fam(p, {m_of({1}), m_of({1}), m_of({2})});
  CHECK(fam.size() == 2);
}

TEST_CASE("two-level ideal decomposition") {
  HierarchicalShape shape{2, 4};
  CHECK(decompose_hierarchical_ideal(shape, m_of({1, 2, 3})) ==
        std::pair<Mask, Mask>(m_of({1, 2}), m_of({3})));
  CHECK(decompose_hierarchical_ideal(shape, m_of({1})) ==
        std::pair<Mask, Mask>(m_of({1}), Mask{0}));

  HierarchicalShape big{2, 5};
  CHECK_THROWS_AS(decompose_hierarchical_ideal(big, m_of({1, 3, 4})),
                  std::invalid_argument);
}

TEST_CASE("cover input is closed and validated") {
  Poset chain = Poset::from_covers(3, {{1, 2}, {2, 3}});
  CHECK(chain.down(3) == m_of({1, 2, 3}));
  CHECK_THROWS_AS(Poset::from_covers(2, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset::from_covers(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("two-level shape detection") {
  CHECK(make_hierarchical(2, 5).hierarchical_shape().has_value());
  CHECK(make_hierarchical(2, 5).hierarchical_shape()->m == 2);
  CHECK(Poset::antichain(4).hierarchical_shape()->m == 4);
  CHECK_FALSE(
      Poset::from_covers(4, {{2, 1}, {1, 3}, {1, 4}}).hierarchical_shape().has_value());
  CHECK_FALSE(Poset::from_covers(3, {{1, 3}}).hierarchical_shape().has_value());
}

TEST_CASE("closure is idempotent and down-set collections match filtering") {
  std::mt19937_64 rng(12345);
  for (int sample = 0; sample < 60; ++sample) {
    int n = 1 + static_cast<int>(rng() % 5);
    Poset p = verify::random_poset(rng, n);
    for (Mask e = 0; e < (Mask{1} << n); ++e) {
      Mask closed = p.ideal_closure(e);
      CHECK(p.is_order_ideal(closed));
      CHECK(p.ideal_closure(closed) == closed);
      if (p.is_order_ideal(e)) CHECK(closed == e);
    }
    std::vector<Mask> all = p.all_ideals();
    std::vector<Mask> filtered;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (p.is_order_ideal(s)) filtered.push_back(s);
    }
    CHECK(all == filtered);
    for (Mask ideal : all) {
      std::vector<Mask> got = p.down_ideals(ideal);
      std::vector<Mask> want;
      for (Mask s : all) {
        if ((s & ~ideal) == 0) want.push_back(s);
      }
      CHECK(got == want);
    }
  }
}

TEST_CASE("family collection size follows inclusion-exclusion") {
  std::mt19937_64 rng(999);
  for (int sample = 0; sample < 40; ++sample) {
    int n = 2 + static_cast<int>(rng() % 4);
    Poset p = verify::random_poset(rng, n);
    std::vector<Mask> ideals = p.all_ideals();
    std::erase(ideals, Mask{0});
    if (ideals.size() < 2) continue;
    for (int trial = 0; trial < 10; ++trial) {
      Mask i1 = ideals[rng() % ideals.size()];
      Mask i2 = ideals[rng() % ideals.size()];
      Mask i3 = ideals[rng() % ideals.size()];
      IdealFamily fam(p, {i1, i2, i3});
      long long direct = static_cast<long long>(family_downsets(p, fam).size());
      // Alternating sum over nonempty subfamilies, via intersections.
      const std::vector<Mask>& members = fam.ideals();
      long long alternating = 0;
      for (std::uint32_t sel = 1; sel < (1u << members.size()); ++sel) {
        Mask inter = p.universe();
        for (std::size_t i = 0; i < members.size(); ++i) {
          if ((sel >> i) & 1u) inter &= members[i];
        }
        long long part = static_cast<long long>(p.down_ideals(inter).size());
        alternating += (popcount(sel) % 2 == 1) ? part : -part;
      }
      CHECK(direct == alternating);
    }
  }
}
