#include <doctest.h>

#include <set>

#include "qwb/errors.hpp"
#include "qwb/graph.hpp"

using namespace qwb;

namespace {

MultiplicityVector mv(std::vector<Rational> nu, Rational n) { return MultiplicityVector::make(std::move(nu), n); }

ResolutionGraph chain(int K, int L) {
  std::vector<Arrow> a;
  for (int i = 2; i <= K; ++i) a.emplace_back(i, i - 1);
  return ResolutionGraph::make(K, L, a);
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("structural rules") {
    CHECK(chain(3, 2).valid());
    CHECK_THROWS_AS(ResolutionGraph::make(3, 3, {{2, 1}}), InputError);               // missing (3, 2)
    CHECK_THROWS_AS(ResolutionGraph::make(3, 1, {{2, 1}, {3, 2}, {3, 1}}), InputError);  // (L+2, L)
    CHECK_THROWS_AS(ResolutionGraph::make(4, 1, {{2, 1}, {3, 2}, {4, 3}, {4, 2}}), InputError);  // upper chain
    CHECK_THROWS_AS(ResolutionGraph::make(5, 5, {{2, 1}, {3, 2}, {4, 3}, {5, 4}, {5, 1}}), InputError);  // closure needs (3, 1)
    CHECK(ResolutionGraph::make(4, 4, {{2, 1}, {3, 2}, {4, 3}, {4, 1}, {3, 1}}).valid());
    ResolutionGraph g = chain(4, 2);
    CHECK(g.delta(1) == 1);
    CHECK(g.delta(2) == 2);
    CHECK(g.delta(3) == 1);
  }

  TEST_CASE("path counts") {
    CHECK(path_counts(chain(3, 3))(3, 1) == 1);
    ResolutionGraph g = ResolutionGraph::make(3, 2, {{2, 1}, {3, 2}, {3, 1}});
    PathCounts p = path_counts(g);
    CHECK(p(3, 1) == 2);
    CHECK(p(2, 2) == 1);
    for (int K = 1; K <= 6; ++K)
      for (const auto& h : enumerate_graphs(K)) {
        PathCounts q = path_counts(h);
        for (int i = 1; i <= K; ++i)
          for (int j = 1; j <= i; ++j) CHECK(q(i, j) == oracle::brute_force_paths(h, i, j));
      }
  }

  TEST_CASE("enumeration") {
    const std::vector<std::size_t> counts{1, 2, 5, 22, 134, 1074};
    for (int K = 1; K <= 6; ++K) {
      auto graphs = enumerate_graphs(K);
      CHECK(graphs.size() == counts[K - 1]);
      std::set<std::pair<int, std::vector<Arrow>>> seen;
      for (const auto& g : graphs) {
        CHECK(g.valid());
        seen.insert({g.L(), g.arrows()});
      }
      CHECK(seen.size() == graphs.size());
      CHECK(enumerate_graphs(K, false) == graphs);
    }
  }

  TEST_CASE("noether-fano inequality") {
    ResolutionGraph one = chain(1, 1);
    CHECK(noether_fano_check(one, mv({3}, 2)).holds);
    CHECK_FALSE(noether_fano_check(one, mv({2}, 2)).holds);

    NoetherFano b = noether_fano_check(chain(2, 2), mv({3, 3}, 2));
    CHECK(b.lhs == 6);
    CHECK(b.rhs == 6);
    CHECK_FALSE(b.holds);

    for (const auto& g : enumerate_graphs(4))
      for (int a = 1; a <= 4; ++a) {
        std::vector<Rational> nu{4, Rational(a + 3), Rational(a + 3), Rational(a + 2)};
        for (auto& x : nu) x = std::min(x, Rational(8));
        bool base = noether_fano_check(g, mv(nu, 4)).holds;
        for (auto& x : nu) x *= Rational(5, 3);
        CHECK(noether_fano_check(g, mv(nu, Rational(20, 3))).holds == base);
      }
  }

  TEST_CASE("descent to a strict vertex") {
    int found = 0;
    for (int K = 2; K <= 5; ++K)
      for (const auto& g : enumerate_graphs(K))
        for (int top = 1; top <= 4; ++top)
          for (int last = 1; last <= 2; ++last) {
            std::vector<Rational> nu;
            for (int i = 1; i <= K; ++i) nu.push_back(i == 1 ? Rational(2) : i == K ? Rational(last) : Rational(top));
            if (!mv(nu, 2).violations().empty()) continue;
            MultiplicityVector m = mv(nu, 2);
            if (!noether_fano_check(g, m).holds) {
              CHECK_THROWS_AS(descend_to_strict(g, m), DomainError);
              continue;
            }
            Descent d = descend_to_strict(g, m);
            CHECK(m.nu[d.vertex] > m.n);
            MultiplicityVector cut;
            cut.nu.assign(m.nu.begin(), m.nu.begin() + d.vertex + 1);
            cut.n = m.n;
            CHECK(noether_fano_check(g.truncated(d.vertex), cut).holds);
            CHECK(d.trail.front() == K);
            found += d.vertex < K;
          }
    CHECK(found > 0);
    Descent direct = descend_to_strict(chain(1, 1), mv({3}, 2));
    CHECK(direct.vertex == 1);
  }

  TEST_CASE("modification") {
    ResolutionGraph plain = chain(4, 2);
    CHECK(modify_graph(plain) == plain);
    ResolutionGraph g = ResolutionGraph::make(4, 2, {{2, 1}, {3, 2}, {4, 3}, {4, 1}});
    ResolutionGraph m = modify_graph(g);
    CHECK_FALSE(m.has_arrow(4, 1));
    CHECK(m.has_arrow(3, 2));
    CHECK(path_counts(m)(4, 1) < path_counts(g)(4, 1));
    for (int K = 1; K <= 6; ++K)
      for (const auto& h : enumerate_graphs(K)) {
        auto r = r_values(h);
        for (int i = h.L(); i <= K; ++i) CHECK(r[i] == 1);
        std::vector<Rational> a;
        for (int i = 1; i <= h.L(); ++i) a.emplace_back(static_cast<unsigned long>(r[i]));
        CHECK(compatible_check(h, a));
      }
  }

  TEST_CASE("modified inequality") {
    ResolutionGraph plain = chain(3, 2);
    MultiplicityVector m = mv({2, 4, 3}, 2);
    ModifiedNoetherFano mod = modified_nf_check(plain, m);
    REQUIRE(mod.holds);
    NoetherFano nf = noether_fano_check(plain, m);
    CHECK(mod.values.lhs == nf.lhs);
    CHECK(mod.values.rhs == nf.rhs);
    CHECK(*mod.holds == nf.holds);
    // nu_1 > n delta_1 breaks the sign pattern
    CHECK_FALSE(modified_nf_check(plain, mv({3, 4, 3}, 2)).holds);

    LatticeScan scan = modified_nf_lattice_scan(5, 2, 2, true);
    CHECK(scan.counterexamples.empty());
    CHECK(scan.premise > 0);
    LatticeScan serial = modified_nf_lattice_scan(5, 2, 2, false);
    CHECK(serial.instances == scan.instances);
    CHECK(serial.premise == scan.premise);
  }

  TEST_CASE("compatible functions and the counting bound") {
    ResolutionGraph c = chain(4, 4);
    CHECK(compatible_check(c, {0, 0, 0, 0}));
    CHECK(compatible_check(c, {1, 1, 1, 1}));
    ResolutionGraph g = ResolutionGraph::make(3, 3, {{2, 1}, {3, 2}, {3, 1}});
    CHECK_FALSE(compatible_check(g, {1, 1, 1}));
    CHECK(compatible_check(g, {2, 1, 1}));
    CHECK_THROWS_AS(counting_bound(g, {1, 1, 1}, mv({2, 3, 3}, 2)), DomainError);

    CHECK(counting_bound(chain(1, 1), {1}, mv({Rational(3, 2)}, 2)) == Rational(9, 2));
    CHECK(counting_bound(chain(2, 1), {1}, mv({2, 3}, 2)) == 2 * 4 + 9);
    CHECK(counting_bound(chain(3, 2), {2, 1}, mv({2, 3, 3}, 2)) == 2 * 2 * 4 + 9 + 9);
  }
}
