#include "sdlab/complex.hpp"
#include "sdlab/corpus.hpp"
#include "sdlab/subdivision.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

using namespace sdlab;

namespace {

std::vector<long> fv(const SimplicialComplex& k) {
  std::vector<long> out;
  for (const auto& c : face_vector(k).counts) out.push_back(c.convert_to<long>());
  return out;
}

// Brute force: every nonempty subset of every facet, deduplicated.
std::vector<long> brute_face_vector(const std::vector<std::vector<VertexId>>& facets) {
  std::set<std::vector<VertexId>> all;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << f.size()); ++m) {
      std::vector<VertexId> s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (m >> i & 1U) s.push_back(f[i]);
      all.insert(s);
    }
  }
  std::vector<long> out;
  for (const auto& s : all) {
    if (out.size() < s.size()) out.resize(s.size(), 0);
    ++out[s.size() - 1];
  }
  return out;
}

// A 1-dimensional complex is a single cycle iff connected and 2-regular.
bool is_cycle(const SimplicialComplex& k) {
  if (k.dim() != 1) return false;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : k.faces(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) return false;
  std::set<VertexId> seen{adj.begin()->first};
  std::queue<VertexId> todo;
  todo.push(adj.begin()->first);
  while (!todo.empty()) {
    VertexId v = todo.front();
    todo.pop();
    for (VertexId w : adj[v])
      if (seen.insert(w).second) todo.push(w);
  }
  return seen.size() == adj.size();
}

// Tries to orient all triangles of a closed surface coherently.
bool orientable_surface(const SimplicialComplex& k) {
  const auto& tris = k.facets();
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> by_edge;
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) by_edge[{tris[t][i], tris[t][j]}].push_back(t);
  // sign[t] = +1 keeps the sorted orientation (a,b,c), -1 reverses it.
  auto induced = [&](std::size_t t, VertexId a, VertexId b) {
    // sorted triangle (x,y,z) induces x->y, y->z, z->x
    const auto& s = tris[t];
    if ((a == s[0] && b == s[1]) || (a == s[1] && b == s[2]) || (a == s[2] && b == s[0])) return 1;
    return -1;
  };
  std::vector<int> sign(tris.size(), 0);
  for (std::size_t start = 0; start < tris.size(); ++start) {
    if (sign[start]) continue;
    sign[start] = 1;
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
      std::size_t t = todo.front();
      todo.pop();
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          VertexId a = tris[t][i], b = tris[t][j];
          for (std::size_t u : by_edge[{a, b}]) {
            if (u == t) continue;
            // coherent: the shared edge is traversed in opposite directions
            int want = -sign[t] * induced(t, a, b) * induced(u, a, b);
            if (!sign[u]) {
              sign[u] = want;
              todo.push(u);
            } else if (sign[u] != want) {
              return false;
            }
          }
        }
    }
  }
  return true;
}

SimplicialComplex random_complex(std::mt19937& rng, int max_dim) {
  std::uniform_int_distribution<int> nf(1, 6), nv(4, 8), dim(0, max_dim);
  const int vcount = nv(rng);
  std::vector<std::vector<VertexId>> facets;
  const int count = nf(rng);
  for (int i = 0; i < count; ++i) {
    std::vector<VertexId> all(vcount);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(vcount, dim(rng) + 1));
    facets.push_back(all);
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace

TEST(Simplex, CanonicalOrder) {
  Simplex s({3, 1, 2});
  EXPECT_EQ(s.vertices(), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(s.dim(), 2);
  EXPECT_THROW(Simplex({1, 1}), Error);
  EXPECT_THROW(Simplex(std::vector<VertexId>{}), Error);
  EXPECT_TRUE(Simplex({1, 3}).is_proper_face_of(s));
  EXPECT_FALSE(s.is_proper_face_of(s));
}

TEST(BuildFromFacets, Examples) {
  EXPECT_EQ(fv(SimplicialComplex::from_facets({{0, 1, 2}})), (std::vector<long>{3, 3, 1}));
  EXPECT_EQ(fv(SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}})), (std::vector<long>{3, 3}));
  auto k = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1}});
  ASSERT_EQ(k.facets().size(), 1U);
  EXPECT_EQ(k.facets()[0], Simplex({0, 1, 2}));
  EXPECT_THROW(SimplicialComplex::from_facets({}), Error);
}

TEST(FaceVector, Examples) {
  EXPECT_EQ(fv(standard_simplex(3)), (std::vector<long>{4, 6, 4, 1}));
  for (int n = 1; n <= 6; ++n) {
    auto f = fv(boundary_simplex(n));
    for (int p = 0; p <= n; ++p) EXPECT_EQ(f[p], binomial(n + 2, p + 1).convert_to<long>());
  }
  EXPECT_EQ(fv(cross_polytope_boundary(1)), (std::vector<long>{4, 4}));
  EXPECT_EQ(fv(cross_polytope_boundary(2)), (std::vector<long>{6, 12, 8}));
  EXPECT_EQ(fv(torus7()), (std::vector<long>{7, 21, 14}));
}

TEST(FaceVector, MatchesBruteForceOnRandomComplexes) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto k = random_complex(rng, 4);
    std::vector<std::vector<VertexId>> facets;
    for (const auto& f : k.facets()) facets.push_back(f.vertices());
    EXPECT_EQ(fv(k), brute_face_vector(facets));
  }
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic(boundary_simplex(2)), 2);
  EXPECT_EQ(euler_characteristic(boundary_simplex(1)), 0);
  EXPECT_EQ(euler_characteristic(cross_polytope_boundary(2)), 2);
  EXPECT_EQ(euler_characteristic(torus7()), 0);
}

TEST(EulerCharacteristic, InvariantUnderSubdivision) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    auto k = random_complex(rng, 3);
    EXPECT_EQ(euler_characteristic(barycentric_subdivision(k).complex()), euler_characteristic(k));
  }
}

TEST(Link, Examples) {
  auto l = link(Simplex({0}), boundary_simplex(2));
  EXPECT_EQ(fv(l), (std::vector<long>{3, 3}));
  auto e = link(Simplex({0, 1}), standard_simplex(2));
  EXPECT_EQ(e.facets(), std::vector<Simplex>{Simplex({2})});
  EXPECT_TRUE(link(Simplex({0, 1, 2}), standard_simplex(2)).empty());
  EXPECT_THROW(link(Simplex({0, 5}), standard_simplex(2)), Error);
}

TEST(Link, VertexLinksOfOctahedronAreSquares) {
  auto k = cross_polytope_boundary(2);
  for (const auto& v : k.faces(0)) {
    auto l = link(v, k);
    EXPECT_EQ(fv(l), (std::vector<long>{4, 4}));
    EXPECT_TRUE(is_cycle(l));
  }
}

TEST(Builders, ExampleFormulas) {
  // T q(T) = (1+T)^3 - 1 - T^3 for the circle.
  auto tq = face_polynomial(boundary_simplex(1)).shift(1);
  auto rhs = IntPolynomial({1, 1});
  rhs = rhs * rhs * rhs - IntPolynomial::constant(1) - IntPolynomial::monomial(1, 3);
  EXPECT_EQ(tq, rhs);
  // Cross-polytope boundary: T q(T) = (1+2T)^{n+1} - 1.
  for (int n = 1; n <= 5; ++n) {
    IntPolynomial power = IntPolynomial::constant(1);
    for (int i = 0; i <= n; ++i) power = power * IntPolynomial({1, 2});
    EXPECT_EQ(face_polynomial(cross_polytope_boundary(n)).shift(1), power - IntPolynomial::constant(1));
  }
}

TEST(Builders, SuspensionOfSphereIsSphere) {
  auto s = suspension(boundary_simplex(1));
  EXPECT_EQ(fv(s), (std::vector<long>{5, 9, 6}));
  EXPECT_TRUE(is_closed_pseudomanifold(s));
  EXPECT_EQ(euler_characteristic(s), 2);
  EXPECT_EQ(fv(suspension(cross_polytope_boundary(1))), fv(cross_polytope_boundary(2)));
}

TEST(Pseudomanifold, Examples) {
  EXPECT_TRUE(is_closed_pseudomanifold(boundary_simplex(2)));
  EXPECT_FALSE(is_closed_pseudomanifold(standard_simplex(2)));
  EXPECT_TRUE(is_closed_pseudomanifold(cross_polytope_boundary(2)));
  auto rep = check_closed_pseudomanifold(standard_simplex(2));
  EXPECT_FALSE(rep.diagnostic.empty());
}

TEST(Surfaces, VertexLinksAreCycles) {
  for (const char* name : {"torus-7", "klein-bottle", "torus-grid", "octahedron", "boundary-delta-3"}) {
    auto k = corpus_entry(name).build();
    for (const auto& v : k.faces(0)) EXPECT_TRUE(is_cycle(link(v, k))) << name << " at " << v.str();
  }
}

TEST(Surfaces, Orientability) {
  EXPECT_TRUE(orientable_surface(torus7()));
  EXPECT_TRUE(orientable_surface(grid_surface(4, 4, false)));
  EXPECT_TRUE(orientable_surface(cross_polytope_boundary(2)));
  EXPECT_FALSE(orientable_surface(grid_surface(4, 4, true)));
  EXPECT_EQ(euler_characteristic(grid_surface(4, 4, true)), 0);
}

TEST(Corpus, ManifoldFlagMatchesPseudomanifoldCheck) {
  for (const auto& e : corpus_entries()) EXPECT_EQ(is_closed_pseudomanifold(e.build()), e.manifold) << e.name;
}
