#include <gtest/gtest.h>

#include <deque>

#include "chamberlab/axioms.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/geometry.hpp"

namespace cl = chamberlab;

namespace {

cl::IncidenceGeometry ordinary_polygon(int n) {
  cl::GeometryBuilder b({"point", "line"});
  for (int i = 0; i < n; ++i) b.add_element(0);
  for (int i = 0; i < n; ++i) b.add_element(1);
  for (int i = 0; i < n; ++i) {
    b.add_incidence(i, n + i);
    b.add_incidence((i + 1) % n, n + i);
  }
  return std::move(b).build();
}

// Oracle girth and diameter by BFS from every vertex.
std::pair<int, int> girth_diameter(const cl::IncidenceGeometry& g) {
  const auto n = g.num_elements();
  int girth = 1 << 30, diameter = 0;
  for (cl::ElementId s = 0; s < n; ++s) {
    std::vector<int> d(n, -1), parent(n, -1);
    std::deque<cl::ElementId> q{s};
    d[s] = 0;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop_front();
      for (auto u : g.incident(v)) {
        if (d[u] < 0) {
          d[u] = d[v] + 1;
          parent[u] = static_cast<int>(v);
          q.push_back(u);
        } else if (parent[v] != static_cast<int>(u)) {
          girth = std::min(girth, d[u] + d[v] + 1);
        }
      }
    }
    for (int x : d) diameter = std::max(diameter, x);
  }
  return {girth, diameter};
}

cl::IncidenceGeometry thin_f4() {
  static const auto w = cl::build_group(cl::CoxeterMatrix::f4());
  return cl::thin_f4_geometry(w);
}

}  // namespace

TEST(Ngon, ShippedPolygons) {
  const auto w2 = cl::build_w2();
  const auto r = cl::check_generalized_ngon(w2, 4, cl::Thickness::kThick);
  EXPECT_TRUE(r.pass) << r.failure;
  EXPECT_EQ(std::make_pair(r.girth, r.diameter), girth_diameter(w2));
  EXPECT_EQ(r.girth, 8);
  EXPECT_FALSE(cl::check_generalized_ngon(w2, 3, cl::Thickness::kAny).pass);
  EXPECT_FALSE(cl::check_generalized_ngon(w2, 4, cl::Thickness::kThin).pass);
  for (int q : {2, 3, 4}) {
    const auto pg = cl::build_projective_plane(q);
    const auto rp = cl::check_generalized_ngon(pg, 3, true);
    EXPECT_TRUE(rp.pass) << rp.failure;
    EXPECT_EQ(std::make_pair(rp.girth, rp.diameter), girth_diameter(pg));
  }
}

TEST(Ngon, DigonAndOrdinaryPolygons) {
  EXPECT_TRUE(cl::check_generalized_ngon(cl::complete_bipartite(3, 3), 2, cl::Thickness::kThick).pass);
  EXPECT_TRUE(cl::check_generalized_ngon(cl::complete_bipartite(2, 2), 2, cl::Thickness::kThin).pass);
  for (int n = 3; n <= 8; ++n) {
    const auto g = ordinary_polygon(n);
    EXPECT_TRUE(cl::check_generalized_ngon(g, n, cl::Thickness::kThin).pass);
    EXPECT_TRUE(cl::check_generalized_ngon(g, n, cl::Thickness::kAny).pass);
    EXPECT_FALSE(cl::check_generalized_ngon(g, n, cl::Thickness::kThick).pass);
    EXPECT_FALSE(cl::check_generalized_ngon(g, n + 1, cl::Thickness::kAny).pass);
  }
}

TEST(Ngon, DegenerateInputs) {
  // A path: no cycle at all.
  cl::GeometryBuilder b({"point", "line"});
  const auto p = b.add_element(0), l = b.add_element(1), q = b.add_element(0);
  b.add_incidence(p, l);
  b.add_incidence(q, l);
  const auto path = std::move(b).build();
  const auto r = cl::check_generalized_ngon(path, 2, cl::Thickness::kAny);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.girth, -1);
  // Two disjoint triangles.
  cl::GeometryBuilder d({"point", "line"});
  for (int k = 0; k < 2; ++k) {
    cl::ElementId pts[3], lns[3];
    for (auto& x : pts) x = d.add_element(0);
    for (auto& x : lns) x = d.add_element(1);
    for (int i = 0; i < 3; ++i) {
      d.add_incidence(pts[i], lns[i]);
      d.add_incidence(pts[(i + 1) % 3], lns[i]);
    }
  }
  const auto two = cl::check_generalized_ngon(std::move(d).build(), 3, cl::Thickness::kThin);
  EXPECT_FALSE(two.pass);
  EXPECT_FALSE(two.connected);
  EXPECT_THROW(cl::check_generalized_ngon(cl::build_sp6_polar(), 3, cl::Thickness::kAny), cl::Error);
}

TEST(Metasymplectic, ThinF4PassesInThinMode) {
  const auto r = cl::check_metasymplectic(thin_f4(), true);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.axioms.size(), 4u);
  for (const auto& a : r.axioms) {
    EXPECT_TRUE(a.pass) << a.axiom << " " << a.detail;
    EXPECT_GT(a.flags_checked, 0u);
  }
  // Thick mode rejects the thin residues.
  EXPECT_FALSE(cl::check_metasymplectic(thin_f4(), false).pass);
}

TEST(Metasymplectic, PaddedPolarSpaceFailsM1) {
  const auto sp6 = cl::build_sp6_polar();
  cl::GeometryBuilder b({"point", "line", "plane", "hyperline"});
  for (cl::ElementId e = 0; e < sp6.num_elements(); ++e) b.add_element(sp6.type_of(e), sp6.label(e));
  for (cl::ElementId e = 0; e < sp6.num_elements(); ++e) {
    for (auto x : sp6.incident(e)) {
      if (x > e) b.add_incidence(e, x);
    }
  }
  const auto dummy = b.add_element(3, "dummy");
  for (cl::ElementId e = 0; e < sp6.num_elements(); ++e) b.add_incidence(e, dummy);
  const auto r = cl::check_metasymplectic(std::move(b).build(), false);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.axioms[0].pass);
  EXPECT_FALSE(r.axioms[0].witness.empty());
}

TEST(Metasymplectic, DuplicateLineFailsM4) {
  const auto g = thin_f4();
  cl::GeometryBuilder b(g.type_names());
  for (cl::ElementId e = 0; e < g.num_elements(); ++e) b.add_element(g.type_of(e), g.label(e));
  for (cl::ElementId e = 0; e < g.num_elements(); ++e) {
    for (auto x : g.incident(e)) {
      if (x > e) b.add_incidence(e, x);
    }
  }
  const auto line = g.elements_of_type(1).front();
  const auto twin = b.add_element(1, "twin");
  for (auto x : g.incident(line)) b.add_incidence(twin, x);
  const auto r = cl::check_metasymplectic(std::move(b).build(), true);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.axioms[3].pass);
  EXPECT_EQ(r.axioms[3].axiom, "M4");
  ASSERT_EQ(r.axioms[3].witness.size(), 2u);
  EXPECT_EQ(r.axioms[3].witness[1], "twin");
}

TEST(Metasymplectic, WrongRank) {
  try {
    cl::check_metasymplectic(cl::build_sp6_polar(), false);
    FAIL();
  } catch (const cl::Error& e) {
    EXPECT_EQ(e.code(), cl::ErrorCode::kWrongRank);
  }
}
