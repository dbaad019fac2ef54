#include <array>
#include <bit>
#include <cstdint>
#include <set>

#include "chamberlab/error.hpp"
#include "chamberlab/geometry.hpp"

namespace chamberlab {

namespace {

// GF(q) for q = 2, 3, 4 by explicit tables. GF(4) = GF(2)[w]/(w^2 + w + 1)
// with elements 0, 1, w, w + 1 encoded as 0, 1, 2, 3.
struct SmallField {
  int q;
  std::array<std::array<int, 4>, 4> add{};
  std::array<std::array<int, 4>, 4> mul{};
};

SmallField make_field(int q) {
  SmallField f{q};
  switch (q) {
    case 2:
    case 3:
      for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
          f.add[a][b] = (a + b) % q;
          f.mul[a][b] = (a * b) % q;
        }
      }
      break;
    case 4:
      f.mul = {{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) f.add[a][b] = a ^ b;
      }
      break;
    default:
      throw Error(ErrorCode::kUnsupported,
                  "unsupported q = " + std::to_string(q) + " (expected 2, 3 or 4)");
  }
  return f;
}

// Symplectic form sum x_{2i} y_{2i+1} + x_{2i+1} y_{2i} on GF(2)^n, vectors
// as bit masks.
int symplectic(std::uint32_t x, std::uint32_t y, int n) {
  std::uint32_t even = 0;
  for (int i = 0; i < n; i += 2) even |= 1u << i;
  const std::uint32_t swapped = ((x & even) << 1) | ((x >> 1) & even);
  return std::popcount(swapped & y) & 1;
}

}  // namespace

IncidenceGeometry build_projective_plane(int q) {
  const SmallField f = make_field(q);
  using Triple = std::array<int, 3>;
  std::vector<Triple> normalized;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        const Triple t{a, b, c};
        int lead = 0;
        while (lead < 3 && t[lead] == 0) ++lead;
        if (lead < 3 && t[lead] == 1) normalized.push_back(t);
      }
    }
  }
  GeometryBuilder builder({"point", "line"});
  for (std::size_t i = 0; i < normalized.size(); ++i) builder.add_element(0, "p" + std::to_string(i));
  for (std::size_t i = 0; i < normalized.size(); ++i) builder.add_element(1, "l" + std::to_string(i));
  const auto n = static_cast<ElementId>(normalized.size());
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = 0; j < n; ++j) {
      const Triple& x = normalized[i];
      const Triple& y = normalized[j];
      int dot = 0;
      for (int k = 0; k < 3; ++k) dot = f.add[dot][f.mul[x[k]][y[k]]];
      if (dot == 0) builder.add_incidence(i, n + j);
    }
  }
  return std::move(builder).build();
}

IncidenceGeometry build_w2() {
  constexpr int kDim = 4;
  std::set<std::uint64_t> lines;
  for (std::uint32_t x = 1; x < 16; ++x) {
    for (std::uint32_t y = x + 1; y < 16; ++y) {
      if (symplectic(x, y, kDim) == 0) {
        lines.insert((1ull << x) | (1ull << y) | (1ull << (x ^ y)));
      }
    }
  }
  GeometryBuilder builder({"point", "line"});
  for (std::uint32_t x = 1; x < 16; ++x) builder.add_element(0, "p" + std::to_string(x));
  ElementId next = 15;
  for (std::uint64_t line : lines) {
    const ElementId id = builder.add_element(1, "l" + std::to_string(next - 15));
    for (std::uint32_t x = 1; x < 16; ++x) {
      if ((line >> x) & 1u) builder.add_incidence(x - 1, id);
    }
    ++next;
  }
  return std::move(builder).build();
}

IncidenceGeometry build_sp6_polar() {
  constexpr int kDim = 6;
  std::set<std::uint64_t> lines;
  std::set<std::uint64_t> planes;
  for (std::uint32_t x = 1; x < 64; ++x) {
    for (std::uint32_t y = x + 1; y < 64; ++y) {
      if (symplectic(x, y, kDim) != 0) continue;
      const std::uint64_t line = (1ull << x) | (1ull << y) | (1ull << (x ^ y));
      if (!lines.insert(line).second) continue;
      for (std::uint32_t z = 1; z < 64; ++z) {
        if ((line >> z) & 1u) continue;
        if (symplectic(z, x, kDim) != 0 || symplectic(z, y, kDim) != 0) continue;
        planes.insert(line | (1ull << z) | (1ull << (z ^ x)) | (1ull << (z ^ y)) |
                      (1ull << (z ^ x ^ y)));
      }
    }
  }
  GeometryBuilder builder({"point", "line", "plane"});
  for (std::uint32_t x = 1; x < 64; ++x) builder.add_element(0, "p" + std::to_string(x));
  std::vector<std::pair<std::uint64_t, ElementId>> line_ids;
  std::size_t k = 0;
  for (std::uint64_t line : lines) {
    const ElementId id = builder.add_element(1, "l" + std::to_string(k++));
    line_ids.emplace_back(line, id);
    for (std::uint32_t x = 1; x < 64; ++x) {
      if ((line >> x) & 1u) builder.add_incidence(x - 1, id);
    }
  }
  k = 0;
  for (std::uint64_t plane : planes) {
    const ElementId id = builder.add_element(2, "s" + std::to_string(k++));
    for (std::uint32_t x = 1; x < 64; ++x) {
      if ((plane >> x) & 1u) builder.add_incidence(x - 1, id);
    }
    for (const auto& [line, lid] : line_ids) {
      if ((line & plane) == line) builder.add_incidence(lid, id);
    }
  }
  return std::move(builder).build();
}

IncidenceGeometry coset_geometry(const CoxeterGroup& group, std::vector<std::string> type_names) {
  return geometry_of(coxeter_complex(group), std::move(type_names));
}

IncidenceGeometry thin_f4_geometry(const CoxeterGroup& group) {
  if (!(group.matrix() == CoxeterMatrix::f4())) {
    throw Error(ErrorCode::kWrongMatrix, "wrong matrix: thin_f4_geometry needs the F4 group");
  }
  return coset_geometry(group, {"point", "line", "plane", "hyperline"});
}

IncidenceGeometry thin_octahedron(const CoxeterGroup& c3_group) {
  const std::array<Generator, 3> gens{1, 2, 3};
  if (!(c3_group.matrix() == CoxeterMatrix::f4().submatrix(gens))) {
    throw Error(ErrorCode::kWrongMatrix,
                "wrong matrix: thin_octahedron needs the {1,2,3} parabolic of F4");
  }
  return coset_geometry(c3_group, {"point", "line", "plane"});
}

}  // namespace chamberlab
