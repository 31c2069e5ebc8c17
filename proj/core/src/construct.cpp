#include "eqlines/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqlines {

namespace {

ScaledVector basis_combination(std::initializer_list<std::pair<int, int>> entries) {
  ScaledVector v{};
  for (auto [coord, value] : entries) v[static_cast<std::size_t>(coord - 1)] = value;
  return v;
}

ScaledVector indicator(Codeword w) {
  ScaledVector v{};
  for (int c = 1; c <= kCodeLength; ++c) v[static_cast<std::size_t>(c - 1)] = w.has(c) ? 1 : 0;
  return v;
}

}  // namespace

int dot(const ScaledVector& a, const ScaledVector& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

int scaled_inner(const LineVector& u, const LineVector& v) { return dot(u.coords, v.coords); }

LineVector lift(Codeword d) {
  LineVector out;
  out.source = d;
  for (int c = 1; c <= kCodeLength; ++c) out.coords[static_cast<std::size_t>(c - 1)] = (d.has(c) ? 4 : 0) - 1;
  out.coords[0] -= 4;
  return out;
}

FilterSet construction_filters() {
  FilterSet f;
  f.m = basis_combination({{4, 2}, {5, -1}, {6, -1}, {7, 2}, {8, -1}, {10, -1},
                           {17, 2}, {18, -1}, {20, -1}, {22, -3}, {23, 3}});
  f.centre.fill(1);
  f.centre[0] = 5;
  f.e1_minus_e2 = basis_combination({{1, 1}, {2, -1}});
  f.e1_minus_e3 = basis_combination({{1, 1}, {3, -1}});
  return f;
}

IntMatrix LineSystem::as_matrix() const {
  IntMatrix m(vectors.size(), kCodeLength);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < kCodeLength; ++j) m(i, j) = vectors[i].coords[j];
  }
  return m;
}

IntMatrix LineSystem::gram() const {
  IntMatrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < vectors.size(); ++j) g(i, j) = scaled_inner(vectors[i], vectors[j]);
  }
  return g;
}

LineSystem make_system(std::vector<LineVector> vectors) {
  LineSystem s;
  s.vectors = std::move(vectors);
  s.ambient_dim = rank(s.as_matrix());
  return s;
}

LineSystem asche_system(const GolayCode& code, const FilterSet& filters) {
  const ScaledVector c1 = indicator(filters.c1);
  const ScaledVector c2 = indicator(filters.c2);
  std::vector<LineVector> members;
  for (Codeword d : octads_through(code, 1)) {
    // Bit tests and intersection counts decide membership ...
    const bool selected = !d.has(2) && !d.has(3) && d.intersection_size(filters.c1) == 2 &&
                          d.intersection_size(filters.c2) == 2;
    // ... and must agree with the literal orthogonality conditions.
    const LineVector v = lift(d);
    const bool literal = dot(v.coords, filters.e1_minus_e2) == 0 && dot(v.coords, filters.e1_minus_e3) == 0 &&
                         dot(v.coords, c1) == 0 && dot(v.coords, c2) == 0;
    if (selected != literal) {
      throw std::logic_error("asche_system: bit-level filter disagrees with inner-product filter for octad " +
                             d.to_string());
    }
    if (!selected) continue;
    if (dot(v.coords, filters.centre) != 0) {
      throw std::logic_error("asche_system: <f(d), 4e1 + eSigma> != 0 for octad " + d.to_string());
    }
    members.push_back(v);
  }
  if (members.size() != 72) {
    throw ConstructionError("asche_system: expected 72 lines, found " + std::to_string(members.size()));
  }
  return make_system(std::move(members));
}

LineSystem final_system(const GolayCode& code, const FilterSet& filters) {
  const LineSystem full = asche_system(code, filters);
  std::vector<LineVector> members;
  for (const auto& v : full.vectors) {
    if (dot(v.coords, filters.m) == 0) members.push_back(v);
  }
  if (members.size() != 54) {
    throw ConstructionError("final_system: expected 54 lines, found " + std::to_string(members.size()));
  }
  LineSystem s = make_system(std::move(members));
  if (s.ambient_dim != 18) {
    throw ConstructionError("final_system: expected rank 18, found " + std::to_string(s.ambient_dim));
  }
  return s;
}

RemarkReport verify_remark(const LineSystem& full, const LineSystem& final, const FilterSet& filters) {
  RemarkReport r;
  auto fail = [&](std::string why) {
    r.failure = std::move(why);
    r.passed = false;
    return r;
  };

  for (std::size_t i = 0; i < full.vectors.size(); ++i) {
    const auto& v = full.vectors[i];
    const bool kept = std::find(final.vectors.begin(), final.vectors.end(), v) != final.vectors.end();
    const int pairing = dot(v.coords, filters.m);
    if (kept != (pairing == 0)) return fail("final system differs from {v : <v, m> = 0} at index " + std::to_string(i + 1));
    if (kept) continue;
    r.removed.push_back(i);
    if (pairing > 0) {
      r.u.push_back(i);
      r.u_m_pairings.push_back(pairing);
    } else {
      r.v.push_back(i);
      r.v_m_pairings.push_back(pairing);
    }
  }
  if (r.removed.size() != 18) return fail("removed set has " + std::to_string(r.removed.size()) + " lines, expected 18");
  if (r.u.size() != 9 || r.v.size() != 9) {
    return fail("split " + std::to_string(r.u.size()) + "/" + std::to_string(r.v.size()) + ", expected 9/9");
  }
  for (std::size_t k = 0; k < 9; ++k) {
    if (r.u_m_pairings[k] != 24) return fail("<u, m> != 24 at index " + std::to_string(r.u[k] + 1));
    if (r.v_m_pairings[k] != -24) return fail("<v, m> != -24 at index " + std::to_string(r.v[k] + 1));
  }

  auto check_clique = [&](const std::vector<std::size_t>& side, const char* name) -> std::string {
    for (std::size_t a = 0; a < side.size(); ++a) {
      for (std::size_t b = a + 1; b < side.size(); ++b) {
        if (scaled_inner(full.vectors[side[a]], full.vectors[side[b]]) != kScaledAngle) {
          return std::string(name) + " is not a clique: indices " + std::to_string(side[a] + 1) + ", " +
                 std::to_string(side[b] + 1);
        }
      }
    }
    return {};
  };
  if (auto why = check_clique(r.u, "U"); !why.empty()) return fail(why);
  if (auto why = check_clique(r.v, "V"); !why.empty()) return fail(why);

  r.u_cross_partners.assign(9, {});
  r.v_cross_partners.assign(9, {});
  for (std::size_t a = 0; a < 9; ++a) {
    for (std::size_t b = 0; b < 9; ++b) {
      const int ip = scaled_inner(full.vectors[r.u[a]], full.vectors[r.v[b]]);
      if (ip == kScaledAngle) {
        r.u_cross_partners[a].push_back(b);
        r.v_cross_partners[b].push_back(a);
      } else if (ip != -kScaledAngle) {
        return fail("cross inner product " + std::to_string(ip) + " is not +-16");
      }
    }
  }
  for (std::size_t k = 0; k < 9; ++k) {
    if (r.u_cross_partners[k].size() != 2) {
      return fail("u at index " + std::to_string(r.u[k] + 1) + " has " +
                  std::to_string(r.u_cross_partners[k].size()) + " positive cross partners");
    }
    if (r.v_cross_partners[k].size() != 2) {
      return fail("v at index " + std::to_string(r.v[k] + 1) + " has " +
                  std::to_string(r.v_cross_partners[k].size()) + " positive cross partners");
    }
  }
  r.passed = true;
  return r;
}

}  // namespace eqlines
