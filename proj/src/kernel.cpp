#include "wfree/kernel.hpp"

#include <set>

namespace wfree {

Matrix image_matrix(const std::vector<Monomial>& ambient, const std::vector<LinearMap>& maps) {
  // rows keyed by (map, output monomial)
  std::map<std::pair<size_t, Monomial>, int> row_of;
  std::vector<std::vector<std::pair<int, Scalar>>> cols(ambient.size());
  for (size_t j = 0; j < ambient.size(); ++j) {
    const State v(ambient[j]);
    for (size_t i = 0; i < maps.size(); ++i) {
      const State img = maps[i](v);
      for (const auto& [m, c] : img.terms()) {
        auto [it, fresh] = row_of.try_emplace({i, m}, static_cast<int>(row_of.size()));
        cols[j].emplace_back(it->second, c);
      }
    }
  }
  Matrix M = zero_matrix(static_cast<int>(row_of.size()), static_cast<int>(ambient.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : cols[j]) M[r][j] = c;
  return M;
}

KernelReport kernel_basis(const std::vector<Monomial>& ambient, const std::vector<LinearMap>& maps,
                          int weight2) {
  KernelReport rep;
  rep.weight2 = weight2;
  rep.ambient_dim = static_cast<int>(ambient.size());
  const int n = rep.ambient_dim;
  Matrix M = image_matrix(ambient, maps);
  Echelon ech;
  auto null = nullspace(M, n, &ech);
  std::set<std::string> dens;
  std::vector<Poly> polys = ech.pivot_polys;
  polys.insert(polys.end(), ech.special.begin(), ech.special.end());
  for (const auto& p : polys)
    if (p.degree() > 0)
      for (auto& f : factor_strings(p)) dens.insert(f);
  rep.denominators.assign(dens.begin(), dens.end());
  for (const auto& vec : null) {
    State s;
    for (int j = 0; j < n; ++j)
      if (!vec[j].is_zero()) s.add(ambient[j], vec[j]);
    rep.basis.push_back(std::move(s));
  }
  rep.kernel_dim = static_cast<int>(rep.basis.size());
  rep.rechecked = true;
  for (const auto& b : rep.basis)
    for (const auto& f : maps)
      if (!f(b).is_zero()) rep.rechecked = false;
  return rep;
}

}  // namespace wfree
