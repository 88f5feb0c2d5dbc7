// Bounds for a Hermitian code over GF(4), next to the true minimum distances.

#include <cstdio>

#include "agb/agb.hpp"

int main() {
  const auto table = agb::hermitian_table(2);
  const auto hs = agb::empirical_hstar(table);
  const agb::LambdaProfile profile(hs);
  const agb::CodeChain chain(agb::chain_basis(table, hs));
  const agb::WellBehaving wb(chain);

  std::printf("H* =");
  for (int m : hs.members()) std::printf(" %d", m);
  std::printf("\n  i  m_i  #L*  d*  generic  goppa  true d\n");
  for (const auto& row : agb::bound_table(profile)) {
    const int d = agb::oracle::min_distance(agb::code(table, row.m).generator);
    std::printf("%3d %4d %4d %3d %8d %6d %7d\n", row.i, row.m, row.lambda_count, row.d_star, wb.bound(row.i),
                row.goppa, d);
    if (d < row.d_star) return 1;
  }
  return 0;
}
