#include "qfrob/hilbert.hpp"

namespace qfrob {

BigInt ambient_dim(int m, std::int64_t j) {
  if (j < 0) return 0;
  return binomial(2 * m + 1 + j, 2 * m + 1);
}

BigInt h0_line(int m, std::int64_t k) {
  if (k < 0) return 0;
  return binomial(2 * m + 1 + k, 2 * m + 1) - binomial(2 * m - 1 + k, 2 * m + 1);
}

BigInt h0_spinor(int m, std::int64_t k) {
  if (k <= 0) return 0;
  return ipow(2, static_cast<unsigned>(m)) * (ambient_dim(m, k - 1) - ambient_dim(m, k - 2));
}

HilbertVector line_hilbert_vector(int m, int max_degree) {
  HilbertVector v;
  for (int d = 0; d <= max_degree; ++d) v.push_back(h0_line(m, d));
  return v;
}

HilbertVector spinor_hilbert_vector(int m, int max_degree) {
  HilbertVector v;
  for (int d = 0; d <= max_degree; ++d) v.push_back(h0_spinor(m, d));
  return v;
}

}  // namespace qfrob
