#pragma once

#include "qfrob/bigint.hpp"

#include <cstdint>
#include <vector>

namespace qfrob {

/// Exact values indexed by internal degree d = 0..D.
using HilbertVector = std::vector<BigInt>;

/// dim of the degree-j part of the polynomial ring in 2m+2 variables (h0 of O_P(j)).
BigInt ambient_dim(int m, std::int64_t j);

/// h0(O(k)) on the quadric of index m: C(2m+1+k, 2m+1) - C(2m-1+k, 2m+1), zero for k < 0.
BigInt h0_line(int m, std::int64_t k);

/// h0 of a single spinor bundle twisted by k: 2^m (dim_{k-1} - dim_{k-2}), zero for k <= 0.
BigInt h0_spinor(int m, std::int64_t k);

HilbertVector line_hilbert_vector(int m, int max_degree);
HilbertVector spinor_hilbert_vector(int m, int max_degree);

}  // namespace qfrob
