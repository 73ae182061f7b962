#pragma once

#include "combilab/exactmath.hpp"

namespace combilab {

enum class ChebKind { First, Second };

/// T_n or U_n from the three-term recurrence P_{n+1} = 2x P_n - P_{n-1},
/// with T_0 = 1, T_1 = x and U_0 = 1, U_1 = 2x.
IntPoly cheb_poly(ChebKind kind, int n);

/// t_{n,k}, the coefficient of x^{n-k+1} in T_{n+k+1}, from the closed forms.
/// Valid for 0 <= k <= n + 1. Both closed forms are evaluated; a mismatch
/// throws ConsistencyError.
ExactInt t_coeff_closed(int n, int k);

/// |t_{n,k}| via the alternating inclusion-exclusion sum.
ExactInt t_coeff_alternating(int n, int k);

/// |t_{n,k}| via 2^{n-k} [C(n,k) + 2 C(n,k-1)].
ExactInt t_coeff_bracket(int n, int k);

/// Coefficient of x^{n-k} in U_{n+k}: (-1)^k 2^{n-k} C(n,k), for 0 <= k <= n.
ExactInt u_coeff_closed(int n, int k);

}  // namespace combilab
