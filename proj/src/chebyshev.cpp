#include "combilab/chebyshev.hpp"

#include <string>

#include "combilab/errors.hpp"

namespace combilab {

IntPoly cheb_poly(ChebKind kind, int n) {
    if (n < 0) throw DomainError("cheb_poly: n must be nonnegative");
    IntPoly prev = 1;
    if (n == 0) return prev;
    IntPoly cur = (kind == ChebKind::First) ? IntPoly::x() : IntPoly::monomial(2, 1);
    const IntPoly two_x = IntPoly::monomial(2, 1);
    for (int i = 1; i < n; ++i) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

void require_t_domain(const char* op, int n, int k) {
    if (n < 0 || k < 0 || k > n + 1) {
        throw DomainError(std::string(op) + ": need n >= 0 and 0 <= k <= n + 1");
    }
}

}  // namespace

ExactInt t_coeff_alternating(int n, int k) {
    require_t_domain("t_coeff_alternating", n, k);
    ExactInt total = 0;
    for (int i = 0; i <= n; ++i) {
        ExactInt term = binomial(n, i) * binomial(2LL * n - 2LL * i + 1, static_cast<long long>(n) + k);
        if (i % 2) total -= term; else total += term;
    }
    return total;
}

ExactInt t_coeff_bracket(int n, int k) {
    require_t_domain("t_coeff_bracket", n, k);
    // At k = n + 1 the factor 2^{n-k} is 1/2, cancelled by the 2 in front of
    // C(n, k-1); distribute it so only nonnegative powers appear.
    ExactInt total = 0;
    if (k <= n) total += pow2(n - k) * binomial(n, k);
    if (k >= 1) total += pow2(n - k + 1) * binomial(n, k - 1);
    return total;
}

ExactInt t_coeff_closed(int n, int k) {
    const ExactInt alt = t_coeff_alternating(n, k);
    const ExactInt bracket = t_coeff_bracket(n, k);
    if (alt != bracket) {
        throw ConsistencyError("t_coeff_closed(" + std::to_string(n) + "," + std::to_string(k) +
                               "): closed forms disagree, " + alt.str() + " vs " + bracket.str());
    }
    return sign_pow(k) * bracket;
}

ExactInt u_coeff_closed(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("u_coeff_closed: need 0 <= k <= n");
    return sign_pow(k) * pow2(n - k) * binomial(n, k);
}

}  // namespace combilab
