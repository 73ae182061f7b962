#include "combilab/hessenberg.hpp"

#include <string>
#include <utility>

#include "combilab/compositions.hpp"

namespace combilab {

void HessFSpec::validate() const {
    if (n < 0) throw DomainError("F(n,p): n must be nonnegative");
    if (p < 1) throw DomainError("F(n,p): p must be positive");
}

void MinorIndexSet::validate(int n) const {
    int prev = 0;
    for (int i : deleted) {
        if (i <= prev || i > n) {
            throw DomainError("minor index set must be strictly increasing within [1, " + std::to_string(n) + "]");
        }
        prev = i;
    }
}

IntMatrix build_matrix(const HessFSpec& spec) {
    spec.validate();
    if (spec.n > kMaxDenseDimension) {
        throw SizeError("build_matrix: n = " + std::to_string(spec.n) + " too large to materialize",
                        kMaxDenseDimension);
    }
    IntMatrix m(spec.n, spec.n);
    for (int i = 0; i < spec.n; ++i) {
        for (int j = 0; j < spec.n; ++j) m(i, j) = spec.entry(i + 1, j + 1);
    }
    return m;
}

GenericHess<ExactInt> build_hess(const HessFSpec& spec) {
    spec.validate();
    GenericHess<ExactInt> h(spec.n);
    for (int j = 1; j <= spec.n; ++j) {
        for (int i = 1; i <= j; ++i) h.at(i, j) = spec.entry(i, j);
    }
    return h;
}

ExactInt det_bareiss(IntMatrix m) {
    const int n = m.rows();
    if (n != m.cols()) throw DomainError("det_bareiss: matrix must be square");
    if (n == 0) return 1;
    ExactInt sign = 1;
    ExactInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;  // exact division
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntMatrix principal_submatrix(const IntMatrix& m, const MinorIndexSet& del) {
    del.validate(m.rows());
    std::vector<int> keep;
    std::size_t d = 0;
    for (int i = 1; i <= m.rows(); ++i) {
        if (d < del.deleted.size() && del.deleted[d] == i) {
            ++d;
        } else {
            keep.push_back(i - 1);
        }
    }
    const int r = static_cast<int>(keep.size());
    IntMatrix out(r, r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) out(i, j) = m(keep[i], keep[j]);
    }
    return out;
}

std::vector<ExactInt> det_fnp_table(int max_n, int p) {
    HessFSpec{max_n, p}.validate();
    // det F(0) = 1, det F(m) = 0 for 0 < m < p, det F(p) = 1, then
    // det F(m) = det F(m-1) + det F(m-p) for m > p.
    std::vector<ExactInt> d(max_n + 1);
    for (int m = 0; m <= max_n; ++m) {
        if (m == 0 || m == p) {
            d[m] = 1;
        } else if (m < p) {
            d[m] = 0;
        } else {
            d[m] = d[m - 1] + d[m - p];
        }
    }
    return d;
}

ExactInt det_fnp(int n, int p) { return det_fnp_table(n, p)[n]; }

ExactInt principal_minor_direct(const HessFSpec& spec, const MinorIndexSet& del) {
    return det_bareiss(principal_submatrix(build_matrix(spec), del));
}

namespace {

// Gap lengths i_1 - 1, i_2 - i_1 - 1, ..., n - i_k.
std::vector<int> gap_lengths(int n, const std::vector<int>& deleted) {
    std::vector<int> gaps;
    int prev = 0;
    for (int i : deleted) {
        gaps.push_back(i - prev - 1);
        prev = i;
    }
    gaps.push_back(n - prev);
    return gaps;
}

ExactInt product_over_gaps(const std::vector<ExactInt>& dets, int n, const std::vector<int>& deleted) {
    ExactInt prod = 1;
    for (int g : gap_lengths(n, deleted)) {
        prod *= dets[g];
        if (prod == 0) break;
    }
    return prod;
}

}  // namespace

ExactInt principal_minor_product(const HessFSpec& spec, const MinorIndexSet& del) {
    spec.validate();
    del.validate(spec.n);
    return product_over_gaps(det_fnp_table(spec.n, spec.p), spec.n, del.deleted);
}

ExactInt principal_minor(const HessFSpec& spec, const MinorIndexSet& del) {
    const ExactInt direct = principal_minor_direct(spec, del);
    const ExactInt product = principal_minor_product(spec, del);
    if (direct != product) {
        throw ConsistencyError("principal_minor: elimination gives " + direct.str() + ", block product gives " +
                               product.str());
    }
    return direct;
}

ExactInt sum_principal_minors_enumerated(const HessFSpec& spec, int order) {
    spec.validate();
    const int n = spec.n;
    if (order < 0 || order > n) throw DomainError("sum_principal_minors: need 0 <= order <= n");
    const int k = n - order;
    const std::vector<ExactInt> dets = det_fnp_table(n, spec.p);
    ExactInt total = 0;
    std::vector<int> deleted(k);
    for (int t = 0; t < k; ++t) deleted[t] = t + 1;
    while (true) {
        total += product_over_gaps(dets, n, deleted);
        int t = k - 1;
        while (t >= 0 && deleted[t] == n - (k - 1 - t)) --t;
        if (t < 0) break;
        ++deleted[t];
        for (int u = t + 1; u < k; ++u) deleted[u] = deleted[u - 1] + 1;
    }
    return total;
}

ExactInt sum_principal_minors(const HessFSpec& spec, int order) {
    spec.validate();
    if (order < 0 || order > spec.n) throw DomainError("sum_principal_minors: need 0 <= order <= n");
    if (spec.n <= kMinorEnumerationLimit) return sum_principal_minors_enumerated(spec, order);
    const int k = spec.n - order;
    return count_marked(spec.n + k * spec.p - 2 * k, k, spec.p);
}

IntPoly charpoly(const HessFSpec& spec) {
    spec.validate();
    if (spec.n > kMaxDenseDimension) {
        throw SizeError("charpoly: n = " + std::to_string(spec.n) + " too large", kMaxDenseDimension);
    }
    // Column m of F - xI holds 1 in rows 1..m-p+1 and -x added on the
    // diagonal, so a_{m+1} = (a_1 + ... + a_{m-p+1}) - x a_m.
    const IntPoly minus_x = IntPoly::monomial(-1, 1);
    std::vector<IntPoly> a{IntPoly(1)};
    std::vector<IntPoly> prefix{IntPoly(1)};
    for (int m = 1; m <= spec.n; ++m) {
        IntPoly next = minus_x * a[m - 1];
        const int top = m - spec.p + 1;
        if (top >= 1) next += prefix[top - 1];
        prefix.push_back(prefix.back() + next);
        a.push_back(std::move(next));
    }
    IntPoly det = std::move(a.back());
    if (spec.n % 2) det = -det;
    return det;
}

IntPoly charpoly_generic(const HessFSpec& spec) {
    spec.validate();
    GenericHess<IntPoly> h(spec.n);
    for (int j = 1; j <= spec.n; ++j) {
        for (int i = 1; i <= j; ++i) {
            h.at(i, j) = IntPoly(spec.entry(i, j));
            if (i == j) h.at(i, j) -= IntPoly::x();
        }
    }
    IntPoly det = det_by_recurrence(h, IntPoly(1)).back();
    if (spec.n % 2) det = -det;
    return det;
}

}  // namespace combilab
