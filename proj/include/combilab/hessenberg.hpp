#pragma once

#include <string>
#include <vector>

#include "combilab/errors.hpp"
#include "combilab/exactmath.hpp"

namespace combilab {

/// Row-major dense matrix, indexed from 0.
template <class Scalar>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

using IntMatrix = DenseMatrix<ExactInt>;

/// Square upper Hessenberg matrix whose subdiagonal is fixed at -1.
///
/// Only the entries on and above the diagonal are stored; at(i, j) is
/// 1-based with i <= j. Ring needs +, * and construction from int.
template <class Ring>
class GenericHess {
public:
    explicit GenericHess(int n) : n_(n), columns_(n) {
        for (int j = 0; j < n; ++j) columns_[j].assign(j + 1, Ring(0));
    }

    int dimension() const { return n_; }
    Ring& at(int i, int j) { return columns_.at(j - 1).at(i - 1); }
    const Ring& at(int i, int j) const { return columns_.at(j - 1).at(i - 1); }

    /// Accepts only matrices that are upper Hessenberg with subdiagonal -1.
    static GenericHess from_matrix(const DenseMatrix<Ring>& m) {
        if (m.rows() != m.cols()) throw InvariantError("GenericHess: matrix must be square");
        GenericHess h(m.rows());
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                if (i <= j) {
                    h.at(i + 1, j + 1) = m(i, j);
                } else if (i == j + 1 ? !(m(i, j) == Ring(-1)) : !(m(i, j) == Ring(0))) {
                    throw InvariantError("GenericHess: entry (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ") breaks the unit-subdiagonal Hessenberg shape");
                }
            }
        }
        return h;
    }

private:
    int n_;
    std::vector<std::vector<Ring>> columns_;  // columns_[j-1][i-1] = p_{i,j}
};

/// Runs a_{m+1} = sum_{i=1..m} p_{i,m} a_i for m = 1..n and returns
/// (a_1, ..., a_{n+1}). The last element equals a_1 * det(h).
template <class Ring>
std::vector<Ring> det_by_recurrence(const GenericHess<Ring>& h, const Ring& a1) {
    const int n = h.dimension();
    std::vector<Ring> a;
    a.reserve(n + 1);
    a.push_back(a1);
    for (int m = 1; m <= n; ++m) {
        Ring next(0);
        for (int i = 1; i <= m; ++i) {
            const Ring& coeff = h.at(i, m);
            if (coeff == Ring(0)) continue;
            next += coeff * a[i - 1];
        }
        a.push_back(std::move(next));
    }
    return a;
}

/// The family F(n, p): -1 on the subdiagonal, 1 where column - row >= p - 1.
struct HessFSpec {
    int n = 0;
    int p = 1;

    /// 1-based entry rule.
    int entry(int i, int j) const {
        if (i == j + 1) return -1;
        return (j - i >= p - 1) ? 1 : 0;
    }
    void validate() const;
};

/// Strictly increasing 1-based row/column indices to delete.
struct MinorIndexSet {
    std::vector<int> deleted;

    void validate(int n) const;
};

inline constexpr int kMaxDenseDimension = 2000;

IntMatrix build_matrix(const HessFSpec& spec);
GenericHess<ExactInt> build_hess(const HessFSpec& spec);

/// Fraction-free (Bareiss) elimination with row pivoting; det of 0x0 is 1.
ExactInt det_bareiss(IntMatrix m);

IntMatrix principal_submatrix(const IntMatrix& m, const MinorIndexSet& del);

/// det F(n, p) from the two-term recurrence, det F(0, p) = 1.
ExactInt det_fnp(int n, int p);
std::vector<ExactInt> det_fnp_table(int max_n, int p);

/// Minor by elimination on the explicit submatrix.
ExactInt principal_minor_direct(const HessFSpec& spec, const MinorIndexSet& del);
/// Minor as the product of det F over the gaps between deleted indices.
ExactInt principal_minor_product(const HessFSpec& spec, const MinorIndexSet& del);
/// Both routes; throws ConsistencyError if they differ.
ExactInt principal_minor(const HessFSpec& spec, const MinorIndexSet& del);

/// Largest n for which sum_principal_minors enumerates deletion sets.
inline constexpr int kMinorEnumerationLimit = 20;

/// Sum of all principal minors of the given order of F(n, p).
ExactInt sum_principal_minors(const HessFSpec& spec, int order);
/// Always enumerates deletion sets, regardless of n.
ExactInt sum_principal_minors_enumerated(const HessFSpec& spec, int order);

/// det(xI - F(n, p)), monic.
IntPoly charpoly(const HessFSpec& spec);
/// Same polynomial by running det_by_recurrence over the full polynomial
/// table of F - xI. Quadratic in stored entries, so meant for small n.
IntPoly charpoly_generic(const HessFSpec& spec);

}  // namespace combilab
