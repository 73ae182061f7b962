#pragma once

#include <string>
#include <vector>

#include "combilab/exactmath.hpp"
#include "combilab/guards.hpp"

namespace combilab {

/// Ground set of `n` two-element main blocks plus an additional block of `m`
/// elements. n = 0 is accepted as the degenerate ground set made of Y alone.
struct BlockSetSpec {
    int n = 1;
    int m = 0;

    int ground_size() const { return 2 * n + m; }
};

enum class Pick { First, Second, Both };

/// A subset of the ground set meeting every main block, stored per block so
/// that the meeting condition cannot be violated.
struct Inset {
    std::vector<Pick> main;  // one pick per main block
    std::vector<int> extra;  // strictly increasing indices into Y

    int size() const;
    /// Elements beyond one per main block: BOTH-blocks plus |extra|.
    int surplus() const;
    /// Characteristic vector over (X_1 first, X_1 second, ..., X_n second, Y_0, ...).
    std::vector<bool> characteristic(int m) const;

    friend bool operator==(const Inset&, const Inset&) = default;
};

std::string to_string(const Inset& z);

enum class USymbol { One, OneBar, X };

/// A word over {1, 1|, x}. A valid u-sequence never ends in 1|.
struct USequence {
    std::vector<USymbol> symbols;

    int length() const { return static_cast<int>(symbols.size()); }
    int count_x() const;
    bool valid() const { return !symbols.empty() && symbols.back() != USymbol::OneBar; }

    friend bool operator==(const USequence&, const USequence&) = default;
    friend auto operator<=>(const USequence&, const USequence&) = default;
};

/// Renders as e.g. "11|x".
std::string to_string(const USequence& s);
/// Inverse of to_string; throws EncodingError on anything else.
USequence parse_usequence(const std::string& text);

/// Inclusion-exclusion count of (n+k)-insets.
ExactInt count_insets_ie(int n, int k, int m);

/// Block-split count 2^{n-k} sum_i 2^i C(m,i) C(n,k-i). Throws DomainError when k > n + m.
ExactInt count_insets_direct(int n, int k, int m);

/// All (n+k)-insets, ordered lexicographically by their sorted element lists.
std::vector<Inset> enumerate_insets(int n, int k, int m, const EnumGuards& guards = EnumGuards::from_env());

/// All u(n,k,x)-sequences in lexicographic order with 1 < 1| < x.
std::vector<USequence> enumerate_usequences(int n, int k);

/// Map an (n-1+k)-inset over n-1 main blocks and |Y| = 1 to a u(n,k,x)-sequence.
USequence inset_to_usequence(const Inset& z, int n);

/// Inverse of inset_to_usequence.
Inset usequence_to_inset(const USequence& s);

}  // namespace combilab
