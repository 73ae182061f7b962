#pragma once

#include <compare>
#include <string>
#include <vector>

#include "combilab/exactmath.hpp"
#include "combilab/guards.hpp"
#include "combilab/insets.hpp"

namespace combilab {

/// Ordered parts; zero parts are allowed so that weak compositions fit too.
/// The empty composition is the unique composition of 0 with no parts.
struct Composition {
    std::vector<int> parts;

    long long total() const;
    int length() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// "(2,3)"; the empty composition renders as "()".
std::string to_string(const Composition& c);

// ---- counting -------------------------------------------------------------

/// c(n, p): compositions of n with every part >= p, with c(0, p) = 1.
ExactInt count_minpart(int n, int p);

/// c(0..max_n, p) as one table.
std::vector<ExactInt> minpart_table(int max_n, int p);

/// c(n, k, p, p-1): compositions of n with exactly k parts equal to p-1 and
/// every other part >= p. For p = 1 the marked parts are zeros.
ExactInt count_marked(int n, int k, int p);

/// Sum over (j_1..j_{k+1}), j_t >= -1, sum n, of prod c(j_t + 1, p).
ExactInt convolution_rhs(int n, int k, int p);

/// Compositions of `total` (parts >= 1) with exactly k parts >= a.
ExactInt count_exactly_k_large(int total, int k, int a);

/// Weak compositions of n with exactly k zero parts, counted by inserting k
/// zeros into each positive composition.
ExactInt count_weak_with_zeros(int n, int k);

// ---- enumeration (lexicographic) -----------------------------------------

std::vector<Composition> enumerate_minpart(int n, int p, const EnumGuards& guards = EnumGuards::from_env());
std::vector<Composition> enumerate_marked(int n, int k, int p, const EnumGuards& guards = EnumGuards::from_env());
std::vector<Composition> enumerate_exactly_k_large(int total, int k, int a,
                                                   const EnumGuards& guards = EnumGuards::from_env());

// ---- u-sequences and compositions -----------------------------------------

/// Smallest a for which decoding u-sequences of this shape is injective:
/// (length - #x) + 1.
int injective_threshold(const USequence& s);

/// Sum runs of ones; 1| and x close the current part (x contributing a), the
/// end of the word closes the last one. No threshold check.
Composition decode_usequence(const USequence& s, int a);

/// decode_usequence, but throws InjectivityError when a is below the
/// injectivity threshold and InvariantError for an invalid sequence.
Composition usequence_to_composition(const USequence& s, int a);

/// Inverse of decode_usequence. Throws EncodingError for parts < 1 or a < 1.
USequence composition_to_usequence(const Composition& c, int a);

// ---- family dispatch ------------------------------------------------------

enum class Family { MinPart, Marked, ExactLarge, WeakZeros };

struct FamilySpec {
    Family family = Family::MinPart;
    int n = 0;  // total for every family
    int k = 0;
    int p = 1;
    int a = 1;

    /// Throws DomainError when the parameters leave the family's domain.
    void validate() const;
    ExactInt count() const;
    std::vector<Composition> enumerate(const EnumGuards& guards = EnumGuards::from_env()) const;
};

}  // namespace combilab
