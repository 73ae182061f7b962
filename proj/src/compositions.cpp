#include "combilab/compositions.hpp"

#include <numeric>
#include <string>

#include "combilab/errors.hpp"

namespace combilab {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

void guard(int value, int limit, const std::string& what) {
    if (value > limit) {
        throw SizeError(what + " = " + std::to_string(value) + " exceeds the enumeration guard", limit);
    }
}

void guard_results(const ExactInt& count, const EnumGuards& guards, const std::string& what) {
    if (count > guards.max_results) {
        throw SizeError(what + " would list " + count.str() + " compositions", guards.max_results);
    }
}

// DFS emitting a node before its children, with children in increasing part
// order: this is exactly lexicographic order on part vectors.
struct MarkedWalk {
    int k;
    int p;
    std::vector<Composition>* out;
    Composition cur;

    void run(int remaining, int marks) {
        if (remaining == 0 && marks == k) out->push_back(cur);
        if (marks < k && remaining >= p - 1 && remaining - (p - 1) >= (k - marks - 1) * (p - 1)) {
            cur.parts.push_back(p - 1);
            run(remaining - (p - 1), marks + 1);
            cur.parts.pop_back();
        }
        for (int v = p; v <= remaining; ++v) {
            cur.parts.push_back(v);
            run(remaining - v, marks);
            cur.parts.pop_back();
        }
    }
};

struct LargeWalk {
    int k;
    int a;
    std::vector<Composition>* out;
    Composition cur;

    void run(int remaining, int large) {
        if (remaining == 0) {
            if (large == k) out->push_back(cur);
            return;
        }
        for (int v = 1; v <= remaining; ++v) {
            const int large_after = large + (v >= a ? 1 : 0);
            if (large_after > k) continue;
            // The large parts still owed need at least a each.
            if (remaining - v < static_cast<long long>(k - large_after) * a) continue;
            cur.parts.push_back(v);
            run(remaining - v, large_after);
            cur.parts.pop_back();
        }
    }
};

}  // namespace

long long Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }

std::string to_string(const Composition& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.parts[i]);
    }
    return out + ")";
}

std::vector<ExactInt> minpart_table(int max_n, int p) {
    require(max_n >= 0 && p >= 1, "minpart_table: need n >= 0 and p >= 1");
    // c(t) = sum_{j=p..t} c(t-j) = prefix(t-p), the first part being j.
    std::vector<ExactInt> c(max_n + 1);
    std::vector<ExactInt> prefix(max_n + 1);
    c[0] = 1;
    prefix[0] = 1;
    for (int t = 1; t <= max_n; ++t) {
        c[t] = (t >= p) ? prefix[t - p] : ExactInt(0);
        prefix[t] = prefix[t - 1] + c[t];
    }
    return c;
}

ExactInt count_minpart(int n, int p) {
    require(n >= 0 && p >= 1, "count_minpart: need n >= 0 and p >= 1");
    return minpart_table(n, p)[n];
}

ExactInt count_marked(int n, int k, int p) {
    require(n >= 0 && k >= 0 && p >= 1, "count_marked: need n >= 0, k >= 0, p >= 1");
    // f[r][t]: sequences of total t using r marked parts. Appending a part >= p
    // is a prefix sum over the same row; appending p-1 moves down a row.
    const int mark = p - 1;
    std::vector<std::vector<ExactInt>> f(k + 1, std::vector<ExactInt>(n + 1));
    for (int r = 0; r <= k; ++r) {
        std::vector<ExactInt> prefix(n + 1);
        for (int t = 0; t <= n; ++t) {
            ExactInt v = (r == 0 && t == 0) ? ExactInt(1) : ExactInt(0);
            if (r > 0 && t >= mark) v += f[r - 1][t - mark];
            if (t >= p) v += prefix[t - p];
            f[r][t] = v;
            prefix[t] = (t > 0 ? prefix[t - 1] : ExactInt(0)) + f[r][t];
        }
    }
    return f[k][n];
}

ExactInt convolution_rhs(int n, int k, int p) {
    require(k >= 0 && p >= 1, "convolution_rhs: need k >= 0 and p >= 1");
    // Shifting j_t + 1 = s_t >= 0 turns the tuple sum into the (k+1)-fold
    // self-convolution of c(., p) evaluated at n + k + 1.
    const long long target = static_cast<long long>(n) + k + 1;
    if (target < 0) return 0;
    const auto T = static_cast<int>(target);
    const std::vector<ExactInt> c = minpart_table(T, p);
    std::vector<ExactInt> acc(T + 1);
    acc[0] = 1;
    for (int factor = 0; factor <= k; ++factor) {
        std::vector<ExactInt> next(T + 1);
        for (int i = 0; i <= T; ++i) {
            if (acc[i] == 0) continue;
            for (int j = 0; i + j <= T; ++j) next[i + j] += acc[i] * c[j];
        }
        acc = std::move(next);
    }
    return acc[T];
}

ExactInt count_exactly_k_large(int total, int k, int a) {
    require(total >= 0 && k >= 0 && a >= 1, "count_exactly_k_large: need total >= 0, k >= 0, a >= 1");
    // f[r][t] = sum_{v=1}^{min(a-1,t)} f[r][t-v] + sum_{v>=a} f[r-1][t-v]
    std::vector<std::vector<ExactInt>> f(k + 1, std::vector<ExactInt>(total + 1));
    std::vector<std::vector<ExactInt>> prefix(k + 1, std::vector<ExactInt>(total + 1));
    auto range_sum = [&](int r, int lo, int hi) -> ExactInt {
        if (lo > hi || hi < 0) return 0;
        if (lo < 0) lo = 0;
        return prefix[r][hi] - (lo > 0 ? prefix[r][lo - 1] : ExactInt(0));
    };
    for (int r = 0; r <= k; ++r) {
        for (int t = 0; t <= total; ++t) {
            ExactInt v = (r == 0 && t == 0) ? ExactInt(1) : ExactInt(0);
            v += range_sum(r, t - (a - 1), t - 1);
            if (r > 0) v += range_sum(r - 1, 0, t - a);
            f[r][t] = v;
            prefix[r][t] = (t > 0 ? prefix[r][t - 1] : ExactInt(0)) + v;
        }
    }
    return f[k][total];
}

ExactInt count_weak_with_zeros(int n, int k) {
    require(n >= 0 && k >= 0, "count_weak_with_zeros: need n >= 0 and k >= 0");
    if (n == 0) return 1;  // only the all-zero word of length k
    // C(n-1, l-1) positive compositions of length l; k zeros go into l+1 gaps
    // with repetition, C(l+k, k) ways.
    ExactInt total = 0;
    for (int len = 1; len <= n; ++len) total += binomial(n - 1, len - 1) * binomial(len + k, k);
    return total;
}

std::vector<Composition> enumerate_minpart(int n, int p, const EnumGuards& guards) {
    require(n >= 0 && p >= 1, "enumerate_minpart: need n >= 0 and p >= 1");
    guard(n, guards.minpart_total, "enumerate_minpart: n");
    guard_results(count_minpart(n, p), guards, "enumerate_minpart");
    std::vector<Composition> out;
    // Minpart is the marked family with no marks.
    MarkedWalk walk{0, p, &out, {}};
    walk.run(n, 0);
    return out;
}

std::vector<Composition> enumerate_marked(int n, int k, int p, const EnumGuards& guards) {
    require(n >= 0 && k >= 0 && p >= 1, "enumerate_marked: need n >= 0, k >= 0, p >= 1");
    guard(n, guards.marked_total, "enumerate_marked: n");
    guard(k, guards.marked_k, "enumerate_marked: k");
    guard_results(count_marked(n, k, p), guards, "enumerate_marked");
    std::vector<Composition> out;
    MarkedWalk walk{k, p, &out, {}};
    walk.run(n, 0);
    return out;
}

std::vector<Composition> enumerate_exactly_k_large(int total, int k, int a, const EnumGuards& guards) {
    require(total >= 0 && k >= 0 && a >= 1, "enumerate_exactly_k_large: need total >= 0, k >= 0, a >= 1");
    guard(total, guards.exact_large_total, "enumerate_exactly_k_large: total");
    guard_results(count_exactly_k_large(total, k, a), guards, "enumerate_exactly_k_large");
    std::vector<Composition> out;
    LargeWalk walk{k, a, &out, {}};
    walk.run(total, 0);
    return out;
}

int injective_threshold(const USequence& s) { return s.length() - s.count_x() + 1; }

Composition decode_usequence(const USequence& s, int a) {
    Composition c;
    int running = 0;
    for (USymbol sym : s.symbols) {
        switch (sym) {
            case USymbol::One:
                running += 1;
                break;
            case USymbol::OneBar:
                c.parts.push_back(running + 1);
                running = 0;
                break;
            case USymbol::X:
                c.parts.push_back(running + a);
                running = 0;
                break;
        }
    }
    if (running > 0) c.parts.push_back(running);
    return c;
}

Composition usequence_to_composition(const USequence& s, int a) {
    if (!s.valid()) {
        throw InvariantError("usequence_to_composition: '" + to_string(s) + "' is not a u-sequence");
    }
    if (a < injective_threshold(s)) {
        throw InjectivityError("usequence_to_composition: a = " + std::to_string(a) +
                               " is below the injectivity threshold " + std::to_string(injective_threshold(s)));
    }
    return decode_usequence(s, a);
}

USequence composition_to_usequence(const Composition& c, int a) {
    if (a < 1) throw EncodingError("composition_to_usequence: a must be positive");
    USequence s;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        const int v = c.parts[i];
        if (v < 1) {
            throw EncodingError("composition_to_usequence: part " + std::to_string(v) + " has no preimage");
        }
        const bool last = i + 1 == c.parts.size();
        if (v >= a) {
            s.symbols.insert(s.symbols.end(), v - a, USymbol::One);
            s.symbols.push_back(USymbol::X);
        } else if (!last) {
            s.symbols.insert(s.symbols.end(), v - 1, USymbol::One);
            s.symbols.push_back(USymbol::OneBar);
        } else {
            s.symbols.insert(s.symbols.end(), v, USymbol::One);
        }
    }
    return s;
}

void FamilySpec::validate() const {
    require(n >= 0, "family: n must be nonnegative");
    require(k >= 0, "family: k must be nonnegative");
    switch (family) {
        case Family::MinPart:
        case Family::Marked:
            require(p >= 1, "family: p must be positive");
            break;
        case Family::ExactLarge:
            require(a >= 1, "family: a must be positive");
            break;
        case Family::WeakZeros:
            break;
    }
}

ExactInt FamilySpec::count() const {
    validate();
    switch (family) {
        case Family::MinPart: return count_minpart(n, p);
        case Family::Marked: return count_marked(n, k, p);
        case Family::ExactLarge: return count_exactly_k_large(n, k, a);
        case Family::WeakZeros: return count_weak_with_zeros(n, k);
    }
    return 0;
}

std::vector<Composition> FamilySpec::enumerate(const EnumGuards& guards) const {
    validate();
    switch (family) {
        case Family::MinPart: return enumerate_minpart(n, p, guards);
        case Family::Marked: return enumerate_marked(n, k, p, guards);
        case Family::ExactLarge: return enumerate_exactly_k_large(n, k, a, guards);
        case Family::WeakZeros: return enumerate_marked(n, k, 1, guards);
    }
    return {};
}

}  // namespace combilab
