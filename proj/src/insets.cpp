#include "combilab/insets.hpp"

#include <algorithm>
#include <string>

#include "combilab/errors.hpp"

namespace combilab {

namespace {

void require_counting_domain(const char* op, int n, int k, int m) {
    if (n < 0 || k < 0 || m < 0) {
        throw DomainError(std::string(op) + ": n, k, m must be nonnegative");
    }
}

std::vector<int> element_list(const Inset& z, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (z.main[i] != Pick::Second) out.push_back(2 * i);
        if (z.main[i] != Pick::First) out.push_back(2 * i + 1);
    }
    for (int y : z.extra) out.push_back(2 * n + y);
    return out;
}

// Every strictly increasing size-r subset of [0, m).
void subsets_of_size(int m, int r, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v <= m - (r - static_cast<int>(cur.size())); ++v) {
        cur.push_back(v);
        subsets_of_size(m, r, v + 1, cur, out);
        cur.pop_back();
    }
}

void usequence_walk(int n, int k, USequence& cur, std::vector<USequence>& out) {
    const int placed = cur.length();
    const int xs = cur.count_x();
    if (placed == n) {
        if (xs == k && cur.valid()) out.push_back(cur);
        return;
    }
    for (USymbol s : {USymbol::One, USymbol::OneBar, USymbol::X}) {
        const int xs_after = xs + (s == USymbol::X ? 1 : 0);
        const int left = n - placed - 1;
        if (xs_after > k || xs_after + left < k) continue;
        cur.symbols.push_back(s);
        usequence_walk(n, k, cur, out);
        cur.symbols.pop_back();
    }
}

}  // namespace

int Inset::size() const {
    int s = static_cast<int>(extra.size());
    for (Pick p : main) s += (p == Pick::Both) ? 2 : 1;
    return s;
}

int Inset::surplus() const { return size() - static_cast<int>(main.size()); }

std::vector<bool> Inset::characteristic(int m) const {
    const int n = static_cast<int>(main.size());
    std::vector<bool> bits(2 * n + m, false);
    for (int e : element_list(*this, n)) bits.at(e) = true;
    return bits;
}

std::string to_string(const Inset& z) {
    std::string out;
    for (std::size_t i = 0; i < z.main.size(); ++i) {
        if (i) out += ',';
        out += z.main[i] == Pick::First ? 'F' : z.main[i] == Pick::Second ? 'S' : 'B';
    }
    out += " | {";
    for (std::size_t i = 0; i < z.extra.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(z.extra[i]);
    }
    out += '}';
    return out;
}

int USequence::count_x() const {
    return static_cast<int>(std::count(symbols.begin(), symbols.end(), USymbol::X));
}

std::string to_string(const USequence& s) {
    std::string out;
    for (USymbol sym : s.symbols) {
        switch (sym) {
            case USymbol::One: out += "1"; break;
            case USymbol::OneBar: out += "1|"; break;
            case USymbol::X: out += "x"; break;
        }
    }
    return out;
}

USequence parse_usequence(const std::string& text) {
    USequence s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'x') {
            s.symbols.push_back(USymbol::X);
        } else if (text[i] == '1') {
            if (i + 1 < text.size() && text[i + 1] == '|') {
                s.symbols.push_back(USymbol::OneBar);
                ++i;
            } else {
                s.symbols.push_back(USymbol::One);
            }
        } else {
            throw EncodingError("parse_usequence: unexpected character '" + std::string(1, text[i]) + "'");
        }
    }
    return s;
}

ExactInt count_insets_ie(int n, int k, int m) {
    require_counting_domain("count_insets_ie", n, k, m);
    ExactInt total = 0;
    for (int i = 0; i <= n; ++i) {
        ExactInt term = binomial(n, i) * binomial(2LL * n - 2LL * i + m, static_cast<long long>(n) + k);
        if (i % 2) total -= term; else total += term;
    }
    return total;
}

ExactInt count_insets_direct(int n, int k, int m) {
    require_counting_domain("count_insets_direct", n, k, m);
    if (k > n + m) {
        throw DomainError("count_insets_direct: k = " + std::to_string(k) + " exceeds n + m = " +
                          std::to_string(n + m));
    }
    // 2^{n-k} * 2^i is taken termwise: a term with k - i > n vanishes through
    // the binomial, so every surviving exponent n - k + i is nonnegative.
    ExactInt total = 0;
    for (int i = 0; i <= m; ++i) {
        ExactInt b = binomial(n, k - i);
        if (b == 0) continue;
        total += pow2(n - k + i) * binomial(m, i) * b;
    }
    return total;
}

std::vector<Inset> enumerate_insets(int n, int k, int m, const EnumGuards& guards) {
    require_counting_domain("enumerate_insets", n, k, m);
    if (2 * n + m > guards.inset_ground) {
        throw SizeError("enumerate_insets: ground set of " + std::to_string(2 * n + m) + " elements too large",
                        guards.inset_ground);
    }
    if (const ExactInt expected = count_insets_ie(n, k, m); expected > guards.max_results) {
        throw SizeError("enumerate_insets: would list " + expected.str() + " insets", guards.max_results);
    }
    std::vector<Inset> out;
    std::vector<std::vector<int>> extras;
    std::vector<int> scratch;
    Inset z;
    z.main.assign(n, Pick::First);
    // Walk all 3^n main-pick assignments; the extra block supplies the rest of the surplus.
    while (true) {
        const int both = static_cast<int>(std::count(z.main.begin(), z.main.end(), Pick::Both));
        const int need = k - both;
        if (need >= 0 && need <= m) {
            extras.clear();
            subsets_of_size(m, need, 0, scratch, extras);
            for (auto& e : extras) {
                z.extra = e;
                out.push_back(z);
            }
        }
        int pos = 0;
        while (pos < n && z.main[pos] == Pick::Both) {
            z.main[pos] = Pick::First;
            ++pos;
        }
        if (pos == n) break;
        z.main[pos] = z.main[pos] == Pick::First ? Pick::Second : Pick::Both;
    }
    std::sort(out.begin(), out.end(),
              [n](const Inset& a, const Inset& b) { return element_list(a, n) < element_list(b, n); });
    return out;
}

std::vector<USequence> enumerate_usequences(int n, int k) {
    if (n < 1 || k < 0 || k > n) {
        throw DomainError("enumerate_usequences: need n >= 1 and 0 <= k <= n");
    }
    std::vector<USequence> out;
    USequence cur;
    usequence_walk(n, k, cur, out);
    return out;
}

USequence inset_to_usequence(const Inset& z, int n) {
    if (n < 1 || static_cast<int>(z.main.size()) != n - 1) {
        throw InvariantError("inset_to_usequence: inset must have n-1 main blocks");
    }
    if (z.extra.size() > 1 || (z.extra.size() == 1 && z.extra[0] != 0)) {
        throw InvariantError("inset_to_usequence: additional block has exactly one element");
    }
    const bool y_picked = !z.extra.empty();

    USequence s;
    s.symbols.assign(n, USymbol::One);
    s.symbols[n - 1] = y_picked ? USymbol::X : USymbol::One;
    std::vector<int> singles;
    for (int i = 0; i < n - 1; ++i) {
        if (z.main[i] == Pick::Both) {
            s.symbols[i] = USymbol::X;
        } else {
            singles.push_back(i);
        }
    }
    // Singly picked blocks pair with the free ONE positions left to right.
    // When the final symbol is ONE it takes no part in the pairing.
    std::size_t next = 0;
    for (int pos = 0; pos < n - 1; ++pos) {
        if (s.symbols[pos] != USymbol::One) continue;
        if (z.main[singles.at(next)] == Pick::Second) s.symbols[pos] = USymbol::OneBar;
        ++next;
    }
    return s;
}

Inset usequence_to_inset(const USequence& s) {
    if (!s.valid()) {
        throw InvariantError("usequence_to_inset: '" + to_string(s) + "' is not a u-sequence");
    }
    const int n = s.length();
    Inset z;
    if (s.symbols[n - 1] == USymbol::X) z.extra.push_back(0);
    std::vector<int> ones;
    z.main.assign(n - 1, Pick::First);
    for (int pos = 0; pos < n - 1; ++pos) {
        if (s.symbols[pos] == USymbol::X) {
            z.main[pos] = Pick::Both;
        } else {
            ones.push_back(pos);
        }
    }
    std::size_t next = 0;
    for (int i = 0; i < n - 1; ++i) {
        if (z.main[i] == Pick::Both) continue;
        z.main[i] = s.symbols[ones.at(next)] == USymbol::OneBar ? Pick::Second : Pick::First;
        ++next;
    }
    return z;
}

}  // namespace combilab
