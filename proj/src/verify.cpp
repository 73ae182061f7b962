#include "combilab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "combilab/chebyshev.hpp"
#include "combilab/compositions.hpp"
#include "combilab/errors.hpp"
#include "combilab/hessenberg.hpp"
#include "combilab/insets.hpp"

namespace combilab {

namespace {

template <class T>
std::string str(const T& v) {
    if constexpr (requires { to_string(v); }) {
        return to_string(v);
    } else {
        std::ostringstream os;
        os << v;
        return os.str();
    }
}

std::string params(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::string out;
    for (const auto& [key, value] : kv) {
        if (!out.empty()) out += ' ';
        out += key;
        out += '=';
        out += std::to_string(value);
    }
    return out;
}

// Sweeps only materialize enumerations up to this many objects.
constexpr long long kSweepEnumLimit = 200'000;

// Collects one case at a time; a case fails if any of its checks fails, and
// only its first failing check is recorded.
class Sweep {
public:
    explicit Sweep(VerifyReport& report) : report_(report) {}

    void begin(std::string params) {
        params_ = std::move(params);
        failed_ = false;
        ++report_.cases;
    }

    template <class A, class B>
    bool expect_eq(const std::string& what, const A& lhs, const B& rhs) {
        if (lhs == rhs) return true;
        fail(what, str(lhs), str(rhs));
        return false;
    }

    void fail(const std::string& what, std::string lhs, std::string rhs) {
        if (failed_) return;
        failed_ = true;
        report_.failures.push_back({params_ + " " + what, std::move(lhs), std::move(rhs)});
    }

    // Runs body, turning an escaped library error into a case failure.
    void guarded(const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            fail("raised", e.what(), "no error");
        }
    }

private:
    VerifyReport& report_;
    std::string params_;
    bool failed_ = false;
};

// ---------------------------------------------------------------------------

void inset_counts_agree(const VerifyGrid& g, VerifyReport& r) {
    const int max_n = g.max_n.value_or(12);
    const int max_m = g.max_m.value_or(6);
    const int max_ground = g.max_ground.value_or(14);
    r.grid = "closed forms and block split: 1<=n<=" + std::to_string(max_n) + ", 0<=m<=" + std::to_string(max_m) +
             ", 0<=k<=n+m; enumeration: 2n+m<=" + std::to_string(max_ground);
    Sweep s(r);
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
            for (int k = 0; k <= n + m; ++k) {
                s.begin(params({{"n", n}, {"k", k}, {"m", m}}));
                s.guarded([&] {
                    const ExactInt ie = count_insets_ie(n, k, m);
                    if (!s.expect_eq("ie=direct", ie, count_insets_direct(n, k, m))) return;
                    ExactInt split = 0;
                    for (int i = 0; i <= m && i <= k; ++i) {
                        // N(n, j, 0) = 2^{n-j} C(n, j): j of the main blocks picked whole.
                        const int j = k - i;
                        if (j <= n) split += binomial(m, i) * pow2(n - j) * binomial(n, j);
                    }
                    s.expect_eq("block-split", ie, split);
                });
            }
        }
    }
    const EnumGuards guards = EnumGuards{}.with_size_limit(std::max(max_ground, EnumGuards{}.inset_ground));
    for (int n = 1; 2 * n <= max_ground; ++n) {
        for (int m = 0; 2 * n + m <= max_ground; ++m) {
            for (int k = 0; k <= n + m; ++k) {
                s.begin(params({{"n", n}, {"k", k}, {"m", m}}));
                s.guarded([&] {
                    const ExactInt ie = count_insets_ie(n, k, m);
                    const ExactInt direct = count_insets_direct(n, k, m);
                    const auto listed = enumerate_insets(n, k, m, guards);
                    s.expect_eq("ie=direct", ie, direct);
                    s.expect_eq("ie=|enumerate|", ie, ExactInt(listed.size()));
                });
            }
        }
    }
}

void inset_sequence_bijection(const VerifyGrid& g, VerifyReport& r) {
    const int max_n = g.max_n.value_or(10);
    r.grid = "1<=n<=" + std::to_string(max_n) + ", 0<=k<=n; insets over n-1 main blocks and |Y|=1";
    Sweep s(r);
    const EnumGuards guards = EnumGuards{}.with_size_limit(std::max(2 * max_n, EnumGuards{}.inset_ground));
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            s.begin(params({{"n", n}, {"k", k}}));
            s.guarded([&] {
                const auto seqs = enumerate_usequences(n, k);
                const auto insets = enumerate_insets(n - 1, k, 1, guards);
                if (!s.expect_eq("|u(n,k,x)|=N(n-1,k,1)", ExactInt(seqs.size()), count_insets_direct(n - 1, k, 1)))
                    return;
                if (!s.expect_eq("|insets|=|u(n,k,x)|", insets.size(), seqs.size())) return;
                std::set<USequence> image;
                for (const auto& z : insets) {
                    const USequence u = inset_to_usequence(z, n);
                    if (!u.valid() || u.length() != n || u.count_x() != k) {
                        s.fail("image is a u(n,k,x)-sequence", to_string(u), "valid");
                        return;
                    }
                    if (!s.expect_eq("inset round trip " + to_string(z), to_string(usequence_to_inset(u)),
                                     to_string(z)))
                        return;
                    image.insert(u);
                }
                s.expect_eq("injective", image.size(), insets.size());
                for (const auto& u : seqs) {
                    const Inset z = usequence_to_inset(u);
                    if (!s.expect_eq("sequence round trip", to_string(inset_to_usequence(z, n)), to_string(u))) return;
                    if (!image.count(u)) {
                        s.fail("surjective", to_string(u), "in image");
                        return;
                    }
                }
            });
        }
    }
}

void chebyshev_coefficients(const VerifyGrid& g, VerifyReport& r) {
    const int max_n = g.max_n.value_or(20);
    const int max_enum = std::min(max_n, 9);
    r.grid = "0<=n<=" + std::to_string(max_n) + ", 0<=k<=n+1; sequence counts for n<=" + std::to_string(max_enum);
    Sweep s(r);
    std::vector<IntPoly> first;
    std::vector<IntPoly> second;
    for (int d = 0; d <= 2 * max_n + 2; ++d) {
        first.push_back(cheb_poly(ChebKind::First, d));
        second.push_back(cheb_poly(ChebKind::Second, d));
    }
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            s.begin(params({{"n", n}, {"k", k}}));
            s.guarded([&] {
                const IntPoly& t = first[n + k + 1];
                const ExactInt closed = t_coeff_closed(n, k);
                s.expect_eq("T coefficient", poly_coeff(t, n - k + 1), closed);
                s.expect_eq("alternating=bracket", t_coeff_alternating(n, k), t_coeff_bracket(n, k));
                s.expect_eq("|t|=N(n,k,1)", abs(closed), count_insets_ie(n, k, 1));
                for (std::size_t e = 0; e < t.coeffs().size(); ++e) {
                    if ((e + n + k + 1) % 2 && t.coeff(e) != 0) s.fail("parity", str(e), "zero coefficient");
                }
                if (k <= n) {
                    s.expect_eq("U coefficient", poly_coeff(second[n + k], n - k), u_coeff_closed(n, k));
                }
                if (n <= max_enum) {
                    s.expect_eq("|t|=|u(n+1,k,x)|", abs(closed), ExactInt(enumerate_usequences(n + 1, k).size()));
                }
            });
        }
    }
    s.begin("anchor t(1,1)");
    s.guarded([&] { s.expect_eq("value", t_coeff_closed(1, 1), ExactInt(-3)); });
    s.begin("anchor u(1,1)");
    s.guarded([&] { s.expect_eq("value", u_coeff_closed(1, 1), ExactInt(-1)); });
}

std::set<Composition> known_eight() {
    return {Composition{{3, 2}}, Composition{{3, 1, 1}}, Composition{{4, 1}}, Composition{{1, 3, 1}},
            Composition{{5}},    Composition{{1, 4}},    Composition{{1, 1, 3}}, Composition{{2, 3}}};
}

void eight_compositions_of_five(const VerifyGrid& g, VerifyReport& r) {
    const int max_len = g.max_n.value_or(8);
    r.grid = "total=5, k=1, a=3; cardinality for sequence length 1<=L<=" + std::to_string(max_len);
    Sweep s(r);
    s.begin("total=5 k=1 a=3");
    s.guarded([&] {
        const auto listed = enumerate_exactly_k_large(5, 1, 3);
        const std::set<Composition> got(listed.begin(), listed.end());
        s.expect_eq("count", listed.size(), std::size_t{8});
        s.expect_eq("no duplicates", got.size(), listed.size());
        if (got != known_eight()) {
            std::string lhs;
            for (const auto& c : listed) lhs += to_string(c);
            s.fail("set", lhs, "(3,2)(3,1,1)(4,1)(1,3,1)(5)(1,4)(1,1,3)(2,3)");
        }
        s.expect_eq("DP count", count_exactly_k_large(5, 1, 3), ExactInt(8));
        s.expect_eq("N(2,1,1)", count_insets_direct(2, 1, 1), ExactInt(8));
        for (const auto& u : enumerate_usequences(3, 1)) {
            const Composition c = usequence_to_composition(u, 3);
            if (!known_eight().count(c)) s.fail("decode " + to_string(u), to_string(c), "in the known set");
        }
    });
    for (int len = 1; len <= max_len; ++len) {
        for (int k = 0; k <= len; ++k) {
            const int a = len - k + 1;
            const int total = (len - k) * (k + 1) + k;
            s.begin(params({{"L", len}, {"k", k}, {"a", a}, {"total", total}}));
            s.guarded([&] {
                const ExactInt expected = count_insets_direct(len - 1, k, 1);
                s.expect_eq("DP count=N(L-1,k,1)", count_exactly_k_large(total, k, a), expected);
                if (expected <= kSweepEnumLimit) {
                    const EnumGuards guards = EnumGuards{}.with_size_limit(std::max(total, 20));
                    s.expect_eq("|enumerate|=N(L-1,k,1)",
                                ExactInt(enumerate_exactly_k_large(total, k, a, guards).size()), expected);
                }
            });
        }
    }
    r.notes.push_back("(n+1)(k+1)-k^2 at n=3,k=1 is " + std::to_string((3 + 1) * (1 + 1) - 1) +
                      "; the eight compositions have total 5 = (L-k)(k+1)+k with L=3, a=L-k+1=3");
}

void marked_convolution(const VerifyGrid& g, VerifyReport& r) {
    const int max_p = g.max_p.value_or(4);
    const int max_k = g.max_k.value_or(4);
    const int max_lhs = g.max_n.value_or(18);
    r.grid = "1<=p<=" + std::to_string(max_p) + ", 0<=k<=" + std::to_string(max_k) + ", n>=-(k+1), n+kp+1<=" +
             std::to_string(max_lhs);
    Sweep s(r);
    const EnumGuards guards{};
    for (int p = 1; p <= max_p; ++p) {
        for (int k = 0; k <= max_k; ++k) {
            for (int n = -(k + 1); n + k * p + 1 <= max_lhs; ++n) {
                const int lhs_total = n + k * p + 1;
                if (lhs_total < 0) continue;
                s.begin(params({{"n", n}, {"k", k}, {"p", p}}));
                s.guarded([&] {
                    const ExactInt lhs = count_marked(lhs_total, k, p);
                    s.expect_eq("DP=convolution", lhs, convolution_rhs(n, k, p));
                    if (lhs_total <= guards.marked_total && k <= guards.marked_k && lhs <= kSweepEnumLimit) {
                        s.expect_eq("DP=|enumerate|", lhs,
                                    ExactInt(enumerate_marked(lhs_total, k, p, guards).size()));
                    }
                });
            }
        }
    }
    // p = 2 factors c(j+1, 2) run through the Fibonacci numbers.
    s.begin("p=2 factors");
    s.guarded([&] {
        const auto c = minpart_table(max_lhs + 2, 2);
        for (int t = 3; t <= max_lhs + 2; ++t) s.expect_eq("c(t,2)=c(t-1,2)+c(t-2,2)", c[t], c[t - 1] + c[t - 2]);
    });
}

ExactInt fibonacci(int i) {
    ExactInt a = 0, b = 1;
    for (int t = 0; t < i; ++t) {
        ExactInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

void hessenberg_determinants(const VerifyGrid& g, VerifyReport& r) {
    const int max_n = g.max_n.value_or(60);
    const int max_p = g.max_p.value_or(6);
    r.grid = "1<=n<=" + std::to_string(max_n) + ", 1<=p<=" + std::to_string(max_p) +
             "; explicit determinants for n<=12";
    Sweep s(r);
    for (int p = 1; p <= max_p; ++p) {
        const auto dets = det_fnp_table(max_n, p);
        const auto counts = minpart_table(max_n, p);
        for (int n = 1; n <= max_n; ++n) {
            s.begin(params({{"n", n}, {"p", p}}));
            s.guarded([&] {
                s.expect_eq("det F=c(n,p)", dets[n], counts[n]);
                s.expect_eq("two-term recurrence table", det_fnp(n, p), dets[n]);
                if (n == p) s.expect_eq("det F(p,p)=1", dets[n], ExactInt(1));
                if (p == 1) s.expect_eq("c(n,1)=2^(n-1)", counts[n], pow2(n - 1));
                if (p == 2) s.expect_eq("c(n,2)=f(n-1)", counts[n], fibonacci(n - 1));
                if (n <= 12) {
                    const HessFSpec spec{n, p};
                    s.expect_eq("hessenberg recurrence", det_by_recurrence(build_hess(spec), ExactInt(1)).back(),
                                dets[n]);
                    s.expect_eq("elimination", det_bareiss(build_matrix(spec)), dets[n]);
                }
            });
        }
    }
}

void principal_minor_sums(const VerifyGrid& g, VerifyReport& r) {
    const int max_n = g.max_n.value_or(12);
    const int max_p = g.max_p.value_or(4);
    r.grid = "1<=n<=" + std::to_string(max_n) + ", 1<=p<=" + std::to_string(max_p) +
             ", 0<=k<=n; every deletion set checked by elimination and block product";
    Sweep s(r);
    for (int p = 1; p <= max_p; ++p) {
        for (int n = 1; n <= max_n; ++n) {
            const HessFSpec spec{n, p};
            const IntMatrix full = build_matrix(spec);
            const auto dets = det_fnp_table(n, p);
            // Sum each order both ways: elimination per mask, and the library's sum.
            std::vector<ExactInt> by_elimination(n + 1);
            bool methods_agree = true;
            std::string disagreement;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                MinorIndexSet del;
                for (int i = 0; i < n; ++i) {
                    if (mask & (1u << i)) del.deleted.push_back(i + 1);
                }
                const ExactInt direct = det_bareiss(principal_submatrix(full, del));
                const ExactInt product = principal_minor_product(spec, del);
                if (direct != product && methods_agree) {
                    methods_agree = false;
                    disagreement = "mask " + std::to_string(mask) + ": " + direct.str() + " vs " + product.str();
                }
                by_elimination[del.deleted.size()] += direct;
            }
            for (int k = 0; k <= n; ++k) {
                s.begin(params({{"n", n}, {"p", p}, {"k", k}}));
                s.guarded([&] {
                    if (!methods_agree) {
                        s.fail("elimination=block product", disagreement, "equal");
                        return;
                    }
                    const ExactInt sum = sum_principal_minors(spec, n - k);
                    s.expect_eq("sum by elimination", by_elimination[k], sum);
                    s.expect_eq("sum=c(n+kp-2k,k,p,p-1)", sum, count_marked(n + k * p - 2 * k, k, p));
                });
            }
        }
    }
    if (max_n >= 4 && max_p >= 2) {
        s.begin("anchor n=4 p=2");
        s.guarded([&] {
            const HessFSpec spec{4, 2};
            const std::vector<int> expected{0, 3, 2, 2};
            for (int order = 1; order <= 4; ++order) {
                s.expect_eq("order " + std::to_string(order), sum_principal_minors(spec, order),
                            ExactInt(expected[order - 1]));
            }
        });
    }
}

void charpoly_signs(const VerifyGrid& g, VerifyReport& r) {
    const int max_n = g.max_n.value_or(10);
    const int max_p = g.max_p.value_or(4);
    r.grid = "0<=n<=" + std::to_string(max_n) + ", 1<=p<=" + std::to_string(max_p);
    Sweep s(r);
    for (int p = 1; p <= max_p; ++p) {
        for (int n = 0; n <= max_n; ++n) {
            s.begin(params({{"n", n}, {"p", p}}));
            s.guarded([&] {
                const HessFSpec spec{n, p};
                const IntPoly chi = charpoly(spec);
                if (!s.expect_eq("prefix-sum route=generic route", chi, charpoly_generic(spec))) return;
                s.expect_eq("monic degree n", chi.degree(), static_cast<long>(n));
                for (int k = 0; k <= n; ++k) {
                    const ExactInt minors = sum_principal_minors(spec, n - k);
                    s.expect_eq("coefficient x^" + std::to_string(k), poly_coeff(chi, k), sign_pow(n - k) * minors);
                    s.expect_eq("count x^" + std::to_string(k), minors, count_marked(n + k * p - 2 * k, k, p));
                }
            });
        }
    }
    s.begin("anchor n=4 p=2");
    s.guarded([&] {
        s.expect_eq("charpoly", charpoly(HessFSpec{4, 2}).to_string(), std::string("x^4 + 3x^2 - 2x + 2"));
    });
}

void weak_zero_minors(const VerifyGrid& g, VerifyReport& r) {
    const int max_n = g.max_n.value_or(10);
    r.grid = "1<=n<=" + std::to_string(max_n) + ", 0<=k<=n, p=1";
    Sweep s(r);
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            s.begin(params({{"n", n}, {"k", k}}));
            s.guarded([&] {
                const ExactInt sum = sum_principal_minors(HessFSpec{n, 1}, n - k);
                s.expect_eq("minor sum=weak compositions of n-k with k zeros", sum, count_weak_with_zeros(n - k, k));
                s.expect_eq("weak count=c(n-k,k,1,0)", count_weak_with_zeros(n - k, k), count_marked(n - k, k, 1));
            });
        }
    }
}

void ones_minors(const VerifyGrid& g, VerifyReport& r) {
    const int max_n = g.max_n.value_or(12);
    r.grid = "1<=n<=" + std::to_string(max_n) + ", 0<=k<=n, p=2";
    Sweep s(r);
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            s.begin(params({{"n", n}, {"k", k}}));
            s.guarded([&] {
                const ExactInt sum = sum_principal_minors(HessFSpec{n, 2}, n - k);
                s.expect_eq("minor sum=c(n,k,2,1)", sum, count_marked(n, k, 2));
                const EnumGuards guards{};
                if (n <= guards.marked_total && k <= guards.marked_k && sum <= kSweepEnumLimit) {
                    s.expect_eq("minor sum=|enumerate|", sum, ExactInt(enumerate_marked(n, k, 2, guards).size()));
                }
            });
        }
    }
}

void shifted_weak_count(const VerifyGrid& g, VerifyReport& r) {
    const int max_n = g.max_n.value_or(10);
    const int max_k = g.max_k.value_or(4);
    r.grid = "n+1 shift at n=1,k=1; p=1 specialization on 0<=n<=" + std::to_string(max_n) + ", 0<=k<=" +
             std::to_string(max_k) + "; minor-sum form on 1<=n<=10";
    Sweep s(r);

    s.begin("n+1 shift n=1 k=1");
    s.guarded([&] {
        const ExactInt shifted = count_weak_with_zeros(1 + 1, 1);
        const ExactInt convolution = convolution_rhs(1, 1, 1);
        s.expect_eq("n+1 shift count", shifted, ExactInt(5));
        s.expect_eq("convolution count", convolution, ExactInt(12));
        if (shifted == convolution) s.fail("n+1 shift disagrees", shifted.str(), "!= " + convolution.str());
        r.notes.push_back("weak compositions of n+1 with k zeros at n=1,k=1: " + shifted.str() +
                          "; convolution sum: " + convolution.str());
    });

    std::vector<std::string> shift_holds;
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= max_k; ++k) {
            s.begin(params({{"n", n}, {"k", k}}));
            s.guarded([&] {
                const ExactInt rhs = convolution_rhs(n, k, 1);
                s.expect_eq("weak compositions of n+k+1 with k zeros", count_weak_with_zeros(n + k + 1, k), rhs);
                s.expect_eq("c(n+k+1,k,1,0)", count_marked(n + k + 1, k, 1), rhs);
                if (count_weak_with_zeros(n + 1, k) == rhs) shift_holds.push_back(params({{"n", n}, {"k", k}}));
            });
        }
    }
    std::size_t zero_marks = 0;
    for (const auto& point : shift_holds) zero_marks += point.find("k=0") != std::string::npos;
    r.notes.push_back("the n+1 count matches the convolution at " + std::to_string(shift_holds.size()) + " grid points, " +
                      std::to_string(zero_marks) + " of them with k=0");

    for (int n = 1; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            s.begin("minor-sum " + params({{"n", n}, {"k", k}}));
            s.guarded([&] {
                s.expect_eq("F(n,1) minors=weak compositions of n-k", sum_principal_minors(HessFSpec{n, 1}, n - k),
                            count_weak_with_zeros(n - k, k));
            });
        }
    }
}

void decode_injective(const VerifyGrid& g, VerifyReport& r) {
    const int max_len = g.max_n.value_or(10);
    r.grid = "1<=L<=" + std::to_string(max_len) + ", 0<=k<=L; injective at a=L-k+1, collision at a=L-k";
    Sweep s(r);
    long long collisions = 0;
    for (int len = 1; len <= max_len; ++len) {
        for (int k = 0; k <= len; ++k) {
            s.begin(params({{"L", len}, {"k", k}}));
            s.guarded([&] {
                const auto seqs = enumerate_usequences(len, k);
                const int a = len - k + 1;
                std::map<Composition, USequence> seen;
                for (const auto& u : seqs) {
                    const Composition c = usequence_to_composition(u, a);
                    auto [it, fresh] = seen.emplace(c, u);
                    if (!fresh) {
                        s.fail("injective at a=L-k+1", to_string(it->second) + " and " + to_string(u),
                               "distinct images");
                        return;
                    }
                    if (!s.expect_eq("round trip", to_string(composition_to_usequence(c, a)), to_string(u))) return;
                }
                if (a - 1 >= 1) {
                    std::set<Composition> low;
                    for (const auto& u : seqs) low.insert(decode_usequence(u, a - 1));
                    collisions += static_cast<long long>(seqs.size() - low.size());
                }
            });
        }
    }
    s.begin("collision 11|x vs x11 at a=2");
    s.guarded([&] {
        const USequence left = parse_usequence("11|x");
        const USequence right = parse_usequence("x11");
        s.expect_eq("same composition", decode_usequence(left, 2), decode_usequence(right, 2));
        s.expect_eq("composition", to_string(decode_usequence(left, 2)), std::string("(2,2)"));
        try {
            usequence_to_composition(left, 2);
            s.fail("checked decode rejects a=2", "accepted", "InjectivityError");
        } catch (const InjectivityError&) {
        }
    });
    s.begin("collisions exist at a=L-k");
    if (collisions == 0 && max_len >= 3) s.fail("collision count", "0", "> 0");
    r.notes.push_back("colliding images at a=L-k: " + std::to_string(collisions));
}

using Runner = void (*)(const VerifyGrid&, VerifyReport&);

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> table{
        {"prop1-agree", inset_counts_agree},         {"prop2-bijection", inset_sequence_bijection},
        {"prop3-cheb", chebyshev_coefficients},           {"prop4-s2-example", eight_compositions_of_five},
        {"prop4-s3-conv", marked_convolution},     {"prop5-det", hessenberg_determinants},
        {"prop6-minors", principal_minor_sums},       {"cor4-signs", charpoly_signs},
        {"cor5-weak", weak_zero_minors},             {"cor6-ones", ones_minors},
        {"cor2-flagged", shifted_weak_count},       {"decode-injective", decode_injective},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, runner] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

VerifyReport run_verify(const std::string& identity, const VerifyGrid& grid) {
    for (const auto& [name, runner] : registry()) {
        if (name != identity) continue;
        VerifyReport report;
        report.identity = name;
        const auto start = std::chrono::steady_clock::now();
        runner(grid, report);
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    throw DomainError("unknown identity '" + identity + "'");
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream os;
    os << "identity: " << report.identity << '\n';
    os << "grid: " << report.grid << '\n';
    os << "cases: " << report.cases << '\n';
    os << "failures: " << report.failures.size() << '\n';
    for (const auto& note : report.notes) os << "note: " << note << '\n';
    for (const auto& f : report.failures) os << "FAIL " << f.params << ": lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
    os << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace combilab
