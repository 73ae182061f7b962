#include "combilab/cli.hpp"

#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "combilab/chebyshev.hpp"
#include "combilab/compositions.hpp"
#include "combilab/errors.hpp"
#include "combilab/hessenberg.hpp"
#include "combilab/insets.hpp"
#include "combilab/verify.hpp"

namespace combilab {

namespace {

using nlohmann::json;

struct Options {
    std::string family;
    int n = 0;
    int k = 0;
    int p = 1;
    int m = 0;
    int a = 1;
    std::optional<int> total;
    std::string format = "text";
    std::optional<int> max_enum;

    std::string identity;
    VerifyGrid grid;

    int table_max_n = 10;
    int table_max_k = 10;
};

const std::vector<std::string> kCountFamilies{"minpart", "marked", "exact-large", "weak-zeros", "insets", "insets-ie"};
const std::vector<std::string> kEnumFamilies{"minpart", "marked", "exact-large", "weak-zeros", "insets", "usequences"};
const std::vector<std::string> kTableFamilies{"marked",      "insets", "weak-zeros", "exact-large",
                                              "cheb-t",      "cheb-u", "minor-sums"};

std::optional<FamilySpec> composition_family(const Options& o) {
    FamilySpec f;
    f.n = o.n;
    f.k = o.k;
    f.p = o.p;
    f.a = o.a;
    if (o.family == "minpart") {
        f.family = Family::MinPart;
    } else if (o.family == "marked") {
        f.family = Family::Marked;
    } else if (o.family == "exact-large") {
        f.family = Family::ExactLarge;
        if (o.total) f.n = *o.total;
    } else if (o.family == "weak-zeros") {
        f.family = Family::WeakZeros;
    } else {
        return std::nullopt;
    }
    return f;
}

EnumGuards guards_for(const Options& o) {
    EnumGuards g = EnumGuards::from_env();
    if (o.max_enum) g = g.with_size_limit(*o.max_enum);
    return g;
}

int cmd_count(const Options& o, std::ostream& out) {
    if (auto f = composition_family(o)) {
        out << f->count() << '\n';
    } else if (o.family == "insets") {
        out << count_insets_direct(o.n, o.k, o.m) << '\n';
    } else if (o.family == "insets-ie") {
        out << count_insets_ie(o.n, o.k, o.m) << '\n';
    }
    return kExitSuccess;
}

json inset_json(const Inset& z) {
    json picks = json::array();
    for (Pick p : z.main) picks.push_back(p == Pick::First ? "first" : p == Pick::Second ? "second" : "both");
    return json{{"main", picks}, {"extra", z.extra}};
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const bool jsonl = o.format == "jsonl";
    const EnumGuards guards = guards_for(o);
    if (auto f = composition_family(o)) {
        for (const auto& c : f->enumerate(guards)) {
            if (jsonl) {
                out << json{{"parts", c.parts}}.dump() << '\n';
            } else {
                out << to_string(c) << '\n';
            }
        }
    } else if (o.family == "insets") {
        for (const auto& z : enumerate_insets(o.n, o.k, o.m, guards)) {
            out << (jsonl ? inset_json(z).dump() : to_string(z)) << '\n';
        }
    } else if (o.family == "usequences") {
        for (const auto& s : enumerate_usequences(o.n, o.k)) {
            out << (jsonl ? json{{"symbols", to_string(s)}}.dump() : to_string(s)) << '\n';
        }
    }
    return kExitSuccess;
}

int cmd_charpoly(const Options& o, std::ostream& out) {
    const IntPoly chi = charpoly(HessFSpec{o.n, o.p});
    if (o.format == "json") {
        json coeffs = json::array();
        for (const auto& c : chi.coeffs()) coeffs.push_back(c.str());
        out << json{{"coeffs", coeffs}}.dump() << '\n';
    } else {
        out << chi.to_string() << '\n';
    }
    return kExitSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<std::string> targets;
    if (o.identity == "all") {
        targets = identity_names();
    } else {
        targets.push_back(o.identity);
    }
    bool ok = true;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const VerifyReport report = run_verify(targets[i], o.grid);
        if (i) out << '\n';
        out << format_report(report);
        err << report.identity << ": " << report.seconds << "s\n";
        ok = ok && report.passed();
    }
    return ok ? kExitSuccess : kExitVerifyFailure;
}

// Cell value, or nullopt where (n, k) lies outside the family's domain.
std::optional<ExactInt> table_cell(const Options& o, int n, int k) {
    const std::string& f = o.family;
    if (f == "marked") return count_marked(n, k, o.p);
    if (f == "insets") return count_insets_ie(n, k, o.m);
    if (f == "weak-zeros") return count_weak_with_zeros(n, k);
    if (f == "exact-large") return count_exactly_k_large(n, k, o.a);
    if (f == "cheb-t") return k <= n + 1 ? std::optional<ExactInt>(t_coeff_closed(n, k)) : std::nullopt;
    if (f == "cheb-u") return k <= n ? std::optional<ExactInt>(u_coeff_closed(n, k)) : std::nullopt;
    if (f == "minor-sums") {
        return k <= n ? std::optional<ExactInt>(sum_principal_minors(HessFSpec{n, o.p}, n - k)) : std::nullopt;
    }
    return std::nullopt;
}

int cmd_table(const Options& o, std::ostream& out) {
    if (o.table_max_n < 0 || o.table_max_k < 0) throw DomainError("table: bounds must be nonnegative");
    if (o.p < 1 || o.a < 1 || o.m < 0) throw DomainError("table: need p >= 1, a >= 1, m >= 0");
    out << "n\\k";
    for (int k = 0; k <= o.table_max_k; ++k) out << ',' << k;
    out << '\n';
    for (int n = 0; n <= o.table_max_n; ++n) {
        out << n;
        for (int k = 0; k <= o.table_max_k; ++k) {
            out << ',';
            if (auto v = table_cell(o, n, k)) out << *v;
        }
        out << '\n';
    }
    return kExitSuccess;
}

void add_family_params(CLI::App* cmd, Options& o) {
    cmd->add_option("-n", o.n, "Main parameter (total, size, or dimension)");
    cmd->add_option("-k", o.k, "Marked / large / surplus count");
    cmd->add_option("-p", o.p, "Part threshold");
    cmd->add_option("-m", o.m, "Size of the additional block");
    cmd->add_option("-a", o.a, "Large-part threshold");
    cmd->add_option("--total", o.total, "Total for exact-large (same as -n)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting, enumeration and verification for restricted compositions"};
    app.name("combilab");
    app.require_subcommand(1);
    Options o;

    auto* count = app.add_subcommand("count", "Print an exact count");
    count->add_option("--family", o.family, "Family")->required()->check(CLI::IsMember(kCountFamilies));
    add_family_params(count, o);

    auto* enumerate = app.add_subcommand("enumerate", "List objects in lexicographic order");
    enumerate->add_option("--family", o.family, "Family")->required()->check(CLI::IsMember(kEnumFamilies));
    add_family_params(enumerate, o);
    enumerate->add_option("--format", o.format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));
    enumerate->add_option("--max-enum", o.max_enum, "Override the enumeration size guards");

    auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial of F(n,p)");
    charpoly_cmd->add_option("-n", o.n, "Dimension")->required();
    charpoly_cmd->add_option("-p", o.p, "Part threshold")->required();
    charpoly_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Sweep an identity over a parameter grid");
    std::vector<std::string> identities = identity_names();
    identities.push_back("all");
    verify->add_option("--identity", o.identity, "Identity name or 'all'")
        ->required()
        ->check(CLI::IsMember(identities));
    verify->add_option("--max-n", o.grid.max_n, "Bound on n");
    verify->add_option("--max-k", o.grid.max_k, "Bound on k");
    verify->add_option("--max-p", o.grid.max_p, "Bound on p");
    verify->add_option("--max-m", o.grid.max_m, "Bound on m");
    verify->add_option("--max-ground", o.grid.max_ground, "Bound on 2n+m for inset enumeration");

    auto* table = app.add_subcommand("table", "CSV table: rows n, columns k");
    table->add_option("--family", o.family, "Family")->required()->check(CLI::IsMember(kTableFamilies));
    table->add_option("--max-n", o.table_max_n, "Last row");
    table->add_option("--max-k", o.table_max_k, "Last column");
    table->add_option("-p", o.p, "Part threshold (marked, minor-sums)");
    table->add_option("-m", o.m, "Additional block size (insets)");
    table->add_option("-a", o.a, "Large-part threshold (exact-large)");

    std::vector<const char*> argv{"combilab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (*count) return cmd_count(o, out);
        if (*enumerate) return cmd_enumerate(o, out);
        if (*charpoly_cmd) return cmd_charpoly(o, out);
        if (*verify) return cmd_verify(o, out, err);
        if (*table) return cmd_table(o, out);
    } catch (const SizeError& e) {
        err << "size error: " << e.what() << '\n';
        return kExitSizeGuard;
    } catch (const ConsistencyError& e) {
        err << "consistency error: " << e.what() << '\n';
        return kExitVerifyFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace combilab
