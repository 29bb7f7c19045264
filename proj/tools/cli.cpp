#include "cli.hpp"

#include "combi/bijections.hpp"
#include "combi/errors.hpp"
#include "combi/families.hpp"
#include "combi/grammar.hpp"
#include "combi/objects/object.hpp"
#include "combi/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace combi::cli {

namespace {

using algebra::Var;
using algebra::ZPoly;
using nlohmann::ordered_json;

nlohmann::json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

ordered_json terms_json(const ZPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        ordered_json exps = ordered_json::object();
        for (Var v : algebra::kAllVars)
            if (e[algebra::index(v)] != 0) exps[std::string(algebra::var_name(v))] = e[algebra::index(v)];
        terms.push_back({{"exponents", exps}, {"coefficient", integer_json(c)}});
    }
    return terms;
}

// ---- poly -------------------------------------------------------------

struct FamilyInfo {
    std::string_view name;
    int min_n;
    bool scalar;          // integer sequence rather than polynomial
    std::optional<Var> variable;  // set for univariate families
};

constexpr FamilyInfo kFamilies[] = {
    {"N", 0, false, Var::x}, {"M", 0, false, Var::x}, {"A", 0, false, Var::x},       {"B", 0, false, Var::x},
    {"C", 0, false, Var::x}, {"Q", 0, false, std::nullopt}, {"P", 0, false, std::nullopt},
    {"R", 0, false, std::nullopt}, {"L", 0, false, Var::q}, {"Y", 1, false, Var::x}, {"d", 0, false, Var::x},
    {"h", 0, true, std::nullopt},  {"qn", 0, true, std::nullopt},
};

const FamilyInfo& family_info(const std::string& name) {
    for (const auto& f : kFamilies)
        if (f.name == name) return f;
    throw UsageError("unknown family '" + name + "'");
}

ZPoly family_polynomial(std::string_view family, int n) {
    using namespace families;
    if (family == "N") return n_poly(n);
    if (family == "M") return m_poly(n);
    if (family == "A") return eulerian_a(n);
    if (family == "B") return eulerian_b(n);
    if (family == "C") return c_poly(n);
    if (family == "Q") return q_poly(n);
    if (family == "P") return p_poly(n, PRoute::recurrence);
    if (family == "R") return r_poly(n);
    if (family == "L") return l_poly(n);
    if (family == "Y") return y_poly(n);
    if (family == "d") return d_poly(n);
    throw UsageError("family '" + std::string(family) + "' is not a polynomial family");
}

Integer family_value(std::string_view family, int n) {
    if (family == "h") return families::h_sequence(n + 1).back();
    return families::qn_sequence(n).back();
}

int run_poly(const std::string& family, int n, const std::string& format, std::ostream& out) {
    const FamilyInfo& info = family_info(family);
    if (n < info.min_n)
        throw UsageError("family " + family + " starts at n = " + std::to_string(info.min_n));
    if (format == "text") {
        out << (info.scalar ? family_value(family, n).get_str() : family_polynomial(family, n).to_string()) << "\n";
    } else if (format == "json") {
        ordered_json j;
        j["family"] = family;
        j["n"] = n;
        if (info.scalar) {
            j["value"] = integer_json(family_value(family, n));
        } else {
            const ZPoly p = family_polynomial(family, n);
            j["polynomial"] = p.to_string();
            j["terms"] = terms_json(p);
        }
        out << j.dump() << "\n";
    } else {
        if (!info.scalar && !info.variable)
            throw UsageError("csv output needs a univariate family; " + family + " is multivariate");
        for (int m = info.min_n; m <= n; ++m) {
            out << m;
            if (info.scalar) {
                out << "," << family_value(family, m);
            } else {
                for (const auto& c : family_polynomial(family, m).dense(*info.variable)) out << "," << c;
            }
            out << "\n";
        }
    }
    return kSuccess;
}

// ---- enumerate ----------------------------------------------------------

std::vector<int> parse_bounds(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::vector<int> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || v <= 0) throw UsageError("--s expects positive integers, got '" + token + "'");
        out.push_back(v);
    }
    return out;
}

ordered_json object_stats(const objects::CombObject& obj) {
    using namespace objects;
    ordered_json s = ordered_json::object();
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Permutation>) {
                const auto st = stats(o);
                s = {{"des_a", st.des_a}, {"asc", st.asc}, {"exc", st.exc}, {"anti_exc", st.anti_exc},
                     {"rlmin", st.rlmin}};
            } else if constexpr (std::is_same_v<T, SignedPermutation>) {
                const auto st = stats(o);
                s = {{"des_b", st.des_b}, {"rlmin", st.rlmin}, {"bar", st.bar}};
            } else if constexpr (std::is_same_v<T, PerfectMatching>) {
                const auto st = stats(o);
                s = {{"el", st.el}, {"ol", st.ol}};
            } else if constexpr (std::is_same_v<T, StirlingWord>) {
                const auto st = stats(o);
                s = {{"descents", st.descents}, {"ap", st.ap}, {"desi", st.desi}};
            } else if constexpr (std::is_same_v<T, CycleStirling>) {
                const auto st = stats(o);
                s = {{"cplat", st.cplat}, {"casc", st.casc}, {"cap", st.cap}, {"cyc", st.cyc}, {"fix", st.fix}};
            } else if constexpr (std::is_same_v<T, DecoratedPermutation>) {
                const auto st = stats(o);
                s = {{"asc", st.asc}, {"hat", st.hat}};
            } else {
                s = {{"asc", asc(o)}};
            }
        },
        obj);
    return s;
}

int run_enumerate(const std::string& cls_name, int n, const std::optional<std::string>& bounds_text, bool with_stats,
                  const std::string& format, std::ostream& out) {
    const auto cls = objects::parse_class(cls_name);
    if (!cls) throw UsageError("unknown class '" + cls_name + "'");
    std::optional<std::vector<int>> bounds;
    if (bounds_text) {
        if (*cls != objects::ObjectClass::inversion) throw UsageError("--s applies only to --class invseq");
        bounds = parse_bounds(*bounds_text);
    }
    objects::generate(*cls, n, bounds, [&](const objects::CombObject& obj) {
        if (format == "text") {
            out << objects::encode(obj) << "\n";
            return;
        }
        ordered_json line;
        line["object"] = objects::encode(obj);
        if (with_stats) line["stats"] = object_stats(obj);
        out << line.dump() << "\n";
    });
    return kSuccess;
}

// ---- verify -------------------------------------------------------------

int run_verify(const std::optional<std::string>& id, std::optional<int> max_n, const std::string& format,
               std::ostream& out) {
    std::vector<VerifyReport> reports;
    if (id) {
        const auto* info = verify::find_check(*id);
        if (!info) throw UsageError("unknown check id '" + *id + "'");
        reports = verify::run_range(*id, max_n.value_or(info->default_max_n));
    } else {
        verify::Overrides overrides;
        if (max_n) overrides["*"] = *max_n;
        reports = verify::run_all(overrides);
    }
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& r : reports) {
        if (r.status == CheckStatus::pass) ++passed;
        if (r.status == CheckStatus::fail) ++failed;
        if (r.status == CheckStatus::skipped_capacity) ++skipped;
    }
    if (format == "json") {
        ordered_json j;
        j["reports"] = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json e;
            e["id"] = r.id;
            e["n"] = r.n;
            e["status"] = std::string(status_name(r.status));
            if (!r.lhs.empty() || !r.rhs.empty()) {
                e["lhs"] = r.lhs;
                e["rhs"] = r.rhs;
            }
            if (!r.detail.empty()) e["detail"] = r.detail;
            e["runtime_ms"] = r.runtime_ms;
            j["reports"].push_back(std::move(e));
        }
        j["summary"] = {{"pass", passed}, {"fail", failed}, {"skipped_capacity", skipped}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            switch (r.status) {
                case CheckStatus::pass: out << "PASS " << r.id << " n=" << r.n << "\n"; break;
                case CheckStatus::skipped_capacity:
                    out << "SKIP " << r.id << " n=" << r.n << " (" << r.detail << ")\n";
                    break;
                case CheckStatus::fail:
                    out << "FAIL " << r.id << " n=" << r.n << " [" << r.detail << "]\n";
                    if (!r.lhs.empty() || !r.rhs.empty()) out << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << "\n";
                    break;
            }
        }
        out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    }
    return failed == 0 ? kSuccess : kVerificationFailed;
}

// ---- bijection, series, grammar -------------------------------------------

int run_bijection(const std::string& map, const std::optional<std::string>& input, bool check, std::optional<int> n,
                  std::ostream& out) {
    const auto id = map == "phi" ? bijections::MapId::phi : bijections::MapId::psi;
    if (input) {
        const auto triple = id == bijections::MapId::phi
                                ? bijections::phi_map(objects::parse_decorated(*input))
                                : bijections::psi_map(objects::parse_signed_permutation(*input));
        out << bijections::encode(triple) << "\n";
        return kSuccess;
    }
    if (!check || !n) throw UsageError("bijection needs --input ENC or --check --n N");
    const auto report = bijections::verify_bijection(id, *n);
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    out << map << " n=" << *n << " objects=" << report.domain_size << " injective=" << yes_no(report.injective)
        << " image_complete=" << yes_no(report.image_complete)
        << " weight_preserving=" << yes_no(report.weight_preserving) << "\n";
    if (report.counterexample)
        out << "counterexample: " << report.counterexample->first << " -> " << report.counterexample->second << "\n";
    return report.ok() ? kSuccess : kVerificationFailed;
}

int run_series(const std::string& id, int order, const std::string& format, std::ostream& out) {
    const auto s = families::series_family(id, order);
    ordered_json j;
    for (int n = 0; n <= order; ++n) {
        const auto c = algebra::egf_coefficient(s, n);
        if (format == "json") {
            j["coefficients"].push_back(c.to_string());
        } else {
            out << "n=" << n << ": " << c.to_string() << "\n";
        }
    }
    if (format == "json") {
        j["id"] = id;
        j["order"] = order;
        out << j.dump() << "\n";
    }
    return kSuccess;
}

int run_grammar(int lemma, int n, std::ostream& out) {
    using algebra::var;
    if (n < 1) throw UsageError("--n must be at least 1");
    ZPoly lhs, rhs;
    if (lemma == 1) {
        rhs = grammar::lemma1_enumeration(n);
        lhs = grammar::lemma1_grammar().derive(var(Var::a), n);
        out << "D^" << n << "(a) = " << lhs.to_string() << "\n";
        out << "enumeration = " << rhs.to_string() << "\n";
    } else {
        if (n > grammar::kLemma2MaxN)
            throw CapacityError("--n exceeds bound " + std::to_string(grammar::kLemma2MaxN));
        lhs = grammar::lemma2_grammar().derive(var(Var::b, 2), n);
        rhs = grammar::lemma2_closed_form(n);
        out << "D^" << n << "(b^2) = " << lhs.to_string() << "\n";
        out << "Eulerian form = " << rhs.to_string() << "\n";
    }
    const bool ok = lhs == rhs;
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumerative combinatorics: objects, polynomial families, bijections and identity checks",
                 "combi"};
    app.require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "Run registered identity checks");
    std::optional<std::string> verify_id;
    bool verify_all = false;
    std::optional<int> verify_max_n;
    std::string verify_format = "text";
    auto* id_opt = verify_cmd->add_option("--id", verify_id, "Check id");
    auto* all_opt = verify_cmd->add_flag("--all", verify_all, "Run every registered check");
    id_opt->excludes(all_opt);
    verify_cmd->add_option("--max-n", verify_max_n, "Largest n to check")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* poly_cmd = app.add_subcommand("poly", "Print a polynomial family or integer sequence");
    std::string family;
    int poly_n = 0;
    std::string poly_format = "text";
    poly_cmd->add_option("--family", family, "Family: N M A B C Q P R L Y d h qn")->required();
    poly_cmd->add_option("--n", poly_n, "Index")->required()->check(CLI::NonNegativeNumber);
    poly_cmd->add_option("--format", poly_format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));

    auto* enum_cmd = app.add_subcommand("enumerate", "Stream every object of a class");
    std::string cls;
    int enum_n = 0;
    std::optional<std::string> bounds;
    bool with_stats = false;
    std::string enum_format = "jsonl";
    enum_cmd->add_option("--class", cls, "permutation signed matching stirling stirling2 decorated invseq")
        ->required();
    enum_cmd->add_option("--n", enum_n, "Size")->required();
    enum_cmd->add_option("--s", bounds, "Bound sequence for invseq, e.g. 1,3,5");
    enum_cmd->add_flag("--stats", with_stats, "Include statistics");
    enum_cmd->add_option("--format", enum_format, "Output format")->check(CLI::IsMember({"jsonl", "text"}));

    auto* bij_cmd = app.add_subcommand("bijection", "Apply or certify an insertion bijection");
    std::string map;
    std::optional<std::string> input;
    bool check = false;
    std::optional<int> bij_n;
    bij_cmd->add_option("--map", map, "phi or psi")->required()->check(CLI::IsMember({"phi", "psi"}));
    auto* input_opt = bij_cmd->add_option("--input", input, "Encoded object");
    auto* check_opt = bij_cmd->add_flag("--check", check, "Exhaustive certification");
    input_opt->excludes(check_opt);
    bij_cmd->add_option("--n", bij_n, "Size for --check");

    auto* series_cmd = app.add_subcommand("series", "Print EGF coefficients of a generating function");
    std::string series_id;
    int order = algebra::kDefaultSeriesOrder;
    std::string series_format = "text";
    series_cmd->add_option("--id", series_id, "M N A Q P d S sec qn stirling2")->required();
    series_cmd->add_option("--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
    series_cmd->add_option("--format", series_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* grammar_cmd = app.add_subcommand("grammar", "Compare grammar derivatives with their closed forms");
    int lemma = 1;
    int grammar_n = 1;
    grammar_cmd->add_option("--lemma", lemma, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    grammar_cmd->add_option("--n", grammar_n, "Number of derivations")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    try {
        if (*verify_cmd) {
            if (!verify_id && !verify_all) throw UsageError("verify needs --id ID or --all");
            return run_verify(verify_id, verify_max_n, verify_format, out);
        }
        if (*poly_cmd) return run_poly(family, poly_n, poly_format, out);
        if (*enum_cmd) return run_enumerate(cls, enum_n, bounds, with_stats, enum_format, out);
        if (*bij_cmd) return run_bijection(map, input, check, bij_n, out);
        if (*series_cmd) return run_series(series_id, order, series_format, out);
        if (*grammar_cmd) return run_grammar(lemma, grammar_n, out);
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace combi::cli
