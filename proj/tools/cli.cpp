#include "cli.hpp"

#include "cache.hpp"

#include "takeuchi/ansatz.hpp"
#include "takeuchi/asymptotics.hpp"
#include "takeuchi/errors.hpp"
#include "takeuchi/extrapolation.hpp"
#include "takeuchi/identities.hpp"
#include "takeuchi/tak_oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

namespace takeuchi::cli {

namespace {

using json = nlohmann::ordered_json;

const char* const kPublishedCT = "2.2394331040052607317547850";

struct RunConfig {
    std::string subcommand;
    std::string out;
    std::string format;
    std::string cache_dir;
    long precision_bits = 0;

    std::string name;
    std::size_t n_max = 0;
    std::string lambda;
    std::size_t order = 30;
    std::size_t l_max = 0;
    std::size_t budget = TakOracle::kDefaultBudget;
    std::string what;
    std::string n_spec;
    unsigned long n_param = 0;
    int asym_order = 2;
    long m_max = 0;
    std::string ct = kPublishedCT;
    std::string h1 = "0";
    std::string h2 = "0";
    std::string spec;
    bool formal_lambda = false;
    bool h_series = false;
    std::string target;
    std::size_t partial_sums_l = 8;
};

/// Raised for invalid flag values found after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string str(const BigFloat& x) { return x.to_string(); }

json poly_json(const Polynomial<BigRational>& p)
{
    json a = json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_string(c));
    return a;
}

json poly_json(const Polynomial<LambdaPoly>& p)
{
    json a = json::array();
    for (const auto& c : p.coefficients()) a.push_back(poly_json(c));
    return a;
}

json lambda_value_json(const BigRational& v) { return to_string(v); }
json lambda_value_json(const LambdaPoly& v) { return poly_json(v); }

std::vector<long> parse_n_list(const std::string& spec)
{
    std::vector<long> out;
    auto to_long = [&](const std::string& s) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            throw UsageError("invalid --n value '" + spec + "'");
        }
        if (used != s.size()) throw UsageError("invalid --n value '" + spec + "'");
        return v;
    };
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() < 2 || parts.size() > 3) throw UsageError("--n range must be a:b or a:b:step");
        long a = to_long(parts[0]), b = to_long(parts[1]), step = parts.size() == 3 ? to_long(parts[2]) : 1;
        if (step <= 0 || b < a) throw UsageError("--n range must be increasing with positive step");
        for (long n = a; n <= b; n += step) out.push_back(n);
    } else {
        std::stringstream ss(spec);
        for (std::string p; std::getline(ss, p, ',');) out.push_back(to_long(p));
    }
    if (out.empty()) throw UsageError("--n is empty");
    return out;
}

bool is_gaussian(const std::string& lambda) { return lambda.find('i') != std::string::npos; }

class Runner {
public:
    Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err)
        : cfg_(cfg), out_(out), err_(err),
          cache_(cfg.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cfg.cache_dir), &err)
    {
    }

    void run()
    {
        const auto& s = cfg_.subcommand;
        if (s == "seq") return seq();
        if (s == "oracle") return oracle();
        if (s == "verify") return verify();
        if (s == "asym") return asym();
        if (s == "ansatz") return ansatz();
        if (s == "extrapolate") return extrapolate();
        throw UsageError("a subcommand is required");
    }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
    SequenceCache cache_;

    mpfr_prec_t precision(long fallback) const
    {
        long p = cfg_.precision_bits ? cfg_.precision_bits : fallback;
        if (p < BigFloat::kMinPrecision) throw UsageError("--precision-bits must be at least 64");
        return p;
    }

    std::string format(const std::string& fallback, std::initializer_list<const char*> allowed) const
    {
        std::string f = cfg_.format.empty() ? fallback : cfg_.format;
        for (const char* a : allowed)
            if (f == a) return f;
        throw UsageError("--format " + f + " is not supported by " + cfg_.subcommand);
    }

    void emit(const std::string& text)
    {
        if (cfg_.out.empty())
            out_ << text;
        else
            write_atomic(cfg_.out, text);
    }

    void emit(const json& j) { emit(j.dump(2) + "\n"); }

    IntegerTable takeuchi(std::size_t n)
    {
        return cache_.get<BigInt>("takeuchi", n, "", [n] { return takeuchi_numbers(n); });
    }
    IntegerTable bell(std::size_t n)
    {
        return cache_.get<BigInt>("bell", n, "", [n] { return bell_numbers(n); });
    }
    SequenceTable<GaussianRational> family_gaussian(std::size_t n, const GaussianRational& lam)
    {
        return cache_.get<GaussianRational>("family", n, to_string(lam), [&] { return family_numbers(n, lam); });
    }

    template <class T>
    void emit_table(const SequenceTable<T>& table, const std::optional<std::string>& lambda = std::nullopt)
    {
        auto f = format("seq", {"seq", "json"});
        if (f == "seq") {
            std::ostringstream os;
            write_sequence(os, table);
            emit(os.str());
            return;
        }
        json j;
        j["name"] = table.name;
        j["n_max"] = table.max_index();
        j["domain"] = table.domain();
        if (lambda) j["lambda"] = *lambda;
        json vals = json::array();
        for (const auto& v : table.values) vals.push_back(to_string(v));
        j["values"] = vals;
        emit(j);
    }

    void seq()
    {
        const auto n = cfg_.n_max;
        const auto& name = cfg_.name;
        if (name == "takeuchi") return emit_table(takeuchi(n));
        if (name == "bell") return emit_table(bell(n));
        if (name == "catalan") return emit_table(catalan_numbers(n));
        if (name == "catalan-sums") return emit_table(catalan_partial_sums(n));
        if (name == "family") {
            if (cfg_.lambda.empty()) throw UsageError("--lambda is required for the family sequence");
            if (is_gaussian(cfg_.lambda)) {
                auto lam = parse_gaussian(cfg_.lambda);
                return emit_table(family_gaussian(n, lam), to_string(lam));
            }
            auto lam = parse_rational(cfg_.lambda);
            auto table = cache_.get<BigRational>("family", n, to_string(lam),
                                                 [&] { return family_numbers(n, lam); });
            return emit_table(table, to_string(lam));
        }
        throw UsageError("unknown sequence '" + name + "'");
    }

    void oracle()
    {
        auto r = oracle_table(cfg_.n_max, cfg_.budget);
        if (r.cutoff)
            err_ << json{{"warning", "budget exhausted"}, {"cutoff_n", *r.cutoff}, {"budget", cfg_.budget}}.dump()
                 << "\n";
        if (r.table.values.empty()) throw ResourceError("budget exhausted before n=0");
        emit_table(r.table);
    }

    static json report_json(const VerificationReport& r)
    {
        json j;
        j["what"] = r.what;
        j["order"] = r.order;
        j["pass"] = r.pass();
        json clauses = json::array();
        for (const auto& c : r.clauses) {
            json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["first_failing_order"] = c.first_failing_order ? json(*c.first_failing_order) : json(nullptr);
            clauses.push_back(cj);
        }
        j["clauses"] = clauses;
        return j;
    }

    template <class T>
    VerificationReport verify_with(const T& lam)
    {
        const auto& w = cfg_.what;
        if (w == "ident") return verify_identity(lam, cfg_.n_param, cfg_.order);
        return verify_family_functional_equation(lam, cfg_.order);
    }

    void verify()
    {
        format("json", {"json"});
        const auto& w = cfg_.what;
        VerificationReport r;
        json extra;
        if (w == "takfunc") {
            r = verify_takeuchi_functional_equation(cfg_.order);
        } else if (w == "bell-egf") {
            r = verify_bell_egf(cfg_.order);
        } else if (w == "special") {
            r = verify_special_case_identity(cfg_.n_param, cfg_.order);
            extra["n"] = cfg_.n_param;
        } else if (w == "ident" || w == "family") {
            std::string lam = cfg_.lambda.empty() ? "0" : cfg_.lambda;
            if (is_gaussian(lam)) {
                auto l = parse_gaussian(lam);
                r = verify_with(l);
                extra["lambda"] = to_string(l);
            } else {
                auto l = parse_rational(lam);
                r = verify_with(l);
                extra["lambda"] = to_string(l);
            }
            if (w == "ident") extra["n"] = cfg_.n_param;
        } else {
            throw UsageError("unknown --what '" + w + "' for verify");
        }
        json j = report_json(r);
        for (auto& [k, v] : extra.items()) j[k] = v;
        emit(j);
    }

    void asym()
    {
        const auto p = precision(256);
        auto f = format("csv", {"csv", "json"});
        const auto ns = parse_n_list(cfg_.n_spec);
        const long n_top = *std::max_element(ns.begin(), ns.end());
        const long n_low = *std::min_element(ns.begin(), ns.end());
        if (n_low < 1) throw DomainError("n must be at least 1");
        const auto& w = cfg_.what;
        static const std::vector<std::string> whats = {"bell", "conj1", "gap", "fig1", "fig2", "bounds", "bellsum",
                                                       "hatT"};
        if (std::find(whats.begin(), whats.end(), w) == whats.end())
            throw UsageError("unknown --what '" + w + "' for asym");

        IntegerTable t, b;
        const std::size_t top = static_cast<std::size_t>(n_top);
        if (w != "bell" && w != "bellsum") t = takeuchi(top + 1);
        if (w != "conj1" && w != "bounds" && w != "hatT") b = bell(top);
        const BigFloat ct = BigFloat::parse(cfg_.ct, p);

        std::vector<std::string> columns{"n", "1/n", "value"};
        if (w == "bell" || w == "conj1" || w == "hatT" || w == "bellsum") {
            columns.push_back("reference");
            columns.push_back("difference");
        }
        if (w == "bounds") columns = {"n", "1/n", "value", "lower_margin", "upper_margin"};
        if (w == "bellsum") columns.push_back("peak_m");

        std::vector<std::vector<std::string>> rows;
        for (long n : ns) {
            const auto un = static_cast<std::size_t>(n);
            std::vector<std::string> row{std::to_string(n), BigFloat(make_rational(BigInt(1), BigInt(n)), p).to_string(17)};
            auto with_ref = [&](const BigFloat& value, const BigFloat& ref) {
                row.push_back(str(value));
                row.push_back(str(ref));
                row.push_back(str(ref - value));
            };
            if (w == "bell") {
                with_ref(bell_log_asymptotic(n, cfg_.asym_order, p), log_of(b[un], p));
            } else if (w == "conj1") {
                with_ref(conjecture1_log_T(n, ct, p), log_of(t[un], p));
            } else if (w == "hatT") {
                HExpansion h{log(ct), BigFloat::parse(cfg_.h1, p), BigFloat::parse(cfg_.h2, p)};
                with_ref(hatT_log(n, h, p), log_of(t[un], p));
            } else if (w == "gap") {
                row.push_back(str(growth_gap(t, b, un, p)));
            } else if (w == "fig1") {
                row.push_back(str(figure1_value(t, b, un, p)));
            } else if (w == "fig2") {
                row.push_back(str(figure2_ratio(t, b, un, p)));
            } else if (w == "bounds") {
                auto r = knuth_bounds_check(t, un, p);
                row.push_back(r.lower_ok && r.upper_ok ? "1" : "0");
                row.push_back(str(r.lower_margin));
                row.push_back(str(r.upper_margin));
            } else if (w == "bellsum") {
                long m = cfg_.m_max;
                if (m == 0) {
                    // e·e^{W(n)} rounded up, with headroom for the tail bound
                    auto v = WValue::of(n, 128);
                    m = static_cast<long>(std::ceil(4.0 * v.exp_w.to_double())) + 60;
                }
                auto s = bell_sum_approx(n, m, p);
                with_ref(s.value, BigFloat(b[un], p));
                row.push_back(std::to_string(s.peak_m));
            }
            rows.push_back(std::move(row));
        }

        if (f == "csv") {
            std::ostringstream os;
            for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
            os << "\n";
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
                os << "\n";
            }
            emit(os.str());
            return;
        }
        json j;
        j["what"] = w;
        j["precision_bits"] = p;
        json jr = json::array();
        for (const auto& r : rows) {
            json o;
            for (std::size_t i = 0; i < r.size(); ++i) o[columns[i]] = r[i];
            jr.push_back(o);
        }
        j["rows"] = jr;
        emit(j);
    }

    template <class T>
    static json fits_json(const LambdaTable<T>& lt)
    {
        json fits = json::array();
        for (std::size_t l = 0; l < lt.fits.size(); ++l) {
            const auto& fit = lt.fits[l];
            json terms = json::array();
            for (const auto& term : fit.terms) {
                json tj;
                tj["j"] = term.j;
                tj["poly"] = poly_json(term.p);
                terms.push_back(tj);
            }
            json fj;
            fj["l"] = l;
            fj["gamma"] = lambda_value_json(fit.gamma);
            fj["beta"] = lambda_value_json(fit.beta);
            fj["terms"] = terms;
            fits.push_back(fj);
        }
        return fits;
    }

    static json plan_json(const AnsatzPlan& plan)
    {
        json j;
        j["slack"] = plan.slack;
        j["series_terms"] = plan.series_terms;
        j["r_depth"] = plan.r_depth;
        j["f_depth"] = plan.f_depth;
        return j;
    }

    void ansatz()
    {
        format("json", {"json"});
        const auto p = precision(256);
        const auto l_max = cfg_.l_max;
        json j;
        j["spec"] = cfg_.spec;
        j["l_max"] = l_max;
        if (cfg_.spec == "takeuchi") {
            j["plan"] = plan_json(takeuchi_plan(l_max));
            auto lt = takeuchi_lambda_table(l_max);
            json lams = json::array(), mus = json::array(), sums = json::array();
            for (const auto& v : lt.lambda) lams.push_back(to_string(v));
            for (const auto& v : mu_values(lt.lambda)) mus.push_back(to_string(v));
            for (const auto& v : h_partial_sums(lt.lambda, p)) sums.push_back(str(v));
            j["lambda"] = lams;
            j["mu"] = mus;
            j["partial_sums"] = sums;
            j["fits"] = fits_json(lt);
        } else if (cfg_.spec == "family") {
            j["plan"] = plan_json(family_plan(l_max));
            if (cfg_.h_series) {
                auto h = h_series_family(l_max, cfg_.formal_lambda);
                json coeffs = json::array(), ok = json::array(), pts = json::array();
                for (const auto& c : h.coefficients) coeffs.push_back(poly_json(c));
                for (bool b : h.degree_ok) ok.push_back(b);
                for (const auto& v : h.lambda_points) pts.push_back(to_string(v));
                j["formal"] = h.formal;
                j["lambda_points"] = pts;
                j["h"] = coeffs;
                j["degree_ok"] = ok;
            } else if (cfg_.formal_lambda) {
                auto lt = family_lambda_table_formal(l_max);
                json lams = json::array(), hs = json::array();
                for (const auto& v : lt.lambda) lams.push_back(poly_json(v));
                for (const auto& v : family_h_coefficients(lt.lambda)) hs.push_back(poly_json(v));
                j["lambda_values"] = lams;
                j["h"] = hs;
                j["fits"] = fits_json(lt);
            } else {
                if (cfg_.lambda.empty()) throw UsageError("--lambda or --formal-lambda is required for the family spec");
                if (is_gaussian(cfg_.lambda)) throw DomainError("the ansatz pipeline takes rational λ only");
                auto lam = parse_rational(cfg_.lambda);
                auto lt = family_lambda_table(l_max, lam);
                json lams = json::array(), hs = json::array();
                for (const auto& v : lt.lambda) lams.push_back(to_string(v));
                j["lambda"] = to_string(lam);
                j["lambda_values"] = lams;
                if (sgn(lam) != 0)
                    for (const auto& v : family_h_coefficients(lt.lambda, lam)) hs.push_back(to_string(v));
                j["h"] = hs;
                j["fits"] = fits_json(lt);
            }
        } else {
            throw UsageError("--spec must be takeuchi or family");
        }
        emit(j);
    }

    static json result_json(const ExtrapolationResult& r)
    {
        json j;
        j["estimate"] = str(r.estimate);
        if (r.estimate_imag) j["estimate_imag"] = str(*r.estimate_imag);
        j["stable_digits"] = r.stable_digits;
        j["n_range"] = {r.n_lo, r.n_hi};
        j["precision_bits"] = r.precision_bits;
        json trace = json::array();
        for (const auto& e : r.trace) {
            json tj;
            tj["method"] = e.method;
            tj["depth"] = e.depth;
            tj["value"] = str(e.value);
            if (e.imag) tj["imag"] = str(*e.imag);
            trace.push_back(tj);
        }
        j["trace"] = trace;
        return j;
    }

    void extrapolate()
    {
        format("json", {"json"});
        const auto p = precision(3072);
        const auto n = cfg_.n_max;
        json j;
        j["target"] = cfg_.target;
        if (cfg_.target == "ct") {
            auto r = estimate_CT(takeuchi(n + 1), bell(n), n, p);
            j.update(result_json(r));
            j["published"] = kPublishedCT;
            j["agreeing_digits_with_published"] = agreeing_digits(r.estimate, BigFloat::parse(kPublishedCT, p));
            if (cfg_.partial_sums_l > 0) {
                auto lt = takeuchi_lambda_table(cfg_.partial_sums_l);
                json sums = json::array();
                BigRational acc = 0;
                for (const auto& v : lt.lambda) {
                    acc += v;
                    sums.push_back({{"exact", to_string(acc)}, {"value", str(BigFloat(acc, p))}});
                }
                j["lambda_partial_sums"] = sums;
            }
        } else if (cfg_.target == "dlambda") {
            if (cfg_.lambda.empty()) throw UsageError("--lambda is required for dlambda");
            auto lam = parse_gaussian(cfg_.lambda);
            auto r = estimate_d_lambda(lam, family_gaussian(n, lam), bell(n), n, p);
            j["lambda"] = to_string(lam);
            j.update(result_json(r));
        } else {
            throw UsageError("--target must be ct or dlambda");
        }
        emit(j);
    }
};

void error_line(std::ostream& err, const std::string& kind, const std::string& message, const std::string& usage = "")
{
    json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    if (!usage.empty()) j["error"]["usage"] = usage;
    err << j.dump() << "\n";
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Takeuchi numbers: exact sequences, series identities, asymptotics and extrapolation"};
    app.require_subcommand(1);
    app.add_option("--out", cfg.out, "Output file (written atomically); stdout if omitted");
    app.add_option("--format", cfg.format, "Output format: seq|json for sequences, csv|json for asym");
    app.add_option("--cache-dir", cfg.cache_dir, "Sequence cache directory (default $TAKEUCHI_CACHE_DIR)");
    app.add_option("--precision-bits", cfg.precision_bits, "Working precision in bits");

    auto* seq = app.add_subcommand("seq", "Exact sequence table")->fallthrough();
    seq->add_option("--name", cfg.name, "takeuchi|bell|catalan|catalan-sums|family")->required();
    seq->add_option("--n-max", cfg.n_max, "Largest index")->required();
    seq->add_option("--lambda", cfg.lambda, "Family parameter a/b or a/b+c/d*i");

    auto* oracle = app.add_subcommand("oracle", "Count calls of the TAK function directly")->fallthrough();
    oracle->add_option("--n-max", cfg.n_max, "Largest n")->required();
    oracle->add_option("--budget", cfg.budget, "Memo entry budget");

    auto* verify = app.add_subcommand("verify", "Check a series identity coefficientwise")->fallthrough();
    verify->add_option("--what", cfg.what, "ident|takfunc|family|bell-egf|special")->required();
    verify->add_option("--order", cfg.order, "Truncation order");
    verify->add_option("--lambda", cfg.lambda, "Parameter λ");
    verify->add_option("--n", cfg.n_param, "Power n");

    auto* asym = app.add_subcommand("asym", "Evaluate asymptotic formulas")->fallthrough();
    asym->add_option("--what", cfg.what, "bell|conj1|gap|fig1|fig2|bounds|bellsum|hatT")->required();
    asym->add_option("--n", cfg.n_spec, "n, a,b,c or a:b[:step]")->required();
    asym->add_option("--order", cfg.asym_order, "Bell expansion order 0..2");
    asym->add_option("--m-max", cfg.m_max, "Summation bound for bellsum");
    asym->add_option("--ct", cfg.ct, "Value of C_T for conj1/hatT");
    asym->add_option("--h1", cfg.h1, "h_1 for hatT");
    asym->add_option("--h2", cfg.h2, "h_2 for hatT");

    auto* ansatz = app.add_subcommand("ansatz", "Ansatz pipeline: r_l closed forms, λ_l, h series")->fallthrough();
    ansatz->add_option("--spec", cfg.spec, "takeuchi|family")->required();
    ansatz->add_option("--l-max", cfg.l_max, "Largest l")->required();
    ansatz->add_flag("--formal-lambda", cfg.formal_lambda, "Work over Q[λ]");
    ansatz->add_flag("--h-series", cfg.h_series, "Family h_λ coefficients as polynomials in λ");
    ansatz->add_option("--lambda", cfg.lambda, "Rational λ for the family spec");

    auto* extra = app.add_subcommand("extrapolate", "Extrapolate C_T or d(λ)")->fallthrough();
    extra->add_option("--target", cfg.target, "ct|dlambda")->required();
    extra->add_option("--lambda", cfg.lambda, "λ for dlambda");
    extra->add_option("--n-max", cfg.n_max, "Largest n used")->required();
    extra->add_option("--partial-sums-l", cfg.partial_sums_l, "Report Σλ_l up to this l (0 disables)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        error_line(err, "usage", e.what(), app.help());
        return kExitUsage;
    }
    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
    if (!cfg.lambda.empty()) {
        try {
            parse_gaussian(cfg.lambda);
        } catch (const DomainError& e) {
            error_line(err, "usage", std::string("invalid --lambda: ") + e.what(), app.help());
            return kExitUsage;
        }
    }

    try {
        Runner(cfg, out, err).run();
        return kExitOk;
    } catch (const UsageError& e) {
        error_line(err, "usage", e.what(), app.help());
        return kExitUsage;
    } catch (const StructureError& e) {
        error_line(err, "structure", e.what());
    } catch (const PrecisionError& e) {
        error_line(err, "precision", e.what());
    } catch (const ResourceError& e) {
        error_line(err, "resource", e.what());
    } catch (const DepthError& e) {
        error_line(err, "depth", e.what());
    } catch (const DomainError& e) {
        error_line(err, "domain", e.what());
    } catch (const std::exception& e) {
        error_line(err, "io", e.what());
    }
    return kExitDomain;
}

} // namespace takeuchi::cli
