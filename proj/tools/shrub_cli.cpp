#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shrub/av321.hpp"
#include "shrub/bijections.hpp"
#include "shrub/errors.hpp"
#include "shrub/forest.hpp"
#include "shrub/formulas.hpp"
#include "shrub/oeis.hpp"
#include "shrub/paths.hpp"
#include "shrub/perm.hpp"

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kAllPatterns = {"123", "132", "213",
                                               "231", "312", "321"};

shrub::Permutation pattern_from(const std::string& digits) {
    std::vector<int> v;
    for (char c : digits) v.push_back(c - '0');
    return shrub::Permutation(std::move(v));
}

shrub::PatternSet pattern_set_from(const std::vector<std::string>& names) {
    std::vector<shrub::Permutation> ps;
    for (const auto& s : names) ps.push_back(pattern_from(s));
    return shrub::PatternSet(std::move(ps));
}

shrub::StepAlphabet alphabet_by_name(const std::string& name) {
    if (name == "EN") return shrub::StepAlphabet::east_north();
    if (name == "ENX") return shrub::StepAlphabet::east_north_diag();
    return shrub::StepAlphabet::club();  // "ABD"
}

json alphabet_json(const shrub::StepAlphabet& a) {
    json steps = json::array();
    for (const auto& s : a.steps()) {
        steps.push_back(json{{"token", std::string(1, s.token)},
                             {"dx", s.dx},
                             {"dy", s.dy}});
    }
    return steps;
}

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// ---- count ----

struct CountOpts {
    int k = 2;
    long long n = 0;
    std::vector<std::string> patterns;
    bool brute = false;
    int jobs = 1;
    std::uint64_t node_budget = 1'000'000'000;
    std::string format = "plain";
};

shrub::BigCount closed_form_count(const CountOpts& o, bool& used_closed) {
    used_closed = true;
    if (o.patterns.empty()) {
        return shrub::unrestricted_forest_count(o.k, o.n);
    }
    if (o.patterns.size() == 1 && !o.brute) {
        const std::string& p = o.patterns[0];
        if (p == "123") return shrub::fuss_count(o.k, o.n);
        if (p == "132") return shrub::fuss_count(o.k + 1, o.n);
        if (o.k == 2 && (p == "213" || p == "312")) {
            return shrub::schroder_count(3, o.n);
        }
        if (o.k == 2 && p == "231") return shrub::duchon_count(o.n);
        if (o.k == 2 && p == "321") {
            return shrub::series(static_cast<int>(o.n) + 1).back();
        }
    }
    used_closed = false;
    return 0;
}

int run_count(const CountOpts& o) {
    shrub::BigCount value;
    bool used_closed = false;
    if (!o.brute) value = closed_form_count(o, used_closed);
    if (!used_closed) {
        shrub::PatternSet ps = o.patterns.empty()
                                   ? shrub::PatternSet({pattern_from("123")})
                                   : pattern_set_from(o.patterns);
        shrub::EnumerateOptions eo;
        eo.jobs = o.jobs;
        eo.node_budget = o.node_budget;
        value = shrub::enumerate_forests(
            o.k, static_cast<int>(o.n),
            o.patterns.empty() ? nullptr : &ps, eo);
    }
    if (o.format == "json") {
        json out;
        out["k"] = o.k;
        out["n"] = o.n;
        out["patterns"] = o.patterns;
        out["count"] = value.str();
        std::cout << out.dump() << "\n";
    } else if (o.format == "csv") {
        std::string pats;
        for (const auto& p : o.patterns) {
            if (!pats.empty()) pats += ';';
            pats += p;
        }
        std::cout << "k,n,patterns,count\n"
                  << o.k << "," << o.n << "," << csv_quote(pats) << ","
                  << value.str() << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return 0;
}

// ---- enumerate ----

struct EnumerateOpts {
    int k = 2;
    long long n = 0;
    std::vector<std::string> patterns;
    int jobs = 1;
    std::uint64_t node_budget = 1'000'000'000;
};

int run_enumerate(const EnumerateOpts& o) {
    shrub::PatternSet ps =
        o.patterns.empty() ? shrub::PatternSet({pattern_from("123")})
                           : pattern_set_from(o.patterns);
    shrub::EnumerateOptions eo;
    eo.jobs = o.jobs;
    eo.node_budget = o.node_budget;
    std::cout << "k=" << o.k << "\n";
    shrub::enumerate_forests(o.k, static_cast<int>(o.n),
                             o.patterns.empty() ? nullptr : &ps, eo,
                             [](const std::vector<int>& labels) {
                                 std::cout << shrub::format_perm_spaces(
                                                  shrub::Permutation(labels))
                                           << "\n";
                             });
    return 0;
}

// ---- bijection ----

struct BijectionOpts {
    std::string pattern;
    std::string direction;
    std::string input;
    int k = 2;
    std::string format = "plain";
};

int run_bijection(const BijectionOpts& o) {
    std::string output;
    if (o.direction == "to-perm") {
        if (o.pattern == "123") {
            shrub::LatticePath p(shrub::StepAlphabet::east_north(), o.input);
            output = shrub::format_perm_compact(
                shrub::pi_of_forest(shrub::bij123_path_to_forest(p, o.k)));
        } else if (o.pattern == "132") {
            shrub::LatticePath p(shrub::StepAlphabet::east_north(), o.input);
            output = shrub::format_perm_compact(
                shrub::pi_of_forest(shrub::bij132_path_to_forest(p, o.k)));
        } else if (o.pattern == "213") {
            shrub::LatticePath p(shrub::StepAlphabet::club(), o.input);
            output = shrub::format_perm_compact(shrub::bij213_path_to_perm(p));
        } else if (o.pattern == "312") {
            shrub::LatticePath p(shrub::StepAlphabet::club(), o.input);
            output = shrub::format_perm_compact(shrub::bij312_path_to_perm(p));
        } else {
            shrub::LatticePath p(shrub::StepAlphabet::east_north(), o.input);
            output = shrub::format_perm_compact(shrub::bij231_path_to_perm(p));
        }
    } else {
        const shrub::Permutation pi = shrub::parse_perm(o.input);
        if (o.pattern == "123") {
            output = shrub::bij123_forest_to_path(shrub::forest_of_pi(pi, o.k))
                         .tokens();
        } else if (o.pattern == "132") {
            output = shrub::bij132_forest_to_path(shrub::forest_of_pi(pi, o.k))
                         .tokens();
        } else if (o.pattern == "213") {
            output = shrub::bij213_perm_to_path(pi).tokens();
        } else if (o.pattern == "312") {
            output = shrub::bij312_perm_to_path(pi).tokens();
        } else {
            output = shrub::bij231_perm_to_path(pi).tokens();
        }
    }
    if (o.format == "json") {
        json out;
        out["pattern"] = o.pattern;
        out["direction"] = o.direction;
        out["input"] = o.input;
        out["output"] = output;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << output << "\n";
    }
    return 0;
}

// ---- formula ----

struct FormulaOpts {
    std::string name;
    long long ell = 0;
    long long m = 0;
    long long n = 0;
    int k = 2;
    std::string format = "json";
};

int run_formula(const FormulaOpts& o) {
    shrub::BigCount value;
    json params;
    if (o.name == "fuss") {
        value = shrub::fuss_count(o.ell, o.m);
        params = {{"ell", o.ell}, {"m", o.m}};
    } else if (o.name == "schroder") {
        value = shrub::schroder_count(o.ell, o.m);
        params = {{"ell", o.ell}, {"m", o.m}};
    } else if (o.name == "duchon") {
        value = shrub::duchon_count(o.n);
        params = {{"n", o.n}};
    } else {
        value = shrub::unrestricted_forest_count(o.k, o.n);
        params = {{"k", o.k}, {"n", o.n}};
    }
    if (o.format == "plain") {
        std::cout << value.str() << "\n";
    } else if (o.format == "csv") {
        std::cout << "formula,params,value\n"
                  << o.name << "," << csv_quote(params.dump()) << ","
                  << value.str() << "\n";
    } else {
        json out;
        out["formula"] = o.name;
        out["params"] = params;
        out["value"] = value.str();
        std::cout << out.dump() << "\n";
    }
    return 0;
}

// ---- av321 ----

struct SeriesOpts {
    int terms = 10;
    bool bfile = false;
    std::string format = "plain";
};

int run_series(const SeriesOpts& o) {
    const std::vector<shrub::BigCount> s = shrub::series(o.terms);
    if (o.bfile || o.format == "bfile") {
        shrub::Sequence seq;
        seq.offset = 0;
        seq.terms = s;
        std::cout << shrub::emit_bfile(seq);
    } else if (o.format == "json") {
        json values = json::array();
        for (const auto& t : s) values.push_back(t.str());
        json out;
        out["terms"] = o.terms;
        out["values"] = values;
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& t : s) std::cout << t.str() << "\n";
    }
    return 0;
}

struct VerifyOpts {
    int order = 250;
    int jobs = 1;
    std::string format = "plain";
};

int run_verify(const VerifyOpts& o) {
    const std::vector<shrub::BigCount> s = shrub::series(o.order + 1);
    const shrub::MinPolyCheck check =
        shrub::verify_min_poly(s, o.order, shrub::minimal_polynomial(), o.jobs);
    if (o.format == "json") {
        json out;
        out["order"] = o.order;
        out["ok"] = check.ok;
        if (!check.ok) out["first_failing_order"] = check.first_failing_order;
        std::cout << out.dump() << "\n";
    } else if (check.ok) {
        std::cout << "ok order=" << o.order << "\n";
    } else {
        std::cout << "failed at order " << check.first_failing_order << "\n";
    }
    return check.ok ? 0 : 1;
}

struct GrowthOpts {
    int digits = 5;
    std::string format = "plain";
};

int run_growth(const GrowthOpts& o) {
    const shrub::GrowthRate g = shrub::growth_rate(o.digits);
    if (o.format == "json") {
        json out;
        out["digits"] = o.digits;
        out["value"] = g.decimal;
        out["lo"] = g.lo.str();
        out["hi"] = g.hi.str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << g.decimal << "\n";
    }
    return 0;
}

// ---- oeis-check ----

struct OeisOpts {
    std::string id;
    int terms = 50;
    bool offline = false;
    std::string cache_dir = "cache";
    std::string format = "plain";
};

shrub::Sequence computed_sequence(const std::string& id, int terms) {
    shrub::Sequence seq;
    seq.id = id;
    seq.offset = 0;
    for (int i = 0; i < terms; ++i) {
        shrub::BigCount t;
        if (id == "A257995") {
            break;  // filled below in one pass
        } else if (id == "A001764") {
            t = shrub::fuss_count(2, i);
        } else if (id == "A002293") {
            t = shrub::fuss_count(3, i);
        } else if (id == "A144097") {
            t = shrub::schroder_count(3, i);
        } else if (id == "A060941") {
            t = shrub::duchon_count(i);
        } else if (id == "A210277") {
            t = shrub::unrestricted_forest_count(2, i);
        } else {
            throw shrub::invalid_input("no generator for " + id +
                                       "; known ids: A001764 A002293 A060941 "
                                       "A144097 A210277 A257995");
        }
        seq.terms.push_back(std::move(t));
    }
    if (id == "A257995") seq.terms = shrub::series(terms);
    return seq;
}

int run_oeis(const OeisOpts& o) {
    const shrub::Sequence computed = computed_sequence(o.id, o.terms);
    const shrub::Sequence reference =
        shrub::fetch(o.id, o.cache_dir, o.offline);
    const shrub::CompareReport rep = shrub::compare(computed, reference);
    if (o.format == "json") {
        json out;
        out["id"] = o.id;
        out["terms"] = o.terms;
        out["agree"] = rep.agree;
        out["overlap"] = rep.overlap;
        out["shift"] = rep.shift;
        if (rep.has_mismatch) {
            out["mismatch_index"] = rep.computed_index;
            out["computed"] = rep.computed_value.str();
            out["reference"] = rep.reference_value.str();
        }
        out["note"] = rep.note;
        std::cout << out.dump() << "\n";
    } else if (rep.agree) {
        std::cout << "agree id=" << o.id << " overlap=" << rep.overlap
                  << " shift=" << rep.shift << "\n";
    } else {
        std::cout << "disagree id=" << o.id << " " << rep.note << "\n";
    }
    return rep.agree ? 0 : 1;
}

// ---- paths ----

struct PathCommonOpts {
    std::string alphabet = "EN";
    long p = 1;
    long q = 1;
    std::string sense = "below";
    long x = 0;
    long y = 0;
};

shrub::WedgeBound bound_of(const PathCommonOpts& o) {
    return shrub::WedgeBound(o.p, o.q,
                             o.sense == "below" ? shrub::Sense::below_line
                                                : shrub::Sense::above_axis);
}

struct PathsGenerateOpts : PathCommonOpts {
    std::uint64_t node_budget = 1'000'000'000;
    bool count_only = false;
};

int run_paths_generate(const PathsGenerateOpts& o) {
    shrub::PathGenOptions po;
    po.node_budget = o.node_budget;
    shrub::PathSink sink = nullptr;
    if (!o.count_only) {
        sink = [](const std::string& tokens) { std::cout << tokens << "\n"; };
    }
    const shrub::BigCount count = shrub::generate_paths(
        alphabet_by_name(o.alphabet), bound_of(o), {o.x, o.y}, po, sink);
    if (o.count_only) std::cout << count.str() << "\n";
    return 0;
}

struct PathsCheckOpts : PathCommonOpts {
    std::string input;
};

int run_paths_check(const PathsCheckOpts& o) {
    shrub::LatticePath path(alphabet_by_name(o.alphabet), o.input);
    const bool ok = shrub::check_bound(path, bound_of(o), {o.x, o.y});
    std::cout << (ok ? "true" : "false") << "\n";
    return 0;
}

struct PathsTransformOpts {
    std::string alphabet = "EN";
    long ell = 1;
    std::string input;
    std::string format = "plain";
};

int run_paths_transform(const PathsTransformOpts& o) {
    shrub::LatticePath path(alphabet_by_name(o.alphabet), o.input);
    const shrub::LatticePath image = shrub::bw_transform(path, o.ell);
    if (o.format == "json") {
        json out;
        out["ell"] = o.ell;
        out["tokens"] = image.tokens();
        out["alphabet"] = alphabet_json(image.alphabet());
        std::cout << out.dump() << "\n";
    } else {
        std::cout << image.tokens() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration toolkit for pattern-avoiding shrub forests"};
    app.require_subcommand(1);
    std::function<int()> action;

    const auto pattern_check = CLI::IsMember(kAllPatterns);
    const auto format_check = CLI::IsMember({"plain", "json", "csv"});

    // count
    auto count_opts = std::make_shared<CountOpts>();
    CLI::App* count = app.add_subcommand("count", "count pattern-avoiding forests");
    count->add_option("--k", count_opts->k, "shrub arity")->check(CLI::Range(2, 16));
    count->add_option("--n", count_opts->n, "number of shrubs")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--pattern,--patterns", count_opts->patterns,
                      "patterns to avoid (repeatable)")
        ->check(pattern_check);
    count->add_flag("--brute-force", count_opts->brute,
                    "force the search enumerator");
    count->add_option("--jobs", count_opts->jobs)->check(CLI::PositiveNumber);
    count->add_option("--node-budget", count_opts->node_budget);
    count->add_option("--format", count_opts->format)->check(format_check);
    count->callback([count_opts, &action] {
        action = [count_opts] { return run_count(*count_opts); };
    });

    // enumerate
    auto enum_opts = std::make_shared<EnumerateOpts>();
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "stream pattern-avoiding forests");
    enumerate->add_option("--k", enum_opts->k)->check(CLI::Range(2, 16));
    enumerate->add_option("--n", enum_opts->n)
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_option("--pattern,--patterns", enum_opts->patterns)
        ->check(pattern_check);
    enumerate->add_option("--jobs", enum_opts->jobs)->check(CLI::PositiveNumber);
    enumerate->add_option("--node-budget", enum_opts->node_budget);
    enumerate->callback([enum_opts, &action] {
        action = [enum_opts] { return run_enumerate(*enum_opts); };
    });

    // bijection
    auto bij_opts = std::make_shared<BijectionOpts>();
    CLI::App* bijection =
        app.add_subcommand("bijection", "forest/word <-> lattice path maps");
    bijection->add_option("--pattern", bij_opts->pattern)
        ->required()
        ->check(CLI::IsMember({"123", "132", "213", "312", "231"}));
    bijection->add_option("--direction", bij_opts->direction)
        ->required()
        ->check(CLI::IsMember({"to-perm", "to-path"}));
    bijection->add_option("--input", bij_opts->input)->required();
    bijection->add_option("--k", bij_opts->k, "arity, 123/132 only")
        ->check(CLI::Range(2, 16));
    bijection->add_option("--format", bij_opts->format)
        ->check(CLI::IsMember({"plain", "json"}));
    bijection->callback([bij_opts, &action] {
        action = [bij_opts] { return run_bijection(*bij_opts); };
    });

    // formula
    auto formula_opts = std::make_shared<FormulaOpts>();
    CLI::App* formula = app.add_subcommand("formula", "closed-form values");
    formula->add_option("--name", formula_opts->name)
        ->required()
        ->check(CLI::IsMember({"fuss", "schroder", "duchon", "unrestricted"}));
    formula->add_option("--ell", formula_opts->ell)->check(CLI::PositiveNumber);
    formula->add_option("--m", formula_opts->m)->check(CLI::NonNegativeNumber);
    formula->add_option("--n", formula_opts->n)->check(CLI::NonNegativeNumber);
    formula->add_option("--k", formula_opts->k)->check(CLI::Range(2, 16));
    formula->add_option("--format", formula_opts->format)->check(format_check);
    formula->callback([formula_opts, &action] {
        action = [formula_opts] { return run_formula(*formula_opts); };
    });

    // av321
    CLI::App* av321 = app.add_subcommand("av321", "321 series engine");
    av321->require_subcommand(1);

    auto series_opts = std::make_shared<SeriesOpts>();
    CLI::App* series = av321->add_subcommand("series", "exact series terms");
    series->add_option("--terms", series_opts->terms)
        ->required()
        ->check(CLI::PositiveNumber);
    CLI::Option* bfile_flag =
        series->add_flag("--bfile", series_opts->bfile, "b-file output");
    series->add_option("--format", series_opts->format)
        ->check(CLI::IsMember({"plain", "json", "bfile"}))
        ->excludes(bfile_flag);
    series->callback([series_opts, &action] {
        action = [series_opts] { return run_series(*series_opts); };
    });

    auto verify_opts = std::make_shared<VerifyOpts>();
    CLI::App* verify =
        av321->add_subcommand("verify-minpoly", "series vs minimal polynomial");
    verify->add_option("--order", verify_opts->order)
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", verify_opts->jobs)->check(CLI::PositiveNumber);
    verify->add_option("--format", verify_opts->format)
        ->check(CLI::IsMember({"plain", "json"}));
    verify->callback([verify_opts, &action] {
        action = [verify_opts] { return run_verify(*verify_opts); };
    });

    auto growth_opts = std::make_shared<GrowthOpts>();
    CLI::App* growth = av321->add_subcommand("growth-rate", "dominant root");
    growth->add_option("--digits", growth_opts->digits)
        ->check(CLI::Range(0, 60));
    growth->add_option("--format", growth_opts->format)
        ->check(CLI::IsMember({"plain", "json"}));
    growth->callback([growth_opts, &action] {
        action = [growth_opts] { return run_growth(*growth_opts); };
    });

    // oeis-check
    auto oeis_opts = std::make_shared<OeisOpts>();
    CLI::App* oeis = app.add_subcommand("oeis-check",
                                        "compare computed terms to a b-file");
    oeis->add_option("--id", oeis_opts->id)->required();
    oeis->add_option("--terms", oeis_opts->terms)->check(CLI::PositiveNumber);
    oeis->add_flag("--offline", oeis_opts->offline, "never touch the network");
    oeis->add_option("--cache-dir", oeis_opts->cache_dir);
    oeis->add_option("--format", oeis_opts->format)
        ->check(CLI::IsMember({"plain", "json"}));
    oeis->callback([oeis_opts, &action] {
        action = [oeis_opts] { return run_oeis(*oeis_opts); };
    });

    // paths
    CLI::App* paths = app.add_subcommand("paths", "lattice path utilities");
    paths->require_subcommand(1);
    const auto alphabet_check = CLI::IsMember({"EN", "ENX", "ABD"});
    const auto sense_check = CLI::IsMember({"below", "above"});

    auto pgen_opts = std::make_shared<PathsGenerateOpts>();
    CLI::App* pgen = paths->add_subcommand("generate", "stream bounded paths");
    pgen->add_option("--alphabet", pgen_opts->alphabet)->check(alphabet_check);
    pgen->add_option("--p", pgen_opts->p, "slope numerator")
        ->check(CLI::PositiveNumber);
    pgen->add_option("--q", pgen_opts->q, "slope denominator")
        ->check(CLI::PositiveNumber);
    pgen->add_option("--sense", pgen_opts->sense)->check(sense_check);
    pgen->add_option("--x", pgen_opts->x)->required();
    pgen->add_option("--y", pgen_opts->y)->required();
    pgen->add_option("--node-budget", pgen_opts->node_budget);
    pgen->add_flag("--count-only", pgen_opts->count_only);
    pgen->callback([pgen_opts, &action] {
        action = [pgen_opts] { return run_paths_generate(*pgen_opts); };
    });

    auto pchk_opts = std::make_shared<PathsCheckOpts>();
    CLI::App* pchk = paths->add_subcommand("check", "test a path against a bound");
    pchk->add_option("--alphabet", pchk_opts->alphabet)->check(alphabet_check);
    pchk->add_option("--p", pchk_opts->p)->check(CLI::PositiveNumber);
    pchk->add_option("--q", pchk_opts->q)->check(CLI::PositiveNumber);
    pchk->add_option("--sense", pchk_opts->sense)->check(sense_check);
    pchk->add_option("--x", pchk_opts->x)->required();
    pchk->add_option("--y", pchk_opts->y)->required();
    pchk->add_option("--input", pchk_opts->input)->required();
    pchk->callback([pchk_opts, &action] {
        action = [pchk_opts] { return run_paths_check(*pchk_opts); };
    });

    auto ptr_opts = std::make_shared<PathsTransformOpts>();
    CLI::App* ptr = paths->add_subcommand("transform", "affine step map");
    ptr->add_option("--alphabet", ptr_opts->alphabet)->check(alphabet_check);
    ptr->add_option("--ell", ptr_opts->ell, "integer slope")
        ->required()
        ->check(CLI::PositiveNumber);
    ptr->add_option("--input", ptr_opts->input)->required();
    ptr->add_option("--format", ptr_opts->format)
        ->check(CLI::IsMember({"plain", "json"}));
    ptr->callback([ptr_opts, &action] {
        action = [ptr_opts] { return run_paths_transform(*ptr_opts); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action ? action() : 2;
    } catch (const shrub::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
