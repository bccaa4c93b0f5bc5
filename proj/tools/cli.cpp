#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ios>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include <shortpoly/parser.hpp>
#include <shortpoly/serialize.hpp>

namespace shortpoly::cli {

namespace {

struct SessionConfig {
    std::string field = "rational";
    std::uint64_t budget = SearchOptions{}.budget;
    std::uint64_t seed = 0;
    bool json = false;
    unsigned threads = 0; // 0: SHORTPOLY_THREADS or 1
};

unsigned resolve_threads(unsigned flag)
{
    if (flag > 0) {
        return flag;
    }
    if (const char* env = std::getenv("SHORTPOLY_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

SearchOptions search_options(const SessionConfig& cfg)
{
    SearchOptions o;
    o.budget = cfg.budget;
    o.seed = cfg.seed;
    o.threads = resolve_threads(cfg.threads);
    return o;
}

std::string exponent_text(const Exponent& e, const Shape& shape)
{
    if (shape.is_grid()) {
        return "(" + exponent_label(e, shape) + ")";
    }
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        out += (i ? "," : "") + std::to_string(e[i]);
    }
    return out + ")";
}

template <class F>
std::string pform_text(const PForm<F>& p, const Shape& shape)
{
    std::string out = "p" + exponent_text(p.alpha, shape) + " = ";
    if (p.is_zero()) {
        return out + "0";
    }
    bool first = true;
    for (const auto& [y, c] : p.terms) {
        bool neg = p.field.is_negative(c);
        auto mag = neg ? p.field.neg(c) : c;
        out += neg ? (first ? "-" : " - ") : (first ? "" : " + ");
        if (!p.field.is_one(mag)) {
            out += p.field.to_display(mag) + "*";
        }
        out += "y" + std::to_string(y.generator + 1) + exponent_text(y.gamma, shape);
        first = false;
    }
    return out;
}

template <class F>
GeneratorSystem<F> load_ideal(const std::string& path, const F& field)
{
    auto q = read_ideal_file(path);
    if constexpr (std::is_same_v<F, RationalField>) {
        return q;
    } else {
        return change_field(q, field);
    }
}

template <class Fn>
auto with_field(const std::string& name, Fn&& fn)
{
    return std::visit(std::forward<Fn>(fn), parse_field_choice(name));
}

// --- pforms -------------------------------------------------------------

int cmd_pforms(const SessionConfig& cfg, const std::string& path, std::uint64_t degree, std::ostream& out)
{
    return with_field(cfg.field, [&](const auto& field) {
        auto gens = load_ideal(path, field);
        auto forms = build_pforms(gens, degree);
        std::size_t zero = 0;
        json list = json::array();
        std::ostringstream text;
        for (const auto& p : forms) {
            if (p.is_zero()) {
                ++zero;
                continue;
            }
            list.push_back(pform_to_json(p));
            text << pform_text(p, gens.shape()) << "\n";
        }
        std::size_t nonzero = forms.size() - zero;
        if (cfg.json) {
            out << json{{"degree", degree}, {"field", field.name()}, {"nonzero", nonzero}, {"zero_forms", zero},
                        {"forms", std::move(list)}}.dump(2)
                << "\n";
        } else {
            out << text.str() << nonzero << " nonzero forms, " << zero << " zero forms\n";
        }
        return int(ok);
    });
}

// --- shortness ----------------------------------------------------------

template <class F>
void print_report_text(const ShortnessReport<F>& r, std::ostream& out)
{
    out << "degree " << r.degree << ": dimension " << r.dimension << " in " << r.monomials << " monomials ("
        << r.non_loops << " occurring), field " << r.field << (r.certified ? "" : " [candidate]") << "\n";
    switch (r.status) {
    case ShortnessStatus::zero_component:
        out << "status: zero component\n";
        return;
    case ShortnessStatus::exact:
        out << "status: exact " << r.shortness << "\n";
        break;
    case ShortnessStatus::lower_bound:
        out << "status: no element with at most " << r.absent_upto << " terms"
            << (r.budget_exhausted ? " (budget exhausted)" : "") << "\n";
        break;
    }
    if (r.witness) {
        out << "witness: " << r.witness->polynomial.to_string() << "\n";
        for (std::size_t i = 0; i < r.witness->cofactors.size(); ++i) {
            out << "  g" << i + 1 << " = " << r.witness->cofactors[i].to_string() << "\n";
        }
    }
    if (r.upper_bound) {
        out << "sampled upper bound: " << *r.upper_bound << "\n";
    }
    out << "bounds (upper): dim " << *r.dim_bound << ", occurrence " << *r.occurrence_bound;
    if (r.hyperplane_shortness) {
        out << "; hyperplane shortness " << *r.hyperplane_shortness;
    }
    out << "\nrank tests: " << r.rank_tests << "\n";
}

int cmd_shortness(const SessionConfig& cfg, const std::string& path, std::uint64_t degree,
                  std::optional<std::size_t> max_terms, unsigned random_rounds, std::ostream& out)
{
    return with_field(cfg.field, [&](const auto& field) {
        auto gens = load_ideal(path, field);
        auto opts = search_options(cfg);
        opts.random_rounds = random_rounds;
        std::size_t max_s = max_terms.value_or(std::max<std::size_t>(1, monomial_count(gens.shape().variables(), degree)));
        auto report = shortness(gens, degree, max_s, opts);
        if (cfg.json) {
            out << report_to_json(report).dump(2) << "\n";
        } else {
            print_report_text(report, out);
        }
        return int(report.budget_exhausted ? budget_exhausted : ok);
    });
}

// --- matroid ------------------------------------------------------------

int cmd_matroid(const SessionConfig& cfg, const std::string& path, std::uint64_t degree, std::size_t limit,
                std::ostream& out)
{
    return with_field(cfg.field, [&](const auto& field) {
        auto gens = load_ideal(path, field);
        auto cm = coefficient_matrix(gens, degree);
        using F = std::decay_t<decltype(field)>;
        ColumnMatroid<F> mat(cm.matrix, limit);
        auto bc = mat.enumerate_bases_circuits();
        auto hyper = mat.hyperplanes();
        std::optional<std::size_t> s;
        if (mat.rank() > 0) {
            s = mat.shortness_via_hyperplanes();
        }
        if (cfg.json) {
            json j{{"rank", mat.rank()},
                   {"ground", mat.ground_size()},
                   {"loops", mat.loops()},
                   {"bases", label_sets_to_json(bc.bases)},
                   {"circuits", label_sets_to_json(bc.circuits)},
                   {"hyperplanes", label_sets_to_json(hyper)}};
            j["shortness"] = s ? json(*s) : json(nullptr);
            out << j.dump(2) << "\n";
        } else {
            auto line = [&](const char* name, const std::vector<LabelSet>& sets) {
                out << name << ":";
                for (const auto& x : sets) {
                    out << " " << format_label_set(x);
                }
                out << "\n";
            };
            out << "labels:";
            for (std::size_t j = 0; j < cm.columns.size(); ++j) {
                out << " " << j + 1 << ":" << exponent_text(cm.columns[j], gens.shape());
            }
            out << "\nrank: " << mat.rank() << "\nloops: " << format_label_set(mat.loops()) << "\n";
            line("bases", bc.bases);
            line("circuits", bc.circuits);
            line("hyperplanes", hyper);
            out << "shortness: " << (s ? std::to_string(*s) : std::string("n/a (zero component)")) << "\n";
        }
        return int(ok);
    });
}

// --- det ----------------------------------------------------------------

struct DetArgs {
    std::size_t m = 0, n = 0, t = 0;
    std::uint64_t d = 0;
    bool verify = false;
    bool dot = false;
    bool emit_ideal = false;
    std::string relation_from;
    std::vector<std::string> forbid;
};

int det_relation(const SessionConfig& cfg, const DetArgs& a, std::ostream& out)
{
    Shape shape = Shape::grid(a.m, a.n);
    Exponent beta = parse_exponent_label(a.relation_from, shape);
    std::set<Exponent> forbidden;
    for (const auto& f : a.forbid) {
        forbidden.insert(parse_exponent_label(f, shape));
    }
    auto rel = bfs_relation(a.m, a.n, a.t, a.d, beta, forbidden);
    if (cfg.json) {
        out << relation_to_json(rel, shape).dump(2) << "\n";
    } else {
        std::string lhs;
        for (std::size_t i = 0; i < rel.members.size(); ++i) {
            lhs += (i ? " + p" : "p") + exponent_text(rel.members[i], shape);
        }
        out << lhs << " = 0\n";
    }
    return ok;
}

int det_verify(const SessionConfig& cfg, const DetArgs& a, std::ostream& out, std::ostream& err)
{
    const auto bound = theorem_bound(a.t);
    const std::size_t s = bound - 1;
    json j{{"m", a.m}, {"n", a.n}, {"t", a.t}, {"d", a.d}, {"bound", bound}};
    if (s == 0) {
        j["verified"] = true;
        if (cfg.json) {
            out << j.dump(2) << "\n";
        } else {
            out << "bound " << bound << " holds trivially\n";
        }
        return ok;
    }
    return with_field(cfg.field, [&](const auto& field) {
        auto gens = change_field(minors(a.m, a.n, a.t), field);
        auto opts = search_options(cfg);
        using F = std::decay_t<decltype(field)>;
        SupportSearch<F> search(gens, a.t + a.d);
        auto needed = binomial_saturating(search.non_loops().size(), std::min(s, search.non_loops().size()));
        if (needed > opts.budget) {
            err << "warning: " << needed << " candidate supports exceed the budget of " << opts.budget << "\n";
        }
        auto outcome = search.search(s, opts.budget, opts.threads);
        j["rank_tests"] = outcome.tests;
        j["field"] = field.name();
        int code = ok;
        if (outcome.kind == SupportOutcome::Kind::absent) {
            j["verified"] = true;
            if (!cfg.json) {
                out << "no " << s << "-short element; bound " << bound << " holds\n";
            }
        } else if (outcome.kind == SupportOutcome::Kind::found) {
            auto w = search.witness_for(outcome.support);
            j["verified"] = false;
            j["counterexample"] = polynomial_to_json(w.polynomial);
            if (!cfg.json) {
                out << "bound " << bound << " violated by " << w.polynomial.to_string() << "\n";
            }
            code = bound_violated;
        } else {
            j["verified"] = nullptr;
            j["budget_exhausted"] = true;
            if (!cfg.json) {
                out << "budget exhausted after " << outcome.tests << " rank tests; bound " << bound
                    << " not verified\n";
            }
            code = budget_exhausted;
        }
        if (cfg.json) {
            out << j.dump(2) << "\n";
        }
        return code;
    });
}

int cmd_det(const SessionConfig& cfg, const DetArgs& a, std::ostream& out, std::ostream& err)
{
    DeterminantalIdeal ideal(a.m, a.n, a.t);
    int code = ok;
    bool any = false;
    if (a.emit_ideal) {
        any = true;
        out << format_ideal(ideal.generators());
    }
    if (a.verify) {
        any = true;
        code = std::max(code, det_verify(cfg, a, out, err));
    }
    if (a.dot) {
        any = true;
        out << to_dot(relation_graph(a.m, a.n, a.t, a.d));
    }
    if (!a.relation_from.empty()) {
        any = true;
        code = std::max(code, det_relation(cfg, a, out));
    }
    if (!any) {
        auto graph = relation_graph(a.m, a.n, a.t, a.d);
        auto monomials = monomial_count(a.m * a.n, a.t + a.d);
        json j{{"m", a.m},
               {"n", a.n},
               {"t", a.t},
               {"d", a.d},
               {"generators", ideal.minor_indices().size()},
               {"monomials", monomials},
               {"nonzero_forms", graph.vertices.size()},
               {"edges", graph.edges.size()},
               {"components", graph.components().size()},
               {"theorem_bound", theorem_bound(a.t)}};
        if (cfg.json) {
            out << j.dump(2) << "\n";
        } else {
            for (auto it = j.begin(); it != j.end(); ++it) {
                out << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    }
    return code;
}

void add_det_params(CLI::App* sub, DetArgs& a)
{
    sub->add_option("m", a.m, "matrix rows")->required();
    sub->add_option("n", a.n, "matrix columns")->required();
    sub->add_option("t", a.t, "minor size")->required();
    sub->add_option("d", a.d, "degree offset (component degree t+d)")->required();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Shortness of graded components of polynomial ideals", "shortpoly"};
    app.require_subcommand(1);
    app.fallthrough();
    SessionConfig cfg;
    app.add_option("--field", cfg.field, "rational | prime | prime:<p>");
    app.add_option("--budget", cfg.budget, "rank-test budget for support searches");
    app.add_option("--seed", cfg.seed, "seed for randomized phases");
    app.add_flag("--json", cfg.json, "JSON output");
    app.add_option("--threads", cfg.threads, "worker threads (fallback: SHORTPOLY_THREADS)");

    std::string path;
    std::uint64_t degree = 0;

    auto* pforms = app.add_subcommand("pforms", "print the linear forms p_alpha of a graded component");
    pforms->add_option("ideal", path, "ideal file")->required();
    pforms->add_option("degree", degree, "component degree")->required();

    std::optional<std::size_t> max_terms;
    unsigned random_rounds = 0;
    auto* sh = app.add_subcommand("shortness", "compute the shortness of a graded component");
    sh->add_option("ideal", path, "ideal file")->required();
    sh->add_option("degree", degree, "component degree")->required();
    sh->add_option("--max-terms", max_terms, "largest support size to search");
    sh->add_option("--random-rounds", random_rounds, "information-set sampling rounds before exhaustion");

    std::size_t limit = ColumnMatroid<RationalField>::default_limit;
    auto* mat = app.add_subcommand("matroid", "bases, circuits and hyperplanes of the p_alpha matroid");
    mat->add_option("ideal", path, "ideal file")->required();
    mat->add_option("degree", degree, "component degree")->required();
    mat->add_option("--limit", limit, "largest number of non-loop elements to enumerate");

    DetArgs det_args;
    auto* det = app.add_subcommand("det", "determinantal ideals of t-minors");
    add_det_params(det, det_args);
    det->add_flag("--verify-bound", det_args.verify, "certify shortness >= floor(t!/2)+1 by exhaustive search");
    det->add_flag("--graph-dot", det_args.dot, "print the relation graph in DOT");
    det->add_option("--relation-from", det_args.relation_from, "build a relation starting at this exponent");
    det->add_option("--forbid", det_args.forbid, "exponents the relation must avoid");
    det->add_flag("--emit-ideal", det_args.emit_ideal, "print the minors as an ideal file");

    DetArgs rel_args;
    auto* rel = app.add_subcommand("relation", "sign-alternating relation from a starting exponent");
    add_det_params(rel, rel_args);
    rel->add_option("beta", rel_args.relation_from, "starting exponent, e.g. 101|010")->required();
    rel->add_option("--forbid", rel_args.forbid, "exponents the relation must avoid");

    DetArgs graph_args;
    auto* graph = app.add_subcommand("graph", "relation graph of a determinantal component in DOT");
    add_det_params(graph, graph_args);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? int(ok) : int(input_error);
    }

    try {
        if (*pforms) {
            return cmd_pforms(cfg, path, degree, out);
        }
        if (*sh) {
            return cmd_shortness(cfg, path, degree, max_terms, random_rounds, out);
        }
        if (*mat) {
            return cmd_matroid(cfg, path, degree, limit, out);
        }
        if (*det) {
            return cmd_det(cfg, det_args, out, err);
        }
        if (*rel) {
            return det_relation(cfg, rel_args, out);
        }
        if (*graph) {
            DeterminantalIdeal check(graph_args.m, graph_args.n, graph_args.t);
            out << to_dot(relation_graph(graph_args.m, graph_args.n, graph_args.t, graph_args.d));
            return ok;
        }
    } catch (const ParseError& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        return input_error;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return budget_exhausted;
    } catch (const RelationFailure& e) {
        err << "error: " << e.what() << "\n";
        return internal_error;
    } catch (const MatroidLimitError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return internal_error;
    }
    return internal_error;
}

} // namespace shortpoly::cli
