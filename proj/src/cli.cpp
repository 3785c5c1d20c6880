#include "suspflow/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "suspflow/birkhoff.hpp"
#include "suspflow/ghys_graph.hpp"
#include "suspflow/svg.hpp"

namespace suspflow::cli {

namespace {

using birkhoff::SurfaceData;
using nlohmann::json;

std::string curve_str(const birkhoff::CurveClass& c) {
    return "(" + c.longitude.str() + "," + c.meridian.str() + ")";
}

json surface_json(const SurfaceData& s) {
    json j;
    j["euler"] = s.euler.str();
    j["genus"] = s.genus().str();
    json entries = json::array();
    for (const auto& e : s.boundary) {
        entries.push_back({{"orbit", e.orbit},
                           {"multiplicity", e.multiplicity.str()},
                           {"circles", e.circle_count.str()},
                           {"class", {e.per_circle.longitude.str(),
                                      e.per_circle.meridian.str()}}});
    }
    j["boundary"] = entries;
    return j;
}

void print_surface(std::ostream& out, const SurfaceData& s) {
    out << "chi: " << s.euler << "\n";
    out << "genus: " << s.genus() << "\n";
    out << "circles: " << s.circle_count() << "\n";
    out << "orbits: " << s.orbit_count() << "\n";
    for (const auto& e : s.boundary) {
        out << "boundary: " << e.orbit << " mult=" << e.multiplicity
            << " circles=" << e.circle_count << " class=" << curve_str(e.per_circle)
            << "\n";
    }
}

struct Config {
    bool json_out = false;
    std::string cache_dir;
    long trace_cap = ghys_graph::kDefaultTraceCap;
    std::size_t node_budget = ghys_graph::kDefaultNodeBudget;
    long audit_cap = 6;
};

// Accepts a matrix ("a,b;c,d") or a word; words never parse as matrices.
std::variant<Mat2, RLWord> parse_matrix_or_word(const std::string& text) {
    try {
        return parse_mat2(text);
    } catch (const ParseError&) {
        return RLWord::parse(text);
    }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculator for RL-words, torus suspension sections and Ghys-graph probes"};
    app.name("suspflow");
    Config cfg;
    app.add_flag("--json", cfg.json_out, "emit JSON instead of text");
    app.add_option("--cache-dir", cfg.cache_dir, "ball cache directory (default GHYS_CACHE_DIR or ./.ghys-cache)");
    app.add_option("--trace-cap", cfg.trace_cap, "conjugacy-graph trace cap")->check(CLI::PositiveNumber);
    app.add_option("--node-budget", cfg.node_budget, "graph exploration node budget")->check(CLI::PositiveNumber);
    app.add_option("--audit-cap", cfg.audit_cap, "largest allowed audit period")->check(CLI::PositiveNumber);
    app.require_subcommand(1);

    std::string arg_matrix, arg_word, arg_w1, arg_w2, arg_center, arg_orders;
    std::string arg_kind = "word", arg_format = "dot", arg_group = "gl2", arg_svg;
    long arg_power = 1, arg_genus = 0, arg_max_period = 6;
    int arg_radius = 0, arg_margin = 1, arg_max_radius = 8;
    bool arg_gl2 = false, arg_csv = false;

    auto* c_factor = app.add_subcommand("factor", "RL-factorize a hyperbolic matrix");
    c_factor->add_option("matrix", arg_matrix, "matrix a,b;c,d")->required();

    auto* c_word = app.add_subcommand("word", "product matrix of an RL word");
    c_word->add_option("word", arg_word)->required();

    auto* c_conj = app.add_subcommand("conj", "test conjugacy of two word classes");
    c_conj->add_option("w1", arg_w1)->required();
    c_conj->add_option("w2", arg_w2)->required();
    c_conj->add_flag("--gl2", arg_gl2, "identify letter-swapped classes");

    auto* c_fixed = app.add_subcommand("fixed", "fixed points of a torus automorphism power");
    c_fixed->add_option("matrix", arg_matrix)->required();
    c_fixed->add_option("--power", arg_power)->check(CLI::PositiveNumber);

    auto* c_pants = app.add_subcommand("pants", "pair-of-pants data over a word");
    c_pants->add_option("word", arg_word)->required();
    c_pants->add_option("--svg", arg_svg, "write the parallelogram figure to PATH");

    auto* c_section = app.add_subcommand("section", "genus-one Birkhoff section data");
    c_section->add_option("word", arg_word)->required();

    auto* c_descend = app.add_subcommand("descend", "trace descent to the RL class");
    c_descend->add_option("input", arg_word, "word or matrix")->required();

    auto* c_orbifold = app.add_subcommand("orbifold", "genus-one section census");
    c_orbifold->add_option("--genus", arg_genus)->required();
    c_orbifold->add_option("--orders", arg_orders, "comma-separated cone orders")->required();

    auto* c_ghys = app.add_subcommand("ghys", "Ghys-distance upper bound between suspensions");
    c_ghys->add_option("w1", arg_w1)->required();
    c_ghys->add_option("w2", arg_w2)->required();
    c_ghys->add_option("--max-radius", arg_max_radius)->check(CLI::NonNegativeNumber);

    auto* c_graph = app.add_subcommand("graph", "explore and export a graph ball");
    c_graph->add_option("--kind", arg_kind)->check(CLI::IsMember({"word", "conj"}));
    c_graph->add_option("--center", arg_center)->required();
    c_graph->add_option("--radius", arg_radius)->required()->check(CLI::NonNegativeNumber);
    c_graph->add_option("--format", arg_format)->check(CLI::IsMember({"dot", "json"}));
    c_graph->add_option("--group", arg_group)->check(CLI::IsMember({"sl2", "gl2"}));

    auto* c_delta = app.add_subcommand("delta", "four-point hyperbolicity estimate");
    c_delta->add_option("--kind", arg_kind)->check(CLI::IsMember({"word", "conj"}));
    c_delta->add_option("--center", arg_center)->required();
    c_delta->add_option("--radius", arg_radius)->required()->check(CLI::NonNegativeNumber);
    c_delta->add_option("--margin", arg_margin)->check(CLI::NonNegativeNumber);
    c_delta->add_option("--group", arg_group)->check(CLI::IsMember({"sl2", "gl2"}));

    auto* c_audit = app.add_subcommand("audit", "Lefschetz-style section audit");
    c_audit->add_option("word", arg_word)->required();
    c_audit->add_option("--max-period", arg_max_period)->check(CLI::PositiveNumber);
    c_audit->add_flag("--csv", arg_csv, "CSV table output");

    std::vector<const char*> argv;
    argv.push_back("suspflow");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    auto group = [&] { return arg_group == "sl2" ? sl2z::Group::SL2 : sl2z::Group::GL2; };

    if (c_factor->parsed()) {
        auto fac = sl2z::rl_factorize(parse_mat2(arg_matrix));
        if (cfg.json_out) {
            out << json{{"word", fac.word.letters()},
                        {"conjugator", to_string(fac.conjugator)}}.dump(2) << "\n";
        } else {
            out << "word: " << fac.word.letters() << "\n";
            out << "conjugator: " << to_string(fac.conjugator) << "\n";
        }
        return 0;
    }
    if (c_word->parsed()) {
        Mat2 m = sl2z::word_to_matrix(RLWord::parse(arg_word));
        if (cfg.json_out) {
            out << json{{"matrix", to_string(m)}, {"trace", m.trace().str()}}.dump(2) << "\n";
        } else {
            out << "matrix: " << to_string(m) << "\n";
            out << "trace: " << m.trace() << "\n";
        }
        return 0;
    }
    if (c_conj->parsed()) {
        bool eq = sl2z::conjugacy_equal(RLWord::parse(arg_w1), RLWord::parse(arg_w2),
                                        arg_gl2 ? sl2z::Group::GL2 : sl2z::Group::SL2);
        if (cfg.json_out)
            out << json{{"equal", eq}}.dump(2) << "\n";
        else
            out << "equal: " << (eq ? "true" : "false") << "\n";
        return 0;
    }
    if (c_fixed->parsed()) {
        Mat2 m = parse_mat2(arg_matrix);
        Zint count = sl2z::periodic_point_count(m, arg_power);
        auto points = sl2z::fixed_point_lattice(m, arg_power);
        if (cfg.json_out) {
            json j{{"count", count.str()}};
            json arr = json::array();
            for (const auto& p : points) arr.push_back(to_string(p));
            j["points"] = arr;
            out << j.dump(2) << "\n";
        } else {
            out << "count: " << count << "\n";
            for (const auto& p : points) out << "point: " << to_string(p) << "\n";
        }
        return 0;
    }
    if (c_pants->parsed()) {
        RLWord w = RLWord::parse(arg_word);
        auto par = torus_geom::build_parallelogram(w);
        auto pants = birkhoff::pair_of_pants_data(w);
        auto formula = torus_geom::formula_fixed_points(par.rw);
        if (!arg_svg.empty()) {
            std::ofstream svg_file(arg_svg);
            if (!svg_file) throw ParseError("cannot write SVG to " + arg_svg);
            svg_file << emit_parallelogram_svg(par, formula.points);
        }
        bool degenerate = par.embedding == torus_geom::Embedding::DegenerateMN;
        if (cfg.json_out) {
            json j = surface_json(pants);
            j["rw"] = to_string(par.rw);
            j["embedding"] = degenerate ? "degenerate" : "generic";
            j["vertices"] = {{"O", to_string(par.vertex_o())},
                             {"M", to_string(par.vertex_m())},
                             {"N", to_string(par.vertex_n())}};
            json arr = json::array();
            for (const auto& p : formula.points) arr.push_back(to_string(p));
            j["formula_fixed_points"] = arr;
            out << j.dump(2) << "\n";
        } else {
            out << "rw: " << to_string(par.rw) << "\n";
            out << "embedding: " << (degenerate ? "degenerate" : "generic") << "\n";
            out << "vertex O: " << to_string(par.vertex_o()) << "\n";
            out << "vertex M: " << to_string(par.vertex_m()) << "\n";
            out << "vertex N: " << to_string(par.vertex_n()) << "\n";
            print_surface(out, pants);
        }
        return 0;
    }
    if (c_section->parsed()) {
        RLWord w = RLWord::parse(arg_word);
        auto section = birkhoff::genus_one_section(w);
        auto fr = birkhoff::first_return_matrix(w);
        if (cfg.json_out) {
            json j = surface_json(section);
            j["first_return"] = to_string(fr.matrix);
            out << j.dump(2) << "\n";
        } else {
            print_surface(out, section);
            out << "first-return: " << to_string(fr.matrix) << "\n";
        }
        return 0;
    }
    if (c_descend->parsed()) {
        auto input = parse_matrix_or_word(arg_word);
        RLWord w = std::holds_alternative<RLWord>(input)
                       ? std::get<RLWord>(input)
                       : sl2z::rl_factorize(std::get<Mat2>(input)).word;
        auto chain = birkhoff::descent_chain(w);
        if (cfg.json_out) {
            json steps = json::array();
            for (const auto& s : chain.steps) {
                steps.push_back({{"before", s.before.letters()},
                                 {"peeled", std::string(1, s.peeled)},
                                 {"after", s.after.letters()},
                                 {"trace_before", s.trace_before.str()},
                                 {"trace_after", s.trace_after.str()}});
            }
            out << json{{"steps", steps}, {"ghys_bound", chain.ghys_bound().str()}}.dump(2)
                << "\n";
        } else {
            int i = 0;
            for (const auto& s : chain.steps) {
                out << "step " << ++i << ": " << s.before.letters() << " -[" << s.peeled
                    << "]-> " << s.after.letters() << " trace " << s.trace_before
                    << " -> " << s.trace_after << "\n";
            }
            out << "steps: " << chain.steps.size() << "\n";
            out << "ghys-bound: " << chain.ghys_bound() << "\n";
        }
        return 0;
    }
    if (c_orbifold->parsed()) {
        std::vector<long> orders;
        std::stringstream ss(arg_orders);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                orders.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw ParseError("bad cone order '" + tok + "'");
            }
        }
        auto census = birkhoff::orbifold_section_census(arg_genus, orders);
        if (cfg.json_out) {
            json j = surface_json(census.surface);
            j["curves"] = census.curve_count.str();
            j["pieces"] = {{"handles", census.chi_handles.str()},
                           {"cones", census.chi_cones.str()},
                           {"connector", census.chi_connector.str()}};
            out << j.dump(2) << "\n";
        } else {
            out << "chi: " << census.surface.euler << "\n";
            out << "circles: " << census.surface.circle_count() << "\n";
            out << "genus: " << census.surface.genus() << "\n";
            out << "curves: " << census.curve_count << "\n";
            out << "pieces: handles=" << census.chi_handles << " cones=" << census.chi_cones
                << " connector=" << census.chi_connector << "\n";
        }
        return 0;
    }
    if (c_ghys->parsed()) {
        auto bound = ghys_graph::ghys_distance_upper_bound(
            RLWord::parse(arg_w1), RLWord::parse(arg_w2), arg_max_radius);
        if (cfg.json_out) {
            json j;
            j["bound"] = bound ? json(bound->str()) : json(nullptr);
            j["max_radius"] = arg_max_radius;
            out << j.dump(2) << "\n";
        } else if (bound) {
            out << "bound: " << *bound << "\n";
        } else {
            out << "bound: unknown (exceeds radius " << arg_max_radius << ")\n";
        }
        return 0;
    }
    if (c_graph->parsed() || c_delta->parsed()) {
        ghys_graph::BallCache cache(cfg.cache_dir);
        ghys_graph::GraphKind kind = arg_kind == "word" ? ghys_graph::GraphKind::Word
                                                        : ghys_graph::GraphKind::Conjugacy;
        RLWord center_word = RLWord::parse(arg_center);
        std::string center_key;
        sl2z::Group grp = group();
        if (kind == ghys_graph::GraphKind::Word) {
            center_key = ghys_graph::word_class_rep(center_word, grp).letters();
        } else {
            grp = sl2z::Group::SL2;
            center_key = sl2z::classify_conjugacy(sl2z::word_to_matrix(center_word)).key();
        }
        auto ball = cache.lookup(kind, grp, center_key, arg_radius, cfg.trace_cap,
                                 cfg.node_budget);
        if (!ball) {
            if (kind == ghys_graph::GraphKind::Word) {
                ball = ghys_graph::explore_word_ball(center_word, arg_radius, grp,
                                                     cfg.node_budget);
            } else {
                ball = ghys_graph::explore_conj_ball(
                    sl2z::classify_conjugacy(sl2z::word_to_matrix(center_word)),
                    arg_radius, cfg.trace_cap, cfg.node_budget);
            }
            ball->trace_cap = cfg.trace_cap;
            cache.store(*ball);
        }
        if (c_graph->parsed()) {
            out << ghys_graph::export_graph(*ball, arg_format == "dot"
                                                       ? ghys_graph::ExportFormat::DOT
                                                       : ghys_graph::ExportFormat::JSON);
        } else {
            auto est = ghys_graph::delta_hyperbolicity(*ball, arg_margin);
            if (cfg.json_out) {
                out << json{{"delta", rat_to_string(est.value)},
                            {"usable_radius", est.usable_radius},
                            {"core_size", est.core_size},
                            {"note", "within-ball distances upper-bound global distances"}}
                           .dump(2)
                    << "\n";
            } else {
                out << "delta: " << rat_to_string(est.value) << "\n";
                out << "core: " << est.core_size << " nodes (radius " << est.usable_radius
                    << ")\n";
                out << "note: within-ball distances upper-bound global distances\n";
            }
        }
        return 0;
    }
    if (c_audit->parsed()) {
        if (arg_max_period > cfg.audit_cap)
            throw ParseError("max period " + std::to_string(arg_max_period) +
                             " exceeds audit cap " + std::to_string(cfg.audit_cap));
        auto table = birkhoff::lefschetz_audit(RLWord::parse(arg_word), arg_max_period);
        auto fit_str = [&] {
            std::string s;
            for (std::size_t i = 0; i < table.fitted_periods.size(); ++i)
                s += (i ? "," : "") + std::to_string(table.fitted_periods[i]);
            return s;
        };
        if (cfg.json_out) {
            json rows = json::array();
            for (const auto& r : table.rows)
                rows.push_back({{"m", r.m},
                                {"lhs", r.lhs.str()},
                                {"interior_sum", r.interior_sum.str()},
                                {"residual", r.residual.str()}});
            json j{{"rows", rows},
                   {"boundary_circles", table.boundary_circles.str()},
                   {"fit_ok", table.fit_ok}};
            if (table.fit_ok) j["fitted_periods"] = table.fitted_periods;
            out << j.dump(2) << "\n";
        } else if (arg_csv) {
            out << "m,lhs,interior_sum,residual\n";
            for (const auto& r : table.rows)
                out << r.m << "," << r.lhs << "," << r.interior_sum << "," << r.residual
                    << "\n";
        } else {
            out << "m    lhs          interior     residual\n";
            for (const auto& r : table.rows) {
                std::string m = std::to_string(r.m), l = r.lhs.str(),
                            i = r.interior_sum.str();
                auto pad = [](std::string s, std::size_t w) {
                    while (s.size() < w) s.push_back(' ');
                    return s;
                };
                out << pad(m, 5) << pad(l, 13) << pad(i, 13) << r.residual << "\n";
            }
            out << "circles: " << table.boundary_circles << "\n";
            if (table.fit_ok)
                out << "fit: periods " << fit_str() << " (0 = silent)\n";
            else
                out << "fit: inconsistent\n";
        }
        return 0;
    }
    err << "usage error: no subcommand\n";
    return 1;
}

}  // namespace

}  // namespace suspflow::cli
