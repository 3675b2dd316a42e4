#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wig/adic.hpp"
#include "wig/io.hpp"
#include "wig/phase_space.hpp"
#include "wig/second_degree.hpp"
#include "wig/suite.hpp"

namespace {

using wig::Json;

struct Options {
    std::string group_csv;
    std::string state_path;
    std::string with_path;
    std::string window_path;
    std::string spec_path;
    std::string in_path;
    std::string out_path;
    std::string format = "json";
    std::int64_t base = 2;
    std::int64_t isotropic_index = 0;
    double tol = 1e-9;
    std::uint64_t seed = 20260823;
    std::int64_t samples = 100;
    bool inverse = false;
    bool inject_fault = false;
    int only_criterion = 0;
};

std::ostream& output_stream(const Options& opt, std::ofstream& file) {
    if (opt.out_path.empty()) return std::cout;
    file.open(opt.out_path);
    if (!file) throw std::invalid_argument("cannot open " + opt.out_path + " for writing");
    return file;
}

wig::Group parse_group(const std::string& csv) {
    std::vector<std::int64_t> orders;
    std::stringstream ss(csv);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        orders.push_back(std::stoll(part));
    }
    return wig::make_group(orders);
}

wig::Group require_two_regular(const std::string& csv) {
    wig::Group g = parse_group(csv);
    if (!wig::is_two_regular(g)) {
        throw wig::NotTwoRegular("group order must be odd (2-regular)");
    }
    return g;
}

wig::StateVector load_state(const Options& opt) {
    wig::StateVector f = wig::state_from_json(wig::load_json_file(opt.state_path));
    if (!opt.group_csv.empty() && !(parse_group(opt.group_csv) == f.group)) {
        throw wig::GroupMismatch("--group does not match the state file");
    }
    return f;
}

Json record_to_json(const wig::ReportRecord& r) {
    return Json{{"name", r.name},         {"tag", r.tag},
                {"status", r.pass ? "pass" : "fail"}, {"measured", r.measured},
                {"tolerance", r.tolerance},           {"detail", r.detail}};
}

void emit_table(const Options& opt, const wig::PhaseTable& t) {
    std::ofstream file;
    std::ostream& out = output_stream(opt, file);
    if (opt.format == "csv") {
        out << wig::table_to_csv(t);
    } else if (opt.format == "human") {
        out << "Wigner/phase-space table on " << wig::group_to_json(t.group).dump() << "\n"
            << wig::table_to_csv(t);
    } else {
        out << wig::table_to_json(t).dump() << "\n";
    }
}

void emit_json(const Options& opt, const Json& j) {
    std::ofstream file;
    std::ostream& out = output_stream(opt, file);
    out << j.dump() << "\n";
}

int run_suite(const Options& opt) {
    wig::SuiteConfig cfg;
    cfg.seed = opt.seed;
    cfg.inject_fault = opt.inject_fault;
    cfg.only_criterion = opt.only_criterion;
    auto results = wig::run_acceptance_suite(cfg);
    std::ofstream file;
    std::ostream& out = output_stream(opt, file);
    bool all_pass = true;
    for (const auto& cr : results) {
        for (const auto& rec : cr.records) {
            if (opt.format == "human") {
                out << "  [" << (rec.pass ? "pass" : "FAIL") << "] " << rec.name
                    << " measured=" << rec.measured << " tol=" << rec.tolerance << "\n";
            } else {
                Json j = record_to_json(rec);
                j["criterion"] = cr.index;
                out << j.dump() << "\n";
            }
        }
        std::ostringstream line;
        line << "criterion " << cr.index << " [" << (cr.pass ? "pass" : "FAIL") << "] "
             << cr.title << " (" << cr.seconds << "s)";
        if (opt.format == "human") {
            out << line.str() << "\n";
        } else {
            out << Json{{"criterion", cr.index},
                        {"status", cr.pass ? "pass" : "fail"},
                        {"title", cr.title},
                        {"seconds", cr.seconds}}
                       .dump()
                << "\n";
        }
        all_pass = all_pass && cr.pass;
    }
    return all_pass ? 0 : 1;
}

int dispatch(CLI::App& app, const Options& opt_in) {
    Options opt = opt_in;

    if (app.got_subcommand("group")) {
        CLI::App* grp = app.get_subcommand("group");
        wig::Group g = parse_group(opt.group_csv);
        if (grp->got_subcommand("info")) {
            emit_json(opt, Json{{"orders", g.orders},
                                {"cardinality", g.cardinality},
                                {"two_regular", wig::is_two_regular(g)},
                                {"character_phase_lcm", g.phase_lcm}});
            return 0;
        }
        Json subs = Json::array();
        for (const auto& h : wig::enumerate_subgroups(g)) {
            Json j = wig::subgroup_to_json(h);
            j["order"] = h.order();
            subs.push_back(std::move(j));
        }
        emit_json(opt, Json{{"group", wig::group_to_json(g)}, {"subgroups", subs}});
        return 0;
    }

    if (app.got_subcommand("fourier")) {
        wig::StateVector f = load_state(opt);
        emit_json(opt, wig::state_to_json(opt.inverse ? wig::inverse_fourier(f)
                                                      : wig::fourier(f)));
        return 0;
    }

    if (app.got_subcommand("wigner")) {
        CLI::App* wg = app.get_subcommand("wigner");
        wig::StateVector f = load_state(opt);
        if (!wig::is_two_regular(f.group)) {
            throw wig::NotTwoRegular("wigner requires an odd-order group");
        }
        wig::PhaseTable w = wig::wigner(f);
        if (wg->got_subcommand("compute")) {
            emit_table(opt, w);
            return 0;
        }
        if (wg->got_subcommand("min")) {
            wig::MinEntry me = wig::min_entry(w, opt.tol);
            emit_json(opt, Json{{"min", me.value},
                                {"x_index", me.where.x_index},
                                {"dual_index", me.where.dual_index}});
            return 0;
        }
        auto specs = wig::enumerate_max_isotropic(f.group);
        if (opt.isotropic_index < 0 ||
            opt.isotropic_index >= static_cast<std::int64_t>(specs.size())) {
            throw std::invalid_argument("--isotropic index out of range");
        }
        wig::PhaseTable sm = wig::smooth_with_subgroup(
            w, specs[static_cast<std::size_t>(opt.isotropic_index)].elements);
        emit_table(opt, sm);
        return 0;
    }

    if (app.got_subcommand("stft")) {
        wig::StateVector f = load_state(opt);
        wig::StateVector g = wig::state_from_json(wig::load_json_file(opt.window_path));
        emit_table(opt, wig::stft(f, g));
        return 0;
    }

    if (app.got_subcommand("sstate")) {
        CLI::App* ss = app.get_subcommand("sstate");
        if (ss->got_subcommand("enum")) {
            wig::Group g = require_two_regular(opt.group_csv);
            auto states = wig::enumerate_sstates(g);
            Json arr = Json::array();
            for (const auto& s : states) arr.push_back(wig::state_to_json(s));
            if (opt.format == "human") {
                emit_json(opt, Json{{"count", states.size()}});
            } else {
                emit_json(opt, Json{{"count", states.size()}, {"states", arr}});
            }
            return 0;
        }
        if (ss->got_subcommand("make")) {
            wig::Group g = require_two_regular(opt.group_csv);
            wig::SStateSpec spec =
                wig::sstate_spec_from_json(g, wig::load_json_file(opt.spec_path));
            emit_json(opt, wig::state_to_json(wig::make_sstate(spec)));
            return 0;
        }
        wig::StateVector f = load_state(opt);
        if (!wig::is_two_regular(f.group)) {
            throw wig::NotTwoRegular("sstate detect requires an odd-order group");
        }
        auto spec = wig::detect_sstate(f, opt.tol);
        Json j{{"detected", spec.has_value()}};
        if (spec) j["spec"] = wig::sstate_spec_to_json(*spec);
        emit_json(opt, j);
        return 0;
    }

    if (app.got_subcommand("isotropic")) {
        wig::Group g = require_two_regular(opt.group_csv);
        Json arr = Json::array();
        for (const auto& spec : wig::enumerate_max_isotropic(g)) {
            arr.push_back(Json{{"H", wig::subgroup_to_json(spec.H)},
                               {"beta", spec.beta.matrix},
                               {"size", spec.elements.size()}});
        }
        emit_json(opt, Json{{"group", wig::group_to_json(g)}, {"isotropic", arr}});
        return 0;
    }

    if (app.got_subcommand("hudson")) {
        CLI::App* hd = app.get_subcommand("hudson");
        if (hd->got_subcommand("classify")) {
            if (!opt.group_csv.empty()) require_two_regular(opt.group_csv);
            wig::StateVector f = load_state(opt);
            if (!wig::is_two_regular(f.group)) {
                throw wig::NotTwoRegular("hudson classify requires an odd-order group");
            }
            wig::HudsonReport rep = wig::hudson_classify(f, opt.tol);
            Json j{{"positive", rep.positive},
                   {"min", rep.min_value},
                   {"x_index", rep.min_location.x_index},
                   {"dual_index", rep.min_location.dual_index}};
            if (rep.sstate) {
                j["sstate"] = wig::sstate_spec_to_json(*rep.sstate);
                j["indicator_error"] = rep.indicator_error;
            }
            emit_json(opt, j);
            return 0;
        }
        // sample-converse: seeded random states must be negative somewhere or
        // be genuine S-states.
        wig::Group g = require_two_regular(opt.group_csv);
        std::mt19937_64 rng(opt.seed);
        std::int64_t violations = 0;
        for (std::int64_t i = 0; i < opt.samples; ++i) {
            wig::StateVector f = wig::random_state(g, rng);
            wig::MinEntry me = wig::min_entry(wig::wigner(f), 1e-7);
            if (me.value >= -1e-4 && !wig::detect_sstate(f, opt.tol)) ++violations;
        }
        wig::ReportRecord rec{"hudson-sample-converse", "negative-wigner-sampling",
                              violations == 0, static_cast<double>(violations), 0.0,
                              std::to_string(opt.samples) + " samples"};
        emit_json(opt, record_to_json(rec));
        return rec.pass ? 0 : 1;
    }

    if (app.got_subcommand("wehrl")) {
        wig::StateVector f = wig::normalized(load_state(opt));
        wig::StateVector g = opt.window_path.empty()
                                 ? wig::reflect(f)
                                 : wig::normalized(wig::state_from_json(
                                       wig::load_json_file(opt.window_path)));
        double l1 = wig::wehrl_l1(f, g);
        bool bound_holds = l1 >= 1.0 - opt.tol;
        wig::ReportRecord rec{"wehrl-bound", "wehrl-lower-bound", bound_holds, l1, opt.tol,
                              bound_holds && std::abs(l1 - 1.0) < 1e-8 ? "equality"
                                                                       : "strict"};
        emit_json(opt, record_to_json(rec));
        return bound_holds ? 0 : 1;
    }

    if (app.got_subcommand("tensor")) {
        wig::StateVector f = load_state(opt);
        wig::StateVector g = wig::state_from_json(wig::load_json_file(opt.with_path));
        emit_json(opt, wig::state_to_json(wig::tensor(f, g)));
        return 0;
    }

    if (app.got_subcommand("adic")) {
        CLI::App* ad = app.get_subcommand("adic");
        if (ad->got_subcommand("halve") || ad->got_subcommand("double")) {
            wig::NAdicNumber x = wig::nadic_from_json(wig::load_json_file(opt.in_path));
            emit_json(opt, wig::nadic_to_json(ad->got_subcommand("halve")
                                                  ? wig::nadic_halve(x)
                                                  : wig::nadic_double(x)));
            return 0;
        }
        if (ad->got_subcommand("lambda2")) {
            wig::Rational r = wig::doubling_constant(opt.base);
            emit_json(opt, Json{{"base", opt.base},
                                {"num", r.num},
                                {"den", r.den},
                                {"value", static_cast<double>(r.num) /
                                              static_cast<double>(r.den)}});
            return 0;
        }
        if (ad->got_subcommand("wigner")) {
            wig::SchwartzBruhatFn f = wig::sb_from_json(wig::load_json_file(opt.in_path));
            wig::SbWignerTable w = wig::sb_wigner(f);
            std::ofstream file;
            std::ostream& out = output_stream(opt, file);
            if (opt.format == "csv") {
                out << wig::sb_table_to_csv(w);
            } else {
                out << wig::sb_table_to_json(w).dump() << "\n";
            }
            return 0;
        }
        // sample-negativity: even bases must show a strictly negative value
        // on every sampled nonzero function.
        if (opt.base % 2 != 0) {
            throw std::invalid_argument(
                "adic sample-negativity applies to even bases (odd bases are 2-regular)");
        }
        std::mt19937_64 rng(opt.seed);
        std::int64_t violations = 0;
        double worst = -1.0;
        for (std::int64_t i = 0; i < opt.samples; ++i) {
            wig::SchwartzBruhatFn f = wig::random_sb(opt.base, -1, 2, rng);
            wig::SbMinEntry me = wig::sb_min(wig::sb_wigner(f), 1e-7);
            worst = std::max(worst, me.value);
            if (me.value >= -1e-6) ++violations;
        }
        wig::ReportRecord rec{"adic-sample-negativity/base" + std::to_string(opt.base),
                              "adic-negativity-sampling", violations == 0, worst, 1e-6,
                              std::to_string(opt.samples) + " samples"};
        emit_json(opt, record_to_json(rec));
        return rec.pass ? 0 : 1;
    }

    if (app.got_subcommand("solenoid")) {
        CLI::App* so = app.get_subcommand("solenoid");
        if (so->got_subcommand("kernel")) {
            emit_json(opt, wig::solenoid_to_json(wig::solenoid_doubling_kernel(opt.base)));
            return 0;
        }
        wig::SolenoidPoint p = wig::solenoid_from_json(wig::load_json_file(opt.in_path));
        emit_json(opt, wig::solenoid_to_json(so->got_subcommand("halve")
                                                 ? wig::solenoid_halve(p)
                                                 : wig::solenoid_double(p)));
        return 0;
    }

    if (app.got_subcommand("suite")) {
        return run_suite(opt);
    }

    std::cerr << app.help();
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase-space analysis on 2-regular groups: Wigner/ambiguity/STFT "
                 "transforms, S-states, n-adic and solenoid arithmetic"};
    app.require_subcommand(0, 1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--group", opt.group_csv, "comma-separated cyclic orders d1,d2,...");
        cmd->add_option("--state", opt.state_path, "StateVector JSON file");
        cmd->add_option("--with", opt.with_path, "second StateVector JSON file");
        cmd->add_option("--window", opt.window_path, "window StateVector JSON file");
        cmd->add_option("--spec", opt.spec_path, "SStateSpec JSON file");
        cmd->add_option("--in", opt.in_path, "input JSON file (n-adic / solenoid / SB)");
        cmd->add_option("--out", opt.out_path, "write output to this path");
        cmd->add_option("--format", opt.format, "json|csv|human")->default_str("json");
        cmd->add_option("--base", opt.base, "n-adic base");
        cmd->add_option("--tol", opt.tol, "tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opt.seed, "RNG seed");
        cmd->add_option("--samples", opt.samples, "sample count")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--isotropic", opt.isotropic_index,
                        "index into the enumerated isotropic subgroups");
        return cmd;
    };

    CLI::App* grp = app.add_subcommand("group", "group structure queries");
    add_common(grp->add_subcommand("info", "orders, cardinality, 2-regularity"));
    add_common(grp->add_subcommand("subgroups", "enumerate all subgroups"));
    grp->require_subcommand(1);

    CLI::App* four = add_common(app.add_subcommand("fourier", "Fourier transform a state"));
    four->add_flag("--inverse", opt.inverse, "apply the inverse transform");

    CLI::App* wg = app.add_subcommand("wigner", "Wigner distribution");
    add_common(wg->add_subcommand("compute", "full phase-space table"));
    add_common(wg->add_subcommand("min", "minimum entry and location"));
    add_common(wg->add_subcommand("smooth", "convolve with an isotropic subgroup"));
    wg->require_subcommand(1);

    add_common(app.add_subcommand("stft", "short-time Fourier transform"));

    CLI::App* ss = app.add_subcommand("sstate", "S-state operations");
    add_common(ss->add_subcommand("enum", "enumerate all S-states up to scalar"));
    add_common(ss->add_subcommand("make", "build a state from a symbolic spec"));
    add_common(ss->add_subcommand("detect", "recover a symbolic spec from a state"));
    ss->require_subcommand(1);

    add_common(app.add_subcommand("isotropic", "maximal compact open isotropic subgroups"))
        ->alias("isotropic-enum");

    CLI::App* hd = app.add_subcommand("hudson", "Wigner positivity classification");
    add_common(hd->add_subcommand("classify", "positivity + S-state certificate"));
    add_common(hd->add_subcommand("sample-converse", "seeded negativity sampling"));
    hd->require_subcommand(1);

    add_common(app.add_subcommand("wehrl", "Wehrl-type L1 bound check"))
        ->require_subcommand(0);
    CLI::App* we = app.get_subcommand("wehrl");
    add_common(we->add_subcommand("check", "verify the lower bound on a state"));

    add_common(app.add_subcommand("tensor", "tensor product of two states"));

    CLI::App* ad = app.add_subcommand("adic", "n-adic arithmetic and Wigner tables");
    add_common(ad->add_subcommand("halve", "solve 2x = y digit by digit"));
    add_common(ad->add_subcommand("double", "digit doubling with carries"));
    add_common(ad->add_subcommand("lambda2", "doubling constant of the base"));
    add_common(ad->add_subcommand("wigner", "Wigner table of a Schwartz-Bruhat function"));
    add_common(ad->add_subcommand("sample-negativity", "seeded negativity sampling"));
    ad->require_subcommand(1);

    CLI::App* so = app.add_subcommand("solenoid", "solenoid arithmetic");
    add_common(so->add_subcommand("halve", "halve a point (even bases)"));
    add_common(so->add_subcommand("double", "double a point"));
    add_common(so->add_subcommand("kernel", "doubling-kernel witness (odd bases)"));
    so->require_subcommand(1);

    CLI::App* su = app.add_subcommand("suite", "acceptance battery");
    CLI::App* sr = add_common(su->add_subcommand("run", "run every criterion"));
    sr->add_flag("--inject-fault", opt.inject_fault,
                 "corrupt one table to verify the harness reports failures");
    sr->add_option("--criterion", opt.only_criterion,
                   "run only this acceptance criterion (1-10)");
    su->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
