#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symca/census.hpp"
#include "symca/fractal.hpp"
#include "symca/grid.hpp"
#include "symca/quadrature.hpp"
#include "symca/rational.hpp"
#include "symca/rules.hpp"

namespace fs = std::filesystem;
using namespace symca;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_builtin_name(const std::string& s) { return s == "ta" || s == "tb" || s == "ts0"; }

// --rule accepts a pinned name (ta, tb, ts0) or a path to a rule JSON file;
// wildcards in a file are expanded as 0.
rules::FullRuleTable load_rule(const std::string& spec, std::string* name_out) {
    if (is_builtin_name(spec)) {
        if (name_out) *name_out = spec;
        return rules::expand(rules::pinned(spec), 0);
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("unknown rule (not a builtin name or readable file): " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    rules::SymRuleTable table = rules::rule_from_json(buf.str());
    if (name_out) *name_out = table.name;
    return rules::expand(table, 0);
}

std::function<BigInt(std::uint64_t)> closed_num(const std::string& name) {
    if (name == "ta") return [](std::uint64_t t) { return census::num_a(t); };
    if (name == "tb") return [](std::uint64_t t) { return census::num_b(t); };
    if (name == "ts0") return [](std::uint64_t t) { return census::num_s0(t); };
    throw std::invalid_argument("no closed census form for rule: " + name);
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::invalid_argument("unwritable output path: " + path.string());
    return os;
}

std::string step_filename(int s, const std::string& ext) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "step_%04d.%s", s, ext.c_str());
    return buf;
}

void write_bitmap(const fs::path& path, const grid::PatternBitmap& bmp, const std::string& fmt) {
    std::ofstream os = open_out(path);
    if (fmt == "pbm")
        grid::write_pbm(os, bmp);
    else
        grid::write_pgm(os, bmp);
}

int cmd_evolve(const std::string& rule_spec, int steps, const std::string& out_dir,
               const std::string& fmt) {
    std::string name;
    const rules::FullRuleTable rule = load_rule(rule_spec, &name);
    fs::create_directories(out_dir);

    const grid::Window window{-steps, -steps, 2 * steps + 1, 2 * steps + 1};
    grid::Configuration c = grid::Configuration::single_site_seed();
    census::CensusSeries sim;
    sim.rule_name = name;
    sim.num.assign(std::size_t(steps) + 2, 0);
    sim.cum.assign(std::size_t(steps) + 2, 0);
    for (int s = 0; s <= steps; ++s) {
        if (s > 0) c = grid::step(rule, c);
        write_bitmap(fs::path(out_dir) / step_filename(s, fmt == "pbm" ? "pbm" : "pgm"),
                     grid::snapshot(c, window), fmt);
        sim.num[std::size_t(s) + 1] = BigInt(static_cast<unsigned long>(c.population()));
        sim.cum[std::size_t(s) + 1] = sim.cum[std::size_t(s)] + sim.num[std::size_t(s) + 1];
    }

    std::ofstream csv = open_out(fs::path(out_dir) / "census.csv");
    if (is_builtin_name(name)) {
        census::write_census_csv(csv, sim, closed_num(name));
    } else {
        csv << "t,num_sim,cum_sim\n";
        for (std::size_t t = 0; t < sim.num.size(); ++t)
            csv << t << ',' << sim.num[t] << ',' << sim.cum[t] << '\n';
    }
    return 0;
}

int cmd_census(const std::string& rule_spec, int t_max, const std::string& out) {
    std::string name;
    const rules::FullRuleTable rule = load_rule(rule_spec, &name);
    const auto closed = closed_num(name);  // named rules only
    const census::CensusSeries sim = census::census_sim(rule, t_max, name);
    bool ok;
    if (out.empty()) {
        ok = census::write_census_csv(std::cout, sim, closed);
    } else {
        std::ofstream os = open_out(out);
        ok = census::write_census_csv(os, sim, closed);
    }
    if (!ok) throw MismatchError("census mismatch for rule " + name);
    return 0;
}

int cmd_eval(const std::string& fn, const std::string& x_text, unsigned k, const std::string& alpha_text) {
    const fractal::Dyadic d = fractal::Dyadic::parse(x_text);
    BigRat value;
    std::string label;
    if (fn == "F") {
        value = fractal::F_eval(d);
        label = "F";
    } else if (fn == "G") {
        value = fractal::G_eval(d);
        label = "G";
    } else if (fn == "Hk") {
        value = fractal::H_eval(k, d);
        label = "H_" + std::to_string(k);
    } else if (fn == "salem") {
        const BigRat alpha = parse_fraction(alpha_text);
        value = fractal::salem_eval(alpha, d);
        label = "L_{" + alpha_text + "}";
    } else {
        throw std::invalid_argument("unknown function (use F, G, Hk or salem): " + fn);
    }
    std::cout << label << "(" << x_text << ") = " << rat_str(value) << " = " << decimal_str(value)
              << "\n";
    if (fn == "F") {
        const fractal::Dyadic dn = d.normalized();
        std::cout << "  = num_a(" << dn.numerator() << ")/4^" << dn.level() << "\n";
    }
    return 0;
}

int cmd_eval_grid(unsigned grid_level, unsigned k, const std::string& alpha_text,
                  const std::string& out) {
    const BigRat alpha = parse_fraction(alpha_text);
    if (grid_level > 16) throw std::invalid_argument("--grid-level above 16 not supported");
    if (out.empty()) {
        fractal::write_sample_csv(std::cout, grid_level, k, alpha);
    } else {
        std::ofstream os = open_out(out);
        fractal::write_sample_csv(os, grid_level, k, alpha);
    }
    return 0;
}

int cmd_integrate(const std::string& fn, unsigned kmax, const std::string& fmt,
                  const std::string& out) {
    if (fn != "F" && fn != "G") throw std::invalid_argument("integrate supports --fn F or G");
    std::ostringstream body;
    if (fmt == "csv") {
        body << "k,sum_num,sum_den,target,abs_error_decimal\n";
    } else {
        body << "Riemann sums of " << fn << " on dyadic grids (target "
             << (fn == "F" ? "1/9" : "1/6") << ")\n";
        body << "  k  sum                      decimal               |sum-target|\n";
    }
    for (unsigned k = 1; k <= kmax; ++k) {
        const quad::RiemannReport r = fn == "F" ? quad::riemann_sum_F(k) : quad::riemann_sum_G(k);
        if (fmt == "csv") {
            quad::write_report_csv(body, r);
        } else {
            char line[128];
            std::snprintf(line, sizeof line, "%3u  %-24s %-21s %s\n", r.k, rat_str(r.sum).c_str(),
                          decimal_str(r.sum).c_str(), decimal_str(r.error).c_str());
            body << line;
        }
    }
    if (out.empty()) {
        std::cout << body.str();
    } else {
        open_out(out) << body.str();
    }
    return 0;
}

int cmd_rulesearch(const std::string& target, int horizon, const std::string& out) {
    rules::CensusOracle oracle;
    std::string pin_name;
    if (target == "a") {
        oracle = [](int t) { return census::num_a(std::uint64_t(t)); };
        pin_name = "ta";
    } else if (target == "b") {
        oracle = [](int t) { return census::num_b(std::uint64_t(t)); };
        pin_name = "tb";
    } else if (target == "s0") {
        oracle = [](int t) { return census::num_s0(std::uint64_t(t)); };
        pin_name = "ts0";
    } else {
        throw std::invalid_argument("rulesearch target must be a, b or s0");
    }

    const std::vector<rules::SymRuleTable> matches = rules::search_rules(oracle, horizon);
    if (matches.empty())
        throw MismatchError("rulesearch: no concrete table matches the " + target +
                            " census up to horizon " + std::to_string(horizon));

    nlohmann::json j;
    j["target"] = target;
    j["horizon"] = horizon;
    j["match_count"] = matches.size();
    nlohmann::json order = nlohmann::json::array();
    for (int i = 0; i < rules::kClassCount; ++i) order.push_back(std::string(rules::class_name(i)));
    j["column_order"] = order;
    nlohmann::json marr = nlohmann::json::array();
    for (const auto& m : matches) marr.push_back(m.output_string());
    j["matches"] = marr;
    rules::SymRuleTable chosen = matches.front();
    chosen.name = pin_name;
    j["pinned"] = nlohmann::json::parse(rules::to_json(chosen));
    j["pinned_matches_stored"] = chosen.outputs == rules::pinned(pin_name).outputs;

    // first census divergence between the pinned ta and ts0 orbits
    {
        const census::CensusSeries a =
            census::census_sim(rules::expand(rules::pinned("ta"), 0), horizon, "ta");
        const census::CensusSeries s =
            census::census_sim(rules::expand(rules::pinned("ts0"), 0), horizon, "ts0");
        int diverge = -1;
        for (int t = 1; t <= horizon && diverge < 0; ++t)
            if (a.num[std::size_t(t)] != s.num[std::size_t(t)]) diverge = t;
        j["pinned_ta_vs_ts0_orbits_differ"] = diverge >= 0;
        if (diverge >= 0) j["pinned_ta_vs_ts0_first_divergence_t"] = diverge;
    }

    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        open_out(out) << text;
    }
    return 0;
}

int cmd_render_spacetime(const std::string& rule_spec, int steps, const std::string& out,
                         const std::string& fmt) {
    std::string name;
    const rules::FullRuleTable rule = load_rule(rule_spec, &name);
    const int side = 2 * steps + 1;
    int per_row = 1;
    while (per_row * per_row < steps + 1) ++per_row;
    const int rows = (steps + 1 + per_row - 1) / per_row;
    const int gap = 1;

    grid::PatternBitmap sheet;
    sheet.i0 = sheet.j0 = 0;
    sheet.width = per_row * side + (per_row - 1) * gap;
    sheet.height = rows * side + (rows - 1) * gap;
    sheet.bits.assign(std::size_t(sheet.width) * std::size_t(sheet.height), 0);

    grid::Configuration c = grid::Configuration::single_site_seed();
    const grid::Window window{-steps, -steps, side, side};
    for (int s = 0; s <= steps; ++s) {
        if (s > 0) c = grid::step(rule, c);
        const grid::PatternBitmap tile = grid::snapshot(c, window);
        const int tr = s / per_row, tc = s % per_row;
        const int row0 = tr * (side + gap), col0 = tc * (side + gap);
        for (int r = 0; r < side; ++r)
            for (int cc = 0; cc < side; ++cc)
                sheet.bits[std::size_t(row0 + r) * sheet.width + (col0 + cc)] = tile.at(r, cc);
    }
    write_bitmap(out, sheet, fmt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric 2d cellular automata: census sequences, the discontinuous "
                 "integrable functions they generate, and exact dyadic quadrature"};
    app.require_subcommand(1);

    std::string rule = "ta", fn = "F", x_text, alpha = "1/5", target = "a", out, format = "pgm";
    int steps = 15, t_max = 256, horizon = 32;
    unsigned k = 2, kmax = 10;
    int grid_level = -1;

    CLI::App* evolve = app.add_subcommand("evolve", "Evolve from the single site seed, one bitmap per step plus a census CSV");
    evolve->add_option("--rule", rule, "Rule name (ta|tb|ts0) or rule JSON path");
    evolve->add_option("--steps", steps, "Number of steps")->check(CLI::NonNegativeNumber);
    evolve->add_option("--out", out, "Output directory")->required();
    evolve->add_option("--format", format, "pgm|pbm")->check(CLI::IsMember({"pgm", "pbm"}));

    CLI::App* censusc = app.add_subcommand("census", "Simulated vs closed-form census CSV; exits 3 on mismatch");
    censusc->add_option("--rule", rule, "Rule name (ta|tb|ts0)");
    censusc->add_option("--tmax", t_max, "Largest t")->check(CLI::PositiveNumber);
    censusc->add_option("--out", out, "CSV path (stdout when omitted)");

    CLI::App* evalc = app.add_subcommand("eval", "Evaluate F, G, H_k or Salem's L_alpha exactly at a dyadic");
    evalc->add_option("--fn", fn, "F|G|Hk|salem");
    evalc->add_option("--x", x_text, "Dyadic t/2^k, e.g. 3/8");
    evalc->add_option("--k", k, "Digit count for Hk");
    evalc->add_option("--alpha", alpha, "Parameter for salem, e.g. 1/5");
    evalc->add_option("--grid-level", grid_level, "Sample every function over the level-k dyadic grid as CSV");
    evalc->add_option("--out", out, "Output path (stdout when omitted)");

    CLI::App* integratec = app.add_subcommand("integrate", "Exact Riemann-sum convergence table");
    integratec->add_option("--fn", fn, "F|G");
    integratec->add_option("--kmax", kmax, "Finest grid level")->check(CLI::PositiveNumber);
    integratec->add_option("--format", format, "table|csv");
    integratec->add_option("--out", out, "Output path (stdout when omitted)");

    CLI::App* searchc = app.add_subcommand("rulesearch", "Exhaustive 12-class table search against a census oracle");
    searchc->add_option("--target", target, "a|b|s0");
    searchc->add_option("--horizon", horizon, "Steps to verify")->check(CLI::Range(2, 256));
    searchc->add_option("--out", out, "JSON path (stdout when omitted)");

    CLI::App* renderc = app.add_subcommand("render-spacetime", "Contact sheet of all steps in one bitmap");
    renderc->add_option("--rule", rule, "Rule name (ta|tb|ts0) or rule JSON path");
    renderc->add_option("--steps", steps, "Number of steps")->check(CLI::NonNegativeNumber);
    renderc->add_option("--out", out, "Output bitmap path")->required();
    renderc->add_option("--format", format, "pgm|pbm")->check(CLI::IsMember({"pgm", "pbm"}));

    try {
        app.parse(argc, argv);
        if (evolve->parsed()) return cmd_evolve(rule, steps, out, format);
        if (censusc->parsed()) return cmd_census(rule, t_max, out);
        if (evalc->parsed()) {
            if (grid_level >= 0) return cmd_eval_grid(unsigned(grid_level), k, alpha, out);
            if (x_text.empty()) throw std::invalid_argument("eval: --x (or --grid-level) is required");
            return cmd_eval(fn, x_text, k, alpha);
        }
        if (integratec->parsed()) return cmd_integrate(fn, kmax, format, out);
        if (searchc->parsed()) return cmd_rulesearch(target, horizon, out);
        if (renderc->parsed()) return cmd_render_spacetime(rule, steps, out, format);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
