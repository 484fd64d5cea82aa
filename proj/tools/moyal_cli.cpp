// moyal: phase-space quantum mechanics for time-dependent oscillators.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
// guard trip.
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "moyal/invariant.hpp"
#include "moyal/models.hpp"
#include "moyal/parallel.hpp"
#include "moyal/star.hpp"
#include "moyal/starexp.hpp"
#include "moyal/verify.hpp"

using namespace moyal;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Globals {
    double hbar = 1.0;
    std::string model = "sho";
    std::vector<std::string> params;
    int grid_n = 256;
    std::string out;
    std::string format = "csv";
    int threads = 1;
};

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ValidationError("--param expects key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return out;
}

TDModel model_of(const Globals& g) {
    return build_model(ModelPreset::from_name(g.model, parse_params(g.params)));
}

void write_symbol(const GridSymbol& s, const std::string& path, const std::string& format) {
    if (format == "csv")
        write_csv(s, path);
    else if (format == "json")
        write_json(s, path);
    else
        throw ValidationError("--format must be csv or json");
}

GridSymbol read_symbol(const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return read_json(path);
    return read_csv(path);
}

std::vector<int> parse_n_range(const std::string& spec) {
    std::vector<int> ns;
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        ns.push_back(std::stoi(spec));
    } else {
        int lo = std::stoi(spec.substr(0, dots));
        int hi = std::stoi(spec.substr(dots + 2));
        if (hi < lo) throw ValidationError("--n range upper bound below lower bound");
        for (int n = lo; n <= hi; ++n) ns.push_back(n);
    }
    for (int n : ns)
        if (n < 0) throw ValidationError("--n must be >= 0");
    return ns;
}

int cmd_wigner(const Globals& g, const std::string& nspec, const std::string& frame,
               double time) {
    auto ns = parse_n_range(nspec);
    TDModel model = model_of(g);
    PhysContext ctx(g.hbar, model.Omega);
    int nmax = *std::max_element(ns.begin(), ns.end());
    PhaseGrid grid = wigner_auto_grid(nmax, ctx, g.grid_n);
    std::string prefix = g.out.empty() ? "wigner" : g.out;

    InvariantSpec spec{model, solve_rho(model, 0.0, std::max(time, 1.0) + 1.0, 1e-10), ctx};
    for (int n : ns) {
        GridSymbol w = (frame == "xi") ? wigner_n_xipi(n, ctx, grid)
                                       : wigner_n(n, spec, grid, Frame::x_p, time);
        SymbolNorms norms = symbol_norms(w);
        double neg = 0.0, tot = 0.0, minv = 0.0;
        for (const cplx& v : w.values) {
            tot += std::abs(v.real());
            if (v.real() < 0.0) neg += -v.real();
            minv = std::min(minv, v.real());
        }
        std::string path = prefix + "_n" + std::to_string(n) + "." + g.format;
        write_symbol(w, path, g.format);
        std::cout << "n=" << n << " file=" << path << " integral=" << fmt17(norms.integral.real())
                  << " min=" << fmt17(minv) << " negative_mass_fraction=" << fmt17(neg / tot)
                  << "\n";
    }
    return 0;
}

int cmd_starexp(const Globals& g, double tau, const std::string& routes_csv, int nmax,
                double abel_r, bool diff) {
    TDModel model = model_of(g);
    PhysContext ctx(g.hbar, model.Omega);
    PhaseGrid grid = wigner_auto_grid(2, ctx, g.grid_n);
    GridSymbol h = sho_hamiltonian_symbol(grid, ctx);

    std::vector<std::string> routes;
    for (std::size_t pos = 0; pos < routes_csv.size();) {
        auto comma = routes_csv.find(',', pos);
        if (comma == std::string::npos) comma = routes_csv.size();
        routes.push_back(routes_csv.substr(pos, comma - pos));
        pos = comma + 1;
    }
    std::vector<std::pair<std::string, GridSymbol>> results;
    for (const auto& r : routes) {
        if (r == "closed")
            results.emplace_back(r, star_exp_closed(h, tau, ctx));
        else if (r == "propagator")
            results.emplace_back(r, star_exp_via_propagator(grid, tau, ctx));
        else if (r == "dirichlet")
            results.emplace_back(r, fourier_dirichlet_sum(grid, tau, nmax, abel_r, ctx));
        else
            throw ValidationError("--route must be closed|propagator|dirichlet");
    }
    if (!g.out.empty()) write_symbol(results.front().second, g.out, g.format);
    std::cout << "tau=" << fmt17(tau) << " Omega=" << fmt17(ctx.omega_cap)
              << " routes=" << routes_csv << "\n";
    if (diff && results.size() >= 2) {
        for (std::size_t i = 0; i + 1 < results.size(); ++i)
            for (std::size_t j = i + 1; j < results.size(); ++j) {
                double scale = max_abs_interior(results[i].second, 0.5);
                double d = max_abs_diff_interior(results[i].second, results[j].second, 0.5);
                std::cout << "max_rel_diff(" << results[i].first << "," << results[j].first
                          << ")=" << fmt17(d / scale) << "\n";
            }
    }
    return 0;
}

int cmd_evolve(const Globals& g, double tau, const std::string& in, const std::string& route) {
    GridSymbol w0 = read_symbol(in);
    PhysContext ctx(g.hbar, model_of(g).Omega);
    EvolveRoute r = route == "conjugation" ? EvolveRoute::conjugation : EvolveRoute::rotation;
    if (route != "rotation" && route != "conjugation")
        throw ValidationError("--route must be rotation|conjugation");
    EvolveResult res = evolve_wigner(w0, tau, ctx, r);
    std::string path = g.out.empty() ? "evolved." + g.format : g.out;
    write_symbol(res.w, path, g.format);
    std::cout << "tau=" << fmt17(tau) << " route=" << route << " file=" << path
              << " clipped_fraction=" << fmt17(res.clipped_fraction) << "\n";
    return 0;
}

int cmd_tau(const Globals& g, double t, double t1, int samples) {
    TDModel model = model_of(g);
    double horizon = std::max({std::abs(t), t1, 1.0});
    ErmakovSolution sol = solve_rho(model, 0.0, horizon, 1e-12);
    if (samples > 0) {
        std::string path = g.out.empty() ? "tau.csv" : g.out;
        std::ofstream out(path);
        if (!out) throw ValidationError("cannot open for writing: " + path);
        out << "t,rho,rhodot,tau\n";
        for (int k = 0; k <= samples; ++k) {
            double tk = t1 * k / samples;
            out << fmt17(tk) << ',' << fmt17(sol.rho(tk)) << ',' << fmt17(sol.rhodot(tk)) << ','
                << fmt17(sol.tau(tk)) << '\n';
        }
        std::cout << "wrote " << path << " (" << samples + 1 << " samples)\n";
    }
    std::cout << fmt17(sol.tau(t)) << "\n";
    return 0;
}

int cmd_invariant(const Globals& g, double x, double p, double t) {
    TDModel model = model_of(g);
    PhysContext ctx(g.hbar, model.Omega);
    InvariantSpec spec{model, solve_rho(model, 0.0, std::max(std::abs(t), 1.0), 1e-12), ctx};
    auto [xi, pi] = xi_pi_of_xp(spec, x, p, t);
    std::cout << "xi=" << fmt17(xi) << " pi=" << fmt17(pi)
              << " I=" << fmt17(invariant_eval(spec, x, p, t)) << "\n";
    return 0;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& suites,
               bool model_given) {
    verify::Report rep = verify::run_suites(suites, model_given ? g.model : std::string());
    std::string path = g.out.empty() ? "verify_report.json" : g.out;
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open for writing: " + path);
    out << rep.to_json() << "\n";
    for (const auto& r : rep.rows)
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << "/" << r.metric
                  << " value=" << fmt17(r.value) << " tol=" << fmt17(r.tolerance) << "\n";
    std::cout << (rep.all_pass() ? "all suites passed" : "verification FAILED") << " (report: "
              << path << ")\n";
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Globals g;
    CLI::App app{"phase-space quantum mechanics for time-dependent oscillators"};
    app.set_config("--config");
    app.add_option("--hbar", g.hbar, "Planck constant (default 1)");
    app.add_option("--model", g.model, "model preset: sho|ck|tdf");
    app.add_option("--param", g.params, "model parameter override key=value (repeatable)");
    app.add_option("--grid", g.grid_n, "grid points per axis (power of two)");
    app.add_option("--out", g.out, "output file or prefix");
    app.add_option("--format", g.format, "output format: csv|json");
    app.add_option("--threads", g.threads, "worker threads (default 1)");
    app.require_subcommand(1);

    std::string nspec = "0", frame = "xi", routes = "closed", ev_route = "rotation", in_file;
    double time = 0.0, tau = 0.0, t = 0.0, t1 = 10.0, abel_r = 0.999;
    double inv_x = 1.0, inv_p = 0.0;
    int nmax = 400, samples = 0;
    std::vector<std::string> suites;

    auto* wigner = app.add_subcommand("wigner", "diagonal Wigner functions W_n");
    wigner->add_option("--n", nspec, "index or range, e.g. 0..3");
    wigner->add_option("--frame", frame, "xi (scaled) or x (pullback at --time)");
    wigner->add_option("--time", time, "evaluation time for the x frame");

    auto* starexp = app.add_subcommand("starexp", "star exponential of the oscillator");
    starexp->add_option("--tau", tau, "evolution parameter tau")->required();
    starexp->add_option("--route", routes, "closed|propagator|dirichlet (comma list)");
    starexp->add_option("--nmax", nmax, "Fourier-Dirichlet terms");
    starexp->add_option("--abel-r", abel_r, "Abel regularization factor in (0,1]");
    bool diff = false;
    starexp->add_flag("--diff", diff, "print pairwise route differences");

    auto* evolve = app.add_subcommand("evolve", "evolve a Wigner function by tau");
    evolve->add_option("--tau", tau, "evolution parameter tau")->required();
    evolve->add_option("--in", in_file, "input symbol (csv or json)")->required();
    evolve->add_option("--route", ev_route, "rotation|conjugation");

    auto* tau_cmd = app.add_subcommand("tau", "nonlinear time tau(t)");
    tau_cmd->add_option("--t", t, "evaluation time")->required();
    tau_cmd->add_option("--t1", t1, "table end time for --samples");
    tau_cmd->add_option("--samples", samples, "write t,rho,rhodot,tau table with N+1 rows");

    auto* inv = app.add_subcommand("invariant", "Lewis-Riesenfeld invariant at a point");
    inv->add_option("--x", inv_x, "position");
    inv->add_option("--p", inv_p, "momentum");
    inv->add_option("--t", t, "time");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suites, "suite name (repeatable); default all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        set_default_threads(g.threads);
        if (*wigner) return cmd_wigner(g, nspec, frame, time);
        if (*starexp) return cmd_starexp(g, tau, routes, nmax, abel_r, diff);
        if (*evolve) return cmd_evolve(g, tau, in_file, ev_route);
        if (*tau_cmd) return cmd_tau(g, t, t1, samples);
        if (*inv) return cmd_invariant(g, inv_x, inv_p, t);
        if (*verify_cmd) return cmd_verify(g, suites, app.count("--model") > 0);
    } catch (const ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const NumericGuard& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
