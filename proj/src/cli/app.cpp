#include "shockdecay/cli.hpp"

#include "commands.hpp"
#include "config.hpp"
#include "shockdecay/errors.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

namespace shockdecay::cli {

namespace {

using Command = std::function<int(const RunConfig&, std::ostream&, std::ostream&)>;

struct Flags {
    Overrides o;
    std::string config;
};

void add_common(CLI::App& sub, Flags& f)
{
    sub.add_option("--gamma", f.o.gamma, "ratio of specific heats (default 1.4)");
    sub.add_option("--geometry", f.o.geometry, "planar | cylindrical | spherical (or 0/1/2)");
    sub.add_option("--h", f.o.h, "initial shock strength [p] at x = 1");
    sub.add_option("--k", f.o.k, "initial gradient jump [p_x] at x = 1");
    sub.add_option("--x-end", f.o.x_end, "end of the integration range");
    sub.add_option("--rtol", f.o.rtol, "relative tolerance (default 1e-10)");
    sub.add_option("--atol", f.o.atol, "absolute tolerance (default 1e-14)");
    sub.add_option("--samples", f.o.samples, "number of log-spaced output points");
    sub.add_option("--out", f.o.out, "write data here instead of stdout");
    sub.add_option("--config", f.config, "INI configuration file; flags override it");
}

void add_pulse(CLI::App& sub, Flags& f)
{
    sub.add_option("--pulse", f.o.shape, "half-sine | ramp | file");
    sub.add_option("--amplitude", f.o.amplitude, "half-sine peak, or initial slope of the ramp");
    sub.add_option("--tau0", f.o.tau0, "pulse duration");
    sub.add_option("--pulse-file", f.o.pulse_file, "CSV with header tau,v");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weak shock decay: singular-surface transport, WNGO, simple waves and CCW"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help");
    Flags f;
    Command cmd;

    auto sub = [&](const char* name, const char* help, Command c) {
        CLI::App* s = app.add_subcommand(name, help);
        s->set_help_flag("--help", "print this help");  // -h would shadow --h
        add_common(*s, f);
        s->callback([&cmd, c] { cmd = c; });
        return s;
    };
    CLI::App* evolve = sub("evolve", "integrate the truncated transport system, CSV history", cmd_evolve);
    evolve->add_option("--regime", f.o.regime, "asymptote reference: case1 | case2");
    CLI::App* asym = sub("asymptote", "tabulate the large-x decay laws", cmd_asymptote);
    asym->add_option("--regime", f.o.regime, "case1 | case2");
    sub("table1", "reproduce the reference error table", cmd_table1);
    CLI::App* cmp = sub("compare-methods", "cross-method decay exponents, JSON report", cmd_compare_methods);
    add_pulse(*cmp, f);
    CLI::App* fit = sub("fit-shock", "WNGO shock fitting for a boundary pulse, CSV", cmd_fit_shock);
    add_pulse(*fit, f);
    fit->add_option("--fit-x-end", f.o.fit_x_end, "last fitted position (default 1e4)");
    CLI::App* ccw = sub("ccw", "integrate the CCW shock ODE, CSV", cmd_ccw);
    ccw->add_option("--mach", f.o.mach, "initial Mach number U0 > 1");
    ccw->add_option("--variant", f.o.variant, "classic | generalized");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfig;
    }

    try {
        RunConfig cfg;
        if (!f.config.empty()) load_ini(f.config, cfg);
        apply(f.o, cfg);
        check(cfg);
        return cmd(cfg, out, err);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const BreakdownError& e) {
        err << "numerical failure: " << e.what() << " (x = " << e.x() << ")\n";
        return kNumerical;
    } catch (const SolverError& e) {
        err << "numerical failure: " << e.what() << " (last good x = " << e.last_good_x() << ")\n";
        return kNumerical;
    } catch (const FittingError& e) {
        err << "fitting error at x = " << e.x() << ": " << e.what() << "\n";
        return kNumerical;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::domain_error& e) {
        err << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumerical;
    }
}

}  // namespace shockdecay::cli
