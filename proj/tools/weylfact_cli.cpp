// weylfact: Newton polygons and formal factorizations of linear ODE operators.

#include <CLI11.hpp>
#include <iostream>

#include "weylfact/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Newton polygons, spectra and formal factorizations of operators in t, D = d/dt, E = t d/dt"};
    weylfact::Command cmd;
    int truncation = weylfact::default_truncation;

    app.add_option("command", cmd.verb, "analyze | factor | verify | diagram")
        ->required()
        ->check(CLI::IsMember({"analyze", "factor", "verify", "diagram"}));
    app.add_option("expression", cmd.expression, "operator, e.g. \"t*E^2 + E + 1\"");
    auto* n_opt = app.add_option("-N,--truncation", truncation, "keep powers t^j with j <= N (default 16)")
                      ->check(CLI::PositiveNumber);
    app.add_option("--mode", cmd.mode, "factorization mode")
        ->check(CLI::IsMember({"slopes", "characteristic", "monic"}));
    app.add_option("--format", cmd.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--split", cmd.split, "characteristic split s1,s2 as polynomials in l");
    app.add_option("--file", cmd.file, "JSON operator (or factor output, for verify)");
    app.add_option("--factor", cmd.factors, "verify: factor expression, repeat in left-to-right order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (*n_opt) cmd.truncation = truncation;
    return weylfact::run(cmd, std::cout, std::cerr);
}
