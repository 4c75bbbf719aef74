// Command line front end: classify one highest weight parameter, enumerate a
// full infinitesimal character, or tabulate theta-stable lowest K-types.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hwm/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Unitarity of highest weight modules for the Hermitian groups "
                 "SO(2,n), E6(-14) and E7(-25)"};
    app.require_subcommand(1);

    std::string family, weight, dominant;
    std::string form = "lambda";
    std::string format = "text";
    int n = 0;
    int m = 0;
    int max_level = 12;

    CLI::App* cls = app.add_subcommand("classify", "Decide unitarity of one parameter");
    cls->add_option("--family", family, "so-even | so-odd | e6 | e7")->required();
    cls->add_option("--n", n, "rank parameter (so families only)");
    cls->add_option("--weight", weight, "comma-separated rational coordinates")->required();
    cls->add_option("--form", form, "lambda | infchar")->capture_default_str();
    cls->add_option("--format", format, "text | json")->capture_default_str();

    CLI::App* inf = app.add_subcommand(
        "infchar", "Classify every highest weight sharing an infinitesimal character");
    inf->add_option("--family", family, "so-even | so-odd | e6 | e7")->required();
    inf->add_option("--n", n, "rank parameter (so families only)");
    inf->add_option("--dominant", dominant, "dominant representative of the character")
        ->required();
    inf->add_option("--format", format, "text | json")->capture_default_str();

    CLI::App* th = app.add_subcommand("theta", "Tabulate lowest K-types of a theta lift");
    th->add_option("--m", m, "dual pair parameter m")->required();
    th->add_option("--max-level", max_level, "largest level n to list")->capture_default_str();
    th->add_option("--format", format, "text | json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : hwm::kExitUsage;
    }

    if (cls->parsed())
        return hwm::cmd_classify(family, n, weight, form, format, std::cout, std::cerr);
    if (inf->parsed())
        return hwm::cmd_infchar(family, n, dominant, format, std::cout, std::cerr);
    return hwm::cmd_theta(m, max_level, format, std::cout, std::cerr);
}
