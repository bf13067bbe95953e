// Writes the synthetic TimeML test corpus into a directory.

#include <CLI11.hpp>
#include <iostream>

#include "tmlwb/fixtures.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate the synthetic TimeML fixture corpus"};
    std::string dir;
    app.add_option("dir", dir, "Output directory")->required();
    CLI11_PARSE(app, argc, argv);
    try {
        for (const auto& path : tmlwb::generate_fixtures(dir)) {
            std::cout << path.string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
