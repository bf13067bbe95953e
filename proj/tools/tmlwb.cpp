// Interactive prompt and batch runner.
//
//   tmlwb                         read commands from stdin
//   tmlwb -c "cmd; cmd"           run commands and exit
//   tmlwb -f script.txt           run a script, one command per line
//
// Exit status: 0 clean, 1 a command failed, 2 a check reported ERROR findings.

#include <unistd.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "tmlwb/session.hpp"

namespace {

int run_lines(tmlwb::Session& session, const std::vector<std::string>& lines) {
    for (const auto& line : lines) {
        if (session.execute_line(line) == tmlwb::Session::Outcome::Exit) {
            break;
        }
    }
    return session.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"TimeML corpus analysis and validation workbench"};
    std::string commands;
    std::string script;
    std::string format = "text";
    std::string workspace;
    app.add_option("-c,--command", commands, "Commands to run, separated by ';'");
    app.add_option("-f,--file", script, "Script file with one command per line");
    app.add_option("--format", format, "Check findings format")->check(CLI::IsMember({"text", "json-lines"}));
    app.add_option("--workspace", workspace, "Workspace directory (default: $TMLWB_HOME or ~/.tml-workbench)");
    CLI11_PARSE(app, argc, argv);

    const auto findings = format == "json-lines" ? tmlwb::FindingFormat::JsonLines : tmlwb::FindingFormat::Text;
    try {
        tmlwb::Store store(workspace.empty() ? tmlwb::default_workspace_root() : std::filesystem::path(workspace));
        tmlwb::Session session(store, std::cout, findings);

        if (!commands.empty() || !script.empty()) {
            std::vector<std::string> lines;
            if (!script.empty()) {
                std::ifstream in(script);
                if (!in) {
                    std::cout << "error: cannot read script " << script << "\n";
                    return 1;
                }
                for (std::string line; std::getline(in, line);) {
                    lines.push_back(line);
                }
            }
            for (auto& c : tmlwb::split_commands(commands)) {
                lines.push_back(std::move(c));
            }
            return run_lines(session, lines);
        }

        const bool interactive = isatty(STDIN_FILENO) != 0;
        for (;;) {
            if (interactive) {
                std::cout << "tmlwb> " << std::flush;
            }
            std::string line;
            if (!std::getline(std::cin, line)) {
                break;
            }
            if (session.execute_line(line) == tmlwb::Session::Outcome::Exit) {
                break;
            }
        }
        if (interactive) {
            std::cout << "\n";
        }
        return session.exit_code();
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return 1;
    }
}
