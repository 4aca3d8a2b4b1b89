#include <orb/cli.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const orb::CommandResult result = orb::run(args);

    for (const auto& d : result.diagnostics) std::cerr << d << "\n";

    if (!result.raw_text.empty()) {
        std::cout << result.raw_text;
        return result.exit_code;
    }

    const std::string text = orb::render_payload(result.payload, result.tsv);
    if (!result.out_file.empty()) {
        std::ofstream out(result.out_file);
        if (!out) {
            std::cerr << "cannot write " << result.out_file << "\n";
            return 1;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return result.exit_code;
}
