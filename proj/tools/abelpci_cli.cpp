#include <iostream>

#include "abelpci/shell.hpp"

int main(int argc, char** argv) {
    const auto res = abelpci::run_cli(argc, argv);
    std::cout << res.output;
    if (!res.error.empty()) {
        std::cerr << res.error;
        if (res.error.back() != '\n') std::cerr << '\n';
    }
    return res.exit_code;
}
