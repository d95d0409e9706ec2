#include <iostream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "bdae_cli/cli.hpp"

int main(int argc, char** argv) {
    // Logs go to stderr so stdout carries only results.
    spdlog::set_default_logger(spdlog::stderr_color_mt("bdae"));
    spdlog::set_pattern("[%l] %v");
    return bdae::cli::run(argc, argv, std::cout, std::cerr);
}
