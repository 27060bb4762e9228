#pragma once

#include "CLI11.hpp"

namespace fcip::cli {

/// Status returned by main when a command completes without throwing.
int& exit_status();

void add_screen(CLI::App& app);
void add_fit(CLI::App& app);
void add_predict(CLI::App& app);
void add_bench(CLI::App& app);
void add_serve(CLI::App& app);

}  // namespace fcip::cli
