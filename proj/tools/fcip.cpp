// fcip: screening, fitting and prediction for field canal improvement cost
// estimates. Exit codes: 0 ok, 1 internal error, 2 usage/input error, 3 domain error.

#include <cstdio>
#include <iostream>

#include "commands.hpp"
#include "fcip/app.hpp"
#include "fcip/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Conceptual cost estimation for field canal improvement projects", "fcip"};
  app.set_version_flag("--version", fcip::app::toolkit_version());
  app.require_subcommand(1);
  fcip::cli::add_screen(app);
  fcip::cli::add_fit(app);
  fcip::cli::add_predict(app);
  fcip::cli::add_serve(app);
  fcip::cli::add_bench(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const fcip::DomainError& e) {
    std::cerr << "fcip: " << e.what() << "\n";
    return 3;
  } catch (const fcip::InputError& e) {
    std::cerr << "fcip: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fcip: internal error: " << e.what() << "\n";
    return 1;
  }
  return fcip::cli::exit_status();
}
