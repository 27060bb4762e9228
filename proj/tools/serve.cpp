#include <iostream>
#include <memory>

#include "commands.hpp"
#include "fcip/app.hpp"
#include "fcip/error.hpp"
#include "fcip/http.hpp"

namespace fcip::cli {

void add_serve(CLI::App& app) {
  struct Args {
    std::vector<std::string> models;
    http::ServeOptions options;
    std::string port_file;
  };
  auto a = std::make_shared<Args>();
  auto* s = app.add_subcommand("serve", "Serve predictions over HTTP");
  s->add_option("--model", a->models, "Model JSON files (repeatable)")->required();
  s->add_option("--host", a->options.host, "Bind address")->capture_default_str();
  s->add_option("--port", a->options.port, "Port, 0 for any free port")->capture_default_str();
  s->add_option("--port-file", a->port_file, "Write the bound port to this file");
  s->callback([a] {
    app::ModelRegistry registry;
    for (const auto& path : a->models) registry.add(app::load_model(path));
    const app::Service service(std::move(registry));
    a->options.port_file = a->port_file;
    http::serve(service, a->options, [&](int port) {
      std::cout << "listening on http://" << a->options.host << ":" << port << " with "
                << service.registry().models().size() << " model(s)" << std::endl;
    });
  });
}

}  // namespace fcip::cli
