// Eigen (via fcip headers) must precede httplib: <resolv.h> defines _res.
#include "fcip/error.hpp"
#include "fcip/http.hpp"

#include "httplib.h"

namespace fcip::http {

void mount(httplib::Server& server, const app::Service& service) {
  auto route = [&service](const httplib::Request& req, httplib::Response& res) {
    const auto out = app::handle(service, req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  server.Get("/models", route);
  server.Post("/predict", route);
  server.Post("/cbr/retrieve", route);
  server.set_error_handler([&service](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    const auto out = app::handle(service, req.method, req.path, req.body);
    res.status = res.status == 404 ? out.status : res.status;
    res.set_content(out.body, "application/json");
  });
}

void serve(const app::Service& service, const ServeOptions& options, const std::function<void(int)>& on_bound) {
  httplib::Server server;
  mount(server, service);
  // The library default adds SO_REUSEPORT, which would let a second server
  // share a busy port instead of failing.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });
  int port = options.port;
  if (port == 0) {
    port = server.bind_to_any_port(options.host);
    if (port < 0) throw InputError("cannot bind " + options.host);
  } else if (!server.bind_to_port(options.host, port)) {
    throw InputError("port " + std::to_string(port) + " on " + options.host + " is busy or not bindable");
  }
  if (!options.port_file.empty()) io::write_text(options.port_file, std::to_string(port) + "\n");
  if (on_bound) on_bound(port);
  if (!server.listen_after_bind()) throw Error("server stopped unexpectedly");
}

}  // namespace fcip::http
