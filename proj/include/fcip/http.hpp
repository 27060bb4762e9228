#pragma once

// cpp-httplib binding of the prediction service.

#include <filesystem>
#include <functional>
#include <string>

#include "fcip/app.hpp"

namespace httplib {
class Server;
}

namespace fcip::http {

/// GET /models, POST /predict, POST /cbr/retrieve.
void mount(httplib::Server& server, const app::Service& service);

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path port_file;  // written once bound, when set
};

/// Blocks until the server stops. Throws InputError when the port cannot be bound.
/// `on_bound` receives the listening port before requests are accepted.
void serve(const app::Service& service, const ServeOptions& options,
           const std::function<void(int)>& on_bound = {});

}  // namespace fcip::http
