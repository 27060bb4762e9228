#include <thread>

#include "doctest.h"
#include "fcip/app.hpp"
#include "fcip/http.hpp"

#include "httplib.h"

using namespace fcip;
using app::Json;

namespace {

struct Running {
  httplib::Server server;
  std::thread thread;
  int port = 0;

  explicit Running(const app::Service& service) {
    http::mount(server, service);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~Running() {
    server.stop();
    thread.join();
  }
};

app::Service make_service() {
  const auto train = load_dataset(data_directory() / "training.csv", DatasetRole::training);
  app::ModelRegistry reg;
  reg.add(app::fit_model(app::ModelKind::regression, train, nullptr, {}, "regression"));
  reg.add(app::fit_model(app::ModelKind::cbr, train, nullptr, {}, "cbr"));
  return app::Service(std::move(reg));
}

}  // namespace

TEST_CASE("http routes serve the same bytes as the service") {
  const auto service = make_service();
  Running run(service);
  REQUIRE(run.port > 0);
  httplib::Client cli("127.0.0.1", run.port);

  const Json body{{"model", "regression"}, {"area_ha", 19.6}, {"length_m", 453}, {"valves", 6}, {"year", 2020},
                  {"inflation_rate", 8}, {"toggles", {"area", "valves"}}, {"seed", 11}};
  auto res = cli.Post("/predict", io::dump(body), "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->get_header_value("Content-Type") == "application/json");
  CHECK(res->body == io::dump(service.predict(body)));

  const Json query{{"area_ha", 19.6}, {"length_m", 453}, {"valves", 6}, {"year", 2014}, {"k", 2}};
  res = cli.Post("/cbr/retrieve", io::dump(query), "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->body == io::dump(service.cbr_retrieve(query)));

  res = cli.Get("/models");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->body == io::dump(service.models()));
}

TEST_CASE("http errors carry JSON bodies") {
  const auto service = make_service();
  Running run(service);
  httplib::Client cli("127.0.0.1", run.port);

  auto res = cli.Post("/predict", R"({"model":"regression","area_ha":-3,"length_m":453,"valves":6,"year":2014})",
                      "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);
  CHECK(io::parse_json(res->body)["error"] == "area_ha: must be > 0");

  const Json tiny{{"model", "regression"}, {"area_ha", 0.01}, {"length_m", 1}, {"valves", 1}, {"year", 1990}};
  res = cli.Post("/predict", io::dump(tiny), "application/json");
  REQUIRE(res);
  CHECK(res->status == 422);

  res = cli.Get("/predict");
  REQUIRE(res);
  CHECK(res->status == 405);

  res = cli.Get("/nowhere");
  REQUIRE(res);
  CHECK(res->status == 404);
  CHECK(io::parse_json(res->body).contains("error"));
}
