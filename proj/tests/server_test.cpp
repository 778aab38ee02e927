// Copyright 2026 The edom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <httplib.h>

#include <random>

#include "edom/families.hpp"
#include "edom/server.hpp"

using namespace edom;
namespace fam = edom::families;
namespace ws = boost::beast::websocket;

namespace {

struct Live {
  GameService service;
  GameServer server{service, "127.0.0.1", 0};
  httplib::Client client{"127.0.0.1", server.port()};

  Live() { server.start(); }

  std::pair<int, Json> call(const std::string& method, const std::string& path, const Json& body = nullptr) {
    httplib::Result r = method == "GET" ? client.Get(path) : client.Post(path, body.dump(), "application/json");
    REQUIRE(r);
    return {r->status, r->body.empty() ? Json() : Json::parse(r->body)};
  }
};

class EventClient {
 public:
  EventClient(unsigned short port, const std::string& id) : ws_(ioc_) {
    boost::asio::ip::tcp::resolver resolver(ioc_);
    boost::asio::connect(ws_.next_layer(), resolver.resolve("127.0.0.1", std::to_string(port)));
    ws_.handshake("127.0.0.1", "/sessions/" + id + "/events");
  }

  ~EventClient() {
    boost::beast::error_code ec;
    ws_.close(ws::close_code::normal, ec);
  }

  Json next() {
    boost::beast::flat_buffer buffer;
    ws_.read(buffer);
    return Json::parse(boost::beast::buffers_to_string(buffer.data()));
  }

 private:
  boost::asio::io_context ioc_;
  ws::stream<boost::asio::ip::tcp::socket> ws_;
};

}  // namespace

TEST_CASE("REST routes over a live socket") {
  Live live;
  auto [created, session] = live.call("POST", "/sessions",
                                      {{"graph6", encode_graph6(fam::cycle(5))}, {"k", 3}, {"mode", "human-attacker"}});
  REQUIRE(created == 201);
  const std::string id = session["id"];
  CHECK(session["eternal_start"] == true);

  auto [ok, fetched] = live.call("GET", "/sessions/" + id);
  CHECK(ok == 200);
  CHECK(fetched == session);

  auto [hinted, hint] = live.call("GET", "/sessions/" + id + "/hint");
  CHECK(hinted == 200);
  CHECK(hint["available"] == false);

  CHECK(live.call("POST", "/sessions", {{"graph6", "D?"}, {"k", 1}}).first == 400);
  CHECK(live.call("GET", "/sessions/unknown").first == 404);
  CHECK(live.call("POST", "/sessions/" + id + "/defend", {{"guard", 0}}).first == 409);

  httplib::Result options = live.client.Options("/sessions");
  REQUIRE(options);
  CHECK(options->status == 204);
  CHECK(options->get_header_value("Access-Control-Allow-Origin") == "*");
}

TEST_CASE("event stream mirrors the session state") {
  Live live;
  const Graph g = fam::petersen();
  const Json body{{"graph6", encode_graph6(g)}, {"k", eternal_domination_number(g).value}};
  auto [created, session] = live.call("POST", "/sessions", body);
  REQUIRE(created == 201);
  const std::string id = session["id"];
  REQUIRE(session["eternal_start"] == true);

  EventClient events(live.server.port(), id);
  Json snapshot = events.next();
  CHECK(snapshot["type"] == "snapshot");
  CHECK(snapshot["session"]["config"] == session["config"]);

  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const int v = static_cast<int>(rng() % 10);
    auto [status, reply] = live.call("POST", "/sessions/" + id + "/attack", {{"vertex", v}});
    REQUIRE(status == 200);
    REQUIRE(reply["status"] == "ongoing");
    Json event = events.next();
    REQUIRE(event["type"] == "attack");
    REQUIRE(event["move"]["attack"] == v);
    REQUIRE(event["session"]["config"] == reply["config"]);
    REQUIRE(is_dominating(g, reply["config"].get<VertexSet>()));
  }
  CHECK(live.call("GET", "/sessions/" + id).second["history"].size() == 100);
}

TEST_CASE("event stream rejects unknown sessions") {
  Live live;
  CHECK_THROWS(EventClient(live.server.port(), "missing"));
}
