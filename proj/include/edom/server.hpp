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

// HTTP and WebSocket front end for GameService, on Boost.Beast with a single
// I/O thread. WebSocket clients connect to /sessions/{id}/events and receive
// one JSON text frame per event.

#pragma once

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <deque>
#include <memory>
#include <thread>

#include "edom/game.hpp"

namespace edom {

namespace net {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

class EventSocket : public std::enable_shared_from_this<EventSocket> {
 public:
  EventSocket(tcp::socket socket, GameService& service, std::string id)
      : ws_(std::move(socket)), service_(service), id_(std::move(id)) {}

  ~EventSocket() {
    if (token_) service_.unsubscribe(id_, *token_);
  }

  void run(http::request<http::string_body> req) {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(req, [self = shared_from_this()](beast::error_code ec) { self->on_accept(ec); });
  }

 private:
  void on_accept(beast::error_code ec) {
    if (ec) return;
    std::weak_ptr<EventSocket> weak = shared_from_this();
    auto ex = ws_.get_executor();
    token_ = service_.subscribe(id_, [weak, ex](const Json& event) {
      asio::post(ex, [weak, text = event.dump()] {
        if (auto self = weak.lock()) self->send(text);
      });
    });
    if (!token_) {
      ws_.async_close(websocket::close_code::policy_error, [self = shared_from_this()](beast::error_code) {});
      return;
    }
    read();
  }

  // Incoming frames are ignored; reading keeps the close handshake working.
  void read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        if (self->token_) self->service_.unsubscribe(self->id_, *self->token_);
        self->token_.reset();
        return;
      }
      self->buffer_.consume(self->buffer_.size());
      self->read();
    });
  }

  void send(std::string text) {
    queue_.push_back(std::move(text));
    if (queue_.size() == 1) write();
  }

  void write() {
    ws_.text(true);
    ws_.async_write(asio::buffer(queue_.front()), [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) return;
      self->queue_.pop_front();
      if (!self->queue_.empty()) self->write();
    });
  }

  websocket::stream<beast::tcp_stream> ws_;
  GameService& service_;
  std::string id_;
  std::optional<long> token_;
  beast::flat_buffer buffer_;
  std::deque<std::string> queue_;
};

class HttpConnection : public std::enable_shared_from_this<HttpConnection> {
 public:
  HttpConnection(tcp::socket socket, GameService& service) : stream_(std::move(socket)), service_(service) {}

  void run() { read(); }

 private:
  void read() {
    req_ = {};
    stream_.expires_after(std::chrono::seconds(60));
    http::async_read(stream_, buffer_, req_,
                     [self = shared_from_this()](beast::error_code ec, std::size_t) { self->on_read(ec); });
  }

  static std::optional<std::string> events_target(std::string_view target) {
    constexpr std::string_view prefix = "/sessions/";
    constexpr std::string_view suffix = "/events";
    if (!target.starts_with(prefix) || !target.ends_with(suffix)) return std::nullopt;
    std::string_view id = target.substr(prefix.size(), target.size() - prefix.size() - suffix.size());
    if (id.empty() || id.find('/') != std::string_view::npos) return std::nullopt;
    return std::string(id);
  }

  void on_read(beast::error_code ec) {
    if (ec == http::error::end_of_stream) {
      stream_.socket().shutdown(tcp::socket::shutdown_send, ec);
      return;
    }
    if (ec) return;
    const std::string target(req_.target());
    if (websocket::is_upgrade(req_)) {
      auto id = events_target(target);
      if (id && service_.has_session(*id)) {
        stream_.expires_never();
        std::make_shared<EventSocket>(stream_.release_socket(), service_, *id)->run(std::move(req_));
        return;
      }
      respond({404, {{"error", "no event stream at " + target}}});
      return;
    }
    if (req_.method() == http::verb::options) {
      respond({204, nullptr});
      return;
    }
    respond(service_.handle(std::string(req_.method_string()), target, req_.body()));
  }

  void respond(const HttpReply& reply) {
    auto res = std::make_shared<http::response<http::string_body>>(static_cast<http::status>(reply.status),
                                                                   req_.version());
    res->set(http::field::server, "edom");
    res->set(http::field::access_control_allow_origin, "*");
    res->set(http::field::access_control_allow_headers, "Content-Type");
    res->set(http::field::access_control_allow_methods, "GET, POST, OPTIONS");
    if (!reply.body.is_null()) {
      res->set(http::field::content_type, "application/json");
      res->body() = reply.body.dump();
    }
    res->keep_alive(req_.keep_alive());
    res->prepare_payload();
    http::async_write(stream_, *res, [self = shared_from_this(), res](beast::error_code ec, std::size_t) {
      if (ec) return;
      if (res->need_eof()) {
        self->stream_.socket().shutdown(tcp::socket::shutdown_send, ec);
        return;
      }
      self->read();
    });
  }

  beast::tcp_stream stream_;
  GameService& service_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> req_;
};

}  // namespace net

/// Listens on `address:port` (port 0 picks a free port). run() blocks on the
/// calling thread; start() runs the loop on a background thread.
class GameServer {
 public:
  GameServer(GameService& service, const std::string& address, unsigned short port)
      : service_(service), acceptor_(ioc_), timer_(ioc_) {
    const net::tcp::endpoint endpoint(net::asio::ip::make_address(address), port);
    acceptor_.open(endpoint.protocol());
    acceptor_.set_option(net::asio::socket_base::reuse_address(true));
    acceptor_.bind(endpoint);
    acceptor_.listen(net::asio::socket_base::max_listen_connections);
    port_ = acceptor_.local_endpoint().port();
  }

  ~GameServer() {
    stop();
    if (thread_.joinable()) thread_.join();
  }

  unsigned short port() const { return port_; }

  void run() {
    accept();
    sweep();
    ioc_.run();
  }

  void start() {
    thread_ = std::thread([this] { run(); });
  }

  /// SIGINT and SIGTERM stop the loop. Call before run().
  void stop_on_signals() {
    signals_.emplace(ioc_, SIGINT, SIGTERM);
    signals_->async_wait([this](beast_error ec, int) {
      if (!ec) stop();
    });
  }

  void stop() {
    net::asio::post(ioc_, [this] {
      beast_error ec;
      acceptor_.close(ec);
      timer_.cancel();
      if (signals_) signals_->cancel();
      ioc_.stop();
    });
  }

 private:
  using beast_error = boost::beast::error_code;

  void accept() {
    acceptor_.async_accept(net::asio::make_strand(ioc_), [this](beast_error ec, net::tcp::socket socket) {
      if (ec) return;
      std::make_shared<net::HttpConnection>(std::move(socket), service_)->run();
      accept();
    });
  }

  void sweep() {
    timer_.expires_after(std::chrono::seconds(30));
    timer_.async_wait([this](beast_error ec) {
      if (ec) return;
      service_.evict_expired();
      sweep();
    });
  }

  GameService& service_;
  net::asio::io_context ioc_{1};
  net::tcp::acceptor acceptor_;
  net::asio::steady_timer timer_;
  std::optional<net::asio::signal_set> signals_;
  unsigned short port_ = 0;
  std::thread thread_;
};

}  // namespace edom
