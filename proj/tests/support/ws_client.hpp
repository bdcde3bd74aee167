#pragma once

// Minimal blocking websocket client for exercising the session server.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include "gesture/protocol.hpp"

namespace gesture::testing {

class WsClient {
public:
    WsClient(const std::string& host, std::uint16_t port) : ws_(ioc_) {
        namespace asio = boost::asio;
        asio::ip::tcp::resolver resolver(ioc_);
        auto& layer = boost::beast::get_lowest_layer(ws_);
        layer.expires_after(std::chrono::seconds(10));
        layer.connect(resolver.resolve(host, std::to_string(port)));
        layer.expires_never();
        ws_.handshake(host + ":" + std::to_string(port), "/");
    }

    void send(const std::string& text) {
        ws_.text(true);
        ws_.write(boost::asio::buffer(text));
    }

    void send(const protocol::ClientMessage& msg) { send(protocol::encode(msg)); }

    /// Next message, or nullopt once the server has closed the connection.
    std::optional<std::string> read() {
        boost::beast::flat_buffer buf;
        boost::beast::error_code ec;
        ws_.read(buf, ec);
        if (ec) return std::nullopt;
        return boost::beast::buffers_to_string(buf.data());
    }

    std::vector<protocol::ServerMessage> read_until_closed() {
        std::vector<protocol::ServerMessage> out;
        while (auto m = read()) out.push_back(protocol::decode_server(*m));
        return out;
    }

    /// Drops the TCP connection without a websocket close handshake.
    void abort() {
        boost::beast::error_code ec;
        boost::beast::get_lowest_layer(ws_).socket().close(ec);
    }

private:
    boost::asio::io_context ioc_;
    boost::beast::websocket::stream<boost::beast::tcp_stream> ws_;
};

}  // namespace gesture::testing
