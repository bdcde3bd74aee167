#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>

#include "gesture/config.hpp"
#include "gesture/injector.hpp"

namespace gesture {

inline constexpr std::uint16_t kDefaultPort = 8765;

/// Port from the GESTURE_PORT environment variable, else kDefaultPort.
std::uint16_t default_port();

struct ServerOptions {
    std::uint16_t port = kDefaultPort;  ///< 0 picks an ephemeral port
    SessionConfig defaults{};
    std::size_t threads = 2;
    /// Creates the injector for a new session; may return null.
    std::function<std::unique_ptr<InputInjector>()> injector_factory;
    std::ostream* log = nullptr;
};

/// Websocket session server. Each connection is one session whose messages
/// are handled strictly in order; different sessions run concurrently.
class Server {
public:
    explicit Server(ServerOptions options);
    ~Server();

    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Binds and starts accepting on background threads. Throws gesture::Error
    /// when the port cannot be bound.
    void start();

    /// Blocks until stop() is called from another thread or a signal handler.
    void wait();

    void stop();

    [[nodiscard]] std::uint16_t port() const noexcept;
    [[nodiscard]] std::size_t active_sessions() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace gesture
