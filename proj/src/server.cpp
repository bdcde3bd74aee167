#include "gesture/server.hpp"

#include <atomic>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include "gesture/errors.hpp"
#include "gesture/session.hpp"

namespace gesture {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

std::uint16_t default_port() {
    if (const char* env = std::getenv("GESTURE_PORT")) {
        try {
            const int v = std::stoi(env);
            if (v > 0 && v < 65536) return static_cast<std::uint16_t>(v);
        } catch (const std::exception&) {
        }
    }
    return kDefaultPort;
}

namespace {

class Connection : public std::enable_shared_from_this<Connection> {
public:
    Connection(tcp::socket socket, std::string id, SessionConfig defaults, std::unique_ptr<InputInjector> injector,
               std::atomic<std::size_t>& active, std::ostream* log)
        : ws_(std::move(socket)),
          state_(std::move(id), std::move(defaults)),
          injector_(std::move(injector)),
          active_(active),
          log_(log) {
        ++active_;
    }

    ~Connection() { --active_; }

    void run() {
        ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
        ws_.async_accept(beast::bind_front_handler(&Connection::on_accept, shared_from_this()));
    }

private:
    void on_accept(beast::error_code ec) {
        if (ec) return;
        read_next();
    }

    void read_next() {
        ws_.async_read(buffer_, beast::bind_front_handler(&Connection::on_read, shared_from_this()));
    }

    void on_read(beast::error_code ec, std::size_t) {
        if (ec) {
            if (log_ && ec != websocket::error::closed) *log_ << "session " << state_.session_id << " ended\n";
            return;
        }
        const std::string text = beast::buffers_to_string(buffer_.data());
        buffer_.consume(buffer_.size());

        for (auto& msg : handle_text(state_, text, injector_.get())) queue(protocol::encode(msg));

        if (state_.status == SessionStatus::Closed) {
            closing_ = true;
            if (!writing_) close();
            return;
        }
        read_next();
    }

    void queue(std::string text) {
        outbox_.push_back(std::move(text));
        if (!writing_) write_next();
    }

    void write_next() {
        writing_ = true;
        ws_.text(true);
        ws_.async_write(asio::buffer(outbox_.front()),
                        beast::bind_front_handler(&Connection::on_write, shared_from_this()));
    }

    void on_write(beast::error_code ec, std::size_t) {
        writing_ = false;
        if (ec) return;
        outbox_.pop_front();
        if (!outbox_.empty()) {
            write_next();
        } else if (closing_) {
            close();
        }
    }

    void close() {
        ws_.async_close(websocket::close_code::normal, [self = shared_from_this()](beast::error_code) {});
    }

    websocket::stream<beast::tcp_stream> ws_;
    beast::flat_buffer buffer_;
    SessionState state_;
    std::unique_ptr<InputInjector> injector_;
    std::deque<std::string> outbox_;
    bool writing_ = false;
    bool closing_ = false;
    std::atomic<std::size_t>& active_;
    std::ostream* log_;
};

}  // namespace

struct Server::Impl {
    explicit Impl(ServerOptions opts) : options(std::move(opts)), acceptor(ioc) {}

    void do_accept() {
        // Each connection gets its own strand so its handlers never overlap.
        acceptor.async_accept(asio::make_strand(ioc), [this](beast::error_code ec, tcp::socket socket) {
            if (ec) {
                if (!acceptor.is_open()) return;
            } else {
                const std::string id = "s-" + std::to_string(++next_id);
                auto injector = options.injector_factory ? options.injector_factory() : nullptr;
                std::make_shared<Connection>(std::move(socket), id, options.defaults, std::move(injector), active,
                                             options.log)
                    ->run();
            }
            do_accept();
        });
    }

    ServerOptions options;
    // Declared before the io_context: pending handlers own connections that
    // decrement it when the context is destroyed.
    std::atomic<std::size_t> active{0};
    asio::io_context ioc;
    tcp::acceptor acceptor;
    std::vector<std::thread> threads;
    std::atomic<std::uint64_t> next_id{0};
    std::uint16_t bound_port = 0;
    std::mutex stop_mu;
    bool stopped = false;
};

Server::Server(ServerOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {}

Server::~Server() { stop(); }

void Server::start() {
    beast::error_code ec;
    const tcp::endpoint ep(asio::ip::make_address("0.0.0.0"), impl_->options.port);
    impl_->acceptor.open(ep.protocol(), ec);
    if (!ec) impl_->acceptor.set_option(asio::socket_base::reuse_address(true), ec);
    if (!ec) impl_->acceptor.bind(ep, ec);
    if (!ec) impl_->acceptor.listen(asio::socket_base::max_listen_connections, ec);
    if (ec) {
        throw Error("cannot listen on port " + std::to_string(impl_->options.port) + ": " + ec.message());
    }
    impl_->bound_port = impl_->acceptor.local_endpoint().port();
    impl_->do_accept();
    const std::size_t n = std::max<std::size_t>(1, impl_->options.threads);
    for (std::size_t i = 0; i < n; ++i) impl_->threads.emplace_back([this] { impl_->ioc.run(); });
}

void Server::wait() {
    for (auto& t : impl_->threads) {
        if (t.joinable()) t.join();
    }
}

void Server::stop() {
    {
        std::lock_guard lock(impl_->stop_mu);
        if (impl_->stopped) return;
        impl_->stopped = true;
    }
    asio::post(impl_->ioc, [this] {
        beast::error_code ec;
        impl_->acceptor.close(ec);
    });
    impl_->ioc.stop();
    for (auto& t : impl_->threads) {
        if (t.joinable() && t.get_id() != std::this_thread::get_id()) t.join();
    }
}

std::uint16_t Server::port() const noexcept { return impl_->bound_port; }

std::size_t Server::active_sessions() const noexcept { return impl_->active.load(); }

}  // namespace gesture
