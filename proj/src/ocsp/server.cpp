#include "pqpki/ocsp/server.hpp"

#include <httplib.h>

#include <chrono>

namespace pqpki::ocsp {

namespace {

asn1::TimeValue now_utc() {
    auto now = std::chrono::system_clock::now();
    int64_t secs = std::chrono::duration_cast<std::chrono::seconds>(
                       now.time_since_epoch())
                       .count();
    return asn1::TimeValue::from_epoch(secs, asn1::TimeEncoding::GeneralizedTime);
}

}  // namespace

OcspServer::OcspServer(std::shared_ptr<CaView> view, ResponderIdentity identity)
    : view_(std::move(view)), identity_(std::move(identity)) {}

OcspServer::~OcspServer() { stop(); }

bool OcspServer::start(const std::string& host, int port) {
    if (running_) return false;
    server_ = std::make_unique<httplib::Server>();
    host_ = host;

    server_->Post("/ocsp", [this](const httplib::Request& req, httplib::Response& res) {
        ByteView body(reinterpret_cast<const uint8_t*>(req.body.data()), req.body.size());
        Bytes reply = respond_to_bytes(body, *view_, identity_, now_utc());
        res.set_content(std::string(reply.begin(), reply.end()),
                        "application/ocsp-response");
    });
    // anything but POST /ocsp is a method error
    server_->Get("/ocsp", [](const httplib::Request&, httplib::Response& res) {
        res.status = 405;
        res.set_content("POST application/ocsp-request only\n", "text/plain");
    });

    if (port == 0) {
        port_ = server_->bind_to_any_port(host);
        if (port_ <= 0) return false;
    } else {
        if (!server_->bind_to_port(host, port)) return false;
        port_ = port;
    }
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    running_ = true;
    return true;
}

void OcspServer::stop() {
    if (!running_) return;
    server_->stop();
    if (thread_.joinable()) thread_.join();
    running_ = false;
}

std::string OcspServer::url() const {
    return "http://" + host_ + ":" + std::to_string(port_) + "/ocsp";
}

}  // namespace pqpki::ocsp
