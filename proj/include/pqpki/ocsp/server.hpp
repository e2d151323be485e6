/**
 * HTTP binding for the responder: POST /ocsp with application/ocsp-request
 * bodies, application/ocsp-response replies, concurrent request handling,
 * graceful stop.
 */

#ifndef PQPKI_OCSP_SERVER_HPP
#define PQPKI_OCSP_SERVER_HPP

#include <memory>
#include <string>
#include <thread>

#include "pqpki/ocsp/responder.hpp"

namespace httplib {
class Server;
}

namespace pqpki::ocsp {

class OcspServer {
public:
    OcspServer(std::shared_ptr<CaView> view, ResponderIdentity identity);
    ~OcspServer();

    OcspServer(const OcspServer&) = delete;
    OcspServer& operator=(const OcspServer&) = delete;

    // port 0 picks an ephemeral port; returns false when binding fails
    bool start(const std::string& host, int port);
    void stop();
    bool running() const { return running_; }

    int port() const { return port_; }
    std::string url() const;  // http://host:port/ocsp

private:
    std::shared_ptr<CaView> view_;
    ResponderIdentity identity_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    std::string host_;
    int port_ = 0;
    bool running_ = false;
};

}  // namespace pqpki::ocsp

#endif
