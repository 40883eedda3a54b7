#pragma once

#include "spg/session.hpp"

namespace httplib {
class Server;
}

namespace spg {

// Registers the /api routes on server; sessions live in store, which must
// outlive the server.
void install_api(httplib::Server& server, SessionStore& store);

} // namespace spg
