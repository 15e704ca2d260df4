#ifndef SPG_WORKBENCH_HPP
#define SPG_WORKBENCH_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "spg/io.hpp"

namespace spg::workbench {

struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct Response {
  int status = 200;
  io::Json body;
};

/// An editing session: the starting graph, the moves applied so far and the
/// state after each of them.
struct Session {
  std::string id;
  io::Json creation;
  std::vector<Spg> states;  // states[0] is the initial graph
  std::vector<Move> moves;
  mutable std::shared_mutex lock;

  const Spg& current() const { return states.back(); }
};

/// Builds a generator instance from its name and JSON parameters:
/// spindle {m}, cyclic {n,d}, cube {dim}, hirsch-path {n,d}, figure1 {}.
/// Errors: BadParameter.
Spg generate(const std::string& name, const io::Json& params);

/// Request router for the session API; transport independent so it can be
/// driven directly in tests. Thread safe: sessions are isolated, mutations of
/// one session are serialized and reads may run concurrently.
class Workbench {
 public:
  Response handle(const Request& request);

 private:
  std::shared_ptr<Session> find(const std::string& id) const;
  Response create(const Request& request);
  static io::Json state_json(const Session& session);

  mutable std::mutex sessions_lock_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
};

/// HTTP transport for a Workbench, with permissive CORS headers.
class HttpService {
 public:
  explicit HttpService(Workbench& workbench);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds the address; port 0 picks a free port. Returns the bound port, or
  /// -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves requests until stop() is called.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Binds and serves until stopped; false if the address cannot be bound.
bool serve(Workbench& workbench, const std::string& host, int port);

}  // namespace spg::workbench

#endif  // SPG_WORKBENCH_HPP
