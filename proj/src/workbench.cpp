#include "spg/workbench.hpp"

#include <httplib.h>

#include "spg/error.hpp"
#include "spg/generators.hpp"

namespace spg::workbench {

namespace {

Response error(int status, std::string_view name, const std::string& message) {
  io::Json body;
  body["error"] = name;
  body["message"] = message;
  return {status, std::move(body)};
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start < path.size()) {
    std::size_t slash = path.find('/', start);
    if (slash == std::string::npos) slash = path.size();
    if (slash > start) parts.push_back(path.substr(start, slash - start));
    start = slash + 1;
  }
  return parts;
}

std::size_t param(const io::Json& params, const char* key) {
  if (!params.is_object() || !params.contains(key) || !params[key].is_number_unsigned()) {
    throw SpgError(ErrorKind::BadParameter,
                   std::string("generator parameter '") + key + "' must be a non-negative integer");
  }
  return params[key].get<std::size_t>();
}

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoSuchEdge:
    case ErrorKind::EdgeExists:
    case ErrorKind::SelfLoop:
    case ErrorKind::BadEdge:
      return 409;
    default:
      return 400;
  }
}

}  // namespace

Spg generate(const std::string& name, const io::Json& params) {
  if (name == "spindle") return gen_spindle_family(param(params, "m"));
  if (name == "cyclic") return gen_cyclic_construction(param(params, "n"), param(params, "d"));
  if (name == "cube") return gen_cube_spg(param(params, "dim"));
  if (name == "hirsch-path") {
    return clf_to_spg(gen_hirsch_path_clf(param(params, "n"), param(params, "d")));
  }
  if (name == "figure1") return gen_figure1();
  throw SpgError(ErrorKind::BadParameter, "unknown generator '" + name + "'");
}

io::Json Workbench::state_json(const Session& session) {
  const Spg& g = session.current();
  io::Json out;
  out["id"] = session.id;
  out["graph"] = io::spg_to_json(g);
  out["report"] = io::report_to_json(step_report(g));
  out["diameter"] = io::diameter_to_json(diameter(g));
  out["moves"] = session.moves.size();
  return out;
}

std::shared_ptr<Session> Workbench::find(const std::string& id) const {
  std::lock_guard guard(sessions_lock_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response Workbench::create(const Request& request) {
  const io::Json body = io::parse_json(request.body);
  if (!body.is_object() || !body.contains("source") || !body["source"].is_string()) {
    return error(400, "SyntaxError", "body needs a \"source\" of \"upload\" or \"generator\"");
  }
  const std::string source = body["source"].get<std::string>();
  std::optional<Spg> g;
  if (source == "upload") {
    if (!body.contains("document")) return error(400, "SyntaxError", "missing \"document\"");
    g = io::spg_from_json(body["document"]);
  } else if (source == "generator") {
    if (!body.contains("name") || !body["name"].is_string()) {
      return error(400, "SyntaxError", "missing generator \"name\"");
    }
    g = generate(body["name"].get<std::string>(),
                 body.contains("params") ? body["params"] : io::Json::object());
  } else {
    return error(400, "SyntaxError", "unknown source '" + source + "'");
  }

  auto session = std::make_shared<Session>();
  session->creation = body;
  session->states.push_back(std::move(*g));
  {
    std::lock_guard guard(sessions_lock_);
    session->id = "s" + std::to_string(next_id_++);
    sessions_.emplace(session->id, session);
  }
  return {201, state_json(*session)};
}

Response Workbench::handle(const Request& request) {
  const auto parts = split_path(request.path);
  try {
    if (parts.empty() || parts[0] != "sessions") return error(404, "NotFound", "no such route");
    if (parts.size() == 1) {
      if (request.method == "POST") return create(request);
      return error(405, "MethodNotAllowed", request.method + " " + request.path);
    }
    auto session = find(parts[1]);
    if (!session) return error(404, "NotFound", "unknown session '" + parts[1] + "'");
    const std::string action = parts.size() > 2 ? parts[2] : "";
    if (parts.size() > 3) return error(404, "NotFound", "no such route");

    if (request.method == "GET") {
      std::shared_lock reader(session->lock);
      const Spg& g = session->current();
      if (action.empty()) return {200, state_json(*session)};
      if (action == "restrict") {
        auto it = request.query.find("face");
        const Face face = io::parse_subset(it == request.query.end() ? "" : it->second, g.symbols());
        return {200, io::view_to_json(restriction(g, face))};
      }
      if (action == "suggestions") {
        auto it = request.query.find("targets");
        const auto targets = parse_property_list(it == request.query.end() ? "main" : it->second);
        io::Json out;
        io::Json found = io::Json::array();
        io::Json suggestions = io::Json::array();
        for (const CheckResult& v : violations(g, targets)) {
          found.push_back(io::check_to_json(v));
          for (io::Json item : io::ranked_moves_to_json(candidate_moves(g, v, targets))) {
            item["repairs"] = property_name(v.property);
            suggestions.push_back(std::move(item));
          }
        }
        out["violations"] = std::move(found);
        out["suggestions"] = std::move(suggestions);
        return {200, std::move(out)};
      }
      if (action == "trace") {
        const std::vector<Property> targets(kMainProperties.begin(), kMainProperties.end());
        StrategyTrace trace{session->states.front(), targets,
                            diameter(session->states.front()).value, {}, g, {}};
        for (std::size_t i = 0; i < session->moves.size(); ++i) {
          const Spg& s = session->states[i + 1];
          trace.steps.push_back({session->moves[i], diameter(s).value, step_report(s)});
        }
        return {200, io::trace_to_json(trace)};
      }
      return error(404, "NotFound", "no such route");
    }

    if (request.method == "POST") {
      std::unique_lock writer(session->lock);
      if (action == "moves") {
        const Move move = io::move_from_json(io::parse_json(request.body));
        Spg next = apply_move(session->current(), move);
        session->states.push_back(std::move(next));
        session->moves.push_back(move);
        return {200, state_json(*session)};
      }
      if (action == "undo") {
        if (session->moves.empty()) return error(409, "NothingToUndo", "no move to undo");
        session->states.pop_back();
        session->moves.pop_back();
        return {200, state_json(*session)};
      }
      return error(404, "NotFound", "no such route");
    }
    return error(405, "MethodNotAllowed", request.method + " " + request.path);
  } catch (const SpgError& e) {
    return error(status_for(e.kind()), e.name(), e.detail());
  }
}

struct HttpService::Impl {
  httplib::Server server;
};

HttpService::HttpService(Workbench& workbench) : impl_(std::make_unique<Impl>()) {
  auto forward = [&workbench](const httplib::Request& req, httplib::Response& res) {
    Request request{req.method, req.path, {}, req.body};
    for (const auto& [key, value] : req.params) request.query[key] = value;
    const Response response = workbench.handle(request);
    res.status = response.status;
    res.set_content(response.body.dump(), "application/json");
  };
  auto& server = impl_->server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Get(".*", forward);
  server.Post(".*", forward);
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpService::~HttpService() = default;

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpService::run() { impl_->server.listen_after_bind(); }

void HttpService::stop() { impl_->server.stop(); }

bool serve(Workbench& workbench, const std::string& host, int port) {
  HttpService service(workbench);
  if (service.bind(host, port) < 0) return false;
  service.run();
  return true;
}

}  // namespace spg::workbench
