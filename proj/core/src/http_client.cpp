#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "eventlens/error.hpp"
#include "eventlens/fetch.hpp"

namespace eventlens {

HttpResponse http_get(const HttpRequest& request) {
  // scheme://host[:port] then path+query.
  const auto scheme_end = request.url.find("://");
  if (scheme_end == std::string::npos) throw NetworkError("malformed URL " + request.url);
  const auto path_start = request.url.find('/', scheme_end + 3);
  const std::string origin = request.url.substr(0, path_start);
  const std::string path =
      path_start == std::string::npos ? std::string("/") : request.url.substr(path_start);

  httplib::Client client(origin);
  if (!client.is_valid()) throw NetworkError("unsupported URL " + request.url);
  client.set_connection_timeout(request.timeout);
  client.set_read_timeout(request.timeout);
  client.set_follow_location(true);

  httplib::Headers headers;
  if (!request.user_agent.empty()) headers.emplace("User-Agent", request.user_agent);

  auto res = client.Get(path, headers);
  if (!res) {
    throw NetworkError("GET " + request.url + " failed: " + httplib::to_string(res.error()));
  }
  return HttpResponse{res->status, res->body};
}

}  // namespace eventlens
