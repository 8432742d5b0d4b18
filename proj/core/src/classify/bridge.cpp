#include "auris/classify/bridge.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>

#include <httplib.h>
#include <json.hpp>

#include "auris/classify/zero_shot.hpp"
#include "auris/common/error.hpp"
#include "auris/io/wav.hpp"

namespace auris::classify {

namespace {

std::string audio_request_body(const sim::MultiChannelClip& clip) {
  // The wire contract ships a file path, so spill the clip to a temp WAV.
  static int counter = 0;
  const auto path = std::filesystem::temp_directory_path() /
                    ("auris_embed_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".wav");
  io::write_wav(path, clip);
  nlohmann::json req;
  req["audio_path"] = path.string();
  return req.dump();
}

std::vector<double> parse_embedding(const std::string& body) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("classifier", "embedding_bridge", std::string("bad JSON response: ") + e.what());
  }
  if (!j.contains("embedding") || !j["embedding"].is_array()) {
    throw DomainError("classifier", "embedding_bridge", "response lacks an 'embedding' array");
  }
  auto emb = j["embedding"].get<std::vector<double>>();
  unit_normalize(emb, "bridge embedding");
  return emb;
}

}  // namespace

HttpEmbeddingProvider::HttpEmbeddingProvider(std::string host, int port)
    : host_(std::move(host)), port_(port) {}

std::vector<double> HttpEmbeddingProvider::request(const std::string& body) {
  httplib::Client client(host_, port_);
  client.set_read_timeout(30, 0);
  auto res = client.Post("/embed", body, "application/json");
  if (!res) {
    throw DomainError("classifier", "embedding_bridge",
                      "cannot reach embedding service at " + host_ + ":" + std::to_string(port_));
  }
  if (res->status != 200) {
    throw DomainError("classifier", "embedding_bridge",
                      "embedding service returned status " + std::to_string(res->status));
  }
  auto emb = parse_embedding(res->body);
  if (dim_ == 0) dim_ = emb.size();
  if (emb.size() != dim_) {
    throw DomainError("classifier", "embedding_bridge", "embedding dimension changed between calls");
  }
  return emb;
}

std::vector<double> HttpEmbeddingProvider::embed_audio(const sim::MultiChannelClip& clip) {
  return request(audio_request_body(clip));
}

std::vector<double> HttpEmbeddingProvider::embed_text(const std::string& class_name) {
  nlohmann::json req;
  req["text"] = class_name;
  return request(req.dump());
}

SubprocessEmbeddingProvider::SubprocessEmbeddingProvider(std::string command) : command_(std::move(command)) {}

std::vector<double> SubprocessEmbeddingProvider::request(const std::string& body) {
  int in_pipe[2], out_pipe[2];
  if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0) {
    throw DomainError("classifier", "embedding_bridge", "pipe() failed");
  }
  const pid_t pid = fork();
  if (pid < 0) throw DomainError("classifier", "embedding_bridge", "fork() failed");
  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);

  const std::string line = body + "\n";
  ssize_t off = 0;
  while (off < static_cast<ssize_t>(line.size())) {
    const ssize_t n = ::write(in_pipe[1], line.data() + off, line.size() - off);
    if (n <= 0) break;
    off += n;
  }
  close(in_pipe[1]);

  std::string response;
  std::array<char, 4096> buf;
  ssize_t n;
  while ((n = ::read(out_pipe[0], buf.data(), buf.size())) > 0) {
    response.append(buf.data(), static_cast<std::size_t>(n));
  }
  close(out_pipe[0]);

  int status = 0;
  waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw DomainError("classifier", "embedding_bridge",
                      "provider command failed (exit " + std::to_string(WEXITSTATUS(status)) + ")");
  }

  auto emb = parse_embedding(response);
  if (dim_ == 0) dim_ = emb.size();
  if (emb.size() != dim_) {
    throw DomainError("classifier", "embedding_bridge", "embedding dimension changed between calls");
  }
  return emb;
}

std::vector<double> SubprocessEmbeddingProvider::embed_audio(const sim::MultiChannelClip& clip) {
  return request(audio_request_body(clip));
}

std::vector<double> SubprocessEmbeddingProvider::embed_text(const std::string& class_name) {
  nlohmann::json req;
  req["text"] = class_name;
  return request(req.dump());
}

}  // namespace auris::classify
