#pragma once

#include <string>

#include "auris/classify/provider.hpp"

namespace auris::classify {

/// Wire contract shared by both bridges: one JSON request
///   {"audio_path": "<wav file>"}  or  {"text": "<class prompt>"}
/// answered by one JSON response
///   {"embedding": [floats]}
/// Embeddings are unit-normalized on receipt.

/// Talks to an embedding service over HTTP: POST <base>/embed with the
/// request object as the body.
class HttpEmbeddingProvider : public EmbeddingProvider {
 public:
  HttpEmbeddingProvider(std::string host, int port);

  std::size_t dim() const override { return dim_; }
  std::vector<double> embed_audio(const sim::MultiChannelClip& clip) override;
  std::vector<double> embed_text(const std::string& class_name) override;

 private:
  std::vector<double> request(const std::string& body);
  std::string host_;
  int port_;
  mutable std::size_t dim_ = 0;
};

/// Spawns `command` (via /bin/sh -c) per request, writes the request JSON
/// line to its stdin and reads the response JSON line from its stdout.
class SubprocessEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit SubprocessEmbeddingProvider(std::string command);

  std::size_t dim() const override { return dim_; }
  std::vector<double> embed_audio(const sim::MultiChannelClip& clip) override;
  std::vector<double> embed_text(const std::string& class_name) override;

 private:
  std::vector<double> request(const std::string& body);
  std::string command_;
  mutable std::size_t dim_ = 0;
};

}  // namespace auris::classify
