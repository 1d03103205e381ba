#pragma once

#include <string>
#include <vector>

#include "keyring/extract.hpp"
#include "keyring/graph.hpp"
#include "keyring/heavy_cycle.hpp"

namespace keyring {

/// Order-independent 64-bit FNV-1a digest over the sorted "u v\n" edge
/// lines, lowercase hex.
std::string graph_edge_digest(const Graph& g);

/// Self-contained claim about a graph identified by (n, e, edge digest).
/// kind "keyring" carries a keyring, "heavy-cycle" a heavy-cycle witness,
/// "none" claims nothing.
struct Certificate {
  std::string kind = "none";
  int k = 0;
  int r = 0;
  Vertex center = -1;
  std::vector<Vertex> cycle;
  std::vector<Vertex> leaves;
  int n = 0;
  int e = 0;
  std::string edge_digest;
  bool verified = false;
};

Certificate certify_keyring(const Graph& g, const Keyring& kr, int k, int r);
Certificate certify_heavy_cycle(const Graph& g, const HeavyCycleWitness& w);

/// JSON with exactly the fields kind, k, r, center, cycle, leaves, n, e,
/// edge_digest, verified, in that order. Byte-stable for identical input.
std::string to_json(const Certificate& c);
std::string to_text(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

/// Re-checks a certificate against a graph: fingerprint match plus the
/// claim-specific validation.
bool verify_certificate(const Graph& g, const Certificate& c, std::string* reason = nullptr);

}  // namespace keyring
