#include "keyring/certificate.hpp"

#include <cstdint>

#include "json.hpp"

namespace keyring {

std::string graph_edge_digest(const Graph& g) {
  std::uint64_t hash = 14695981039346656037ULL;
  auto eat = [&](const std::string& bytes) {
    for (unsigned char byte : bytes) {
      hash ^= byte;
      hash *= 1099511628211ULL;
    }
  };
  for (auto [u, v] : g.edges())
    eat(std::to_string(u) + " " + std::to_string(v) + "\n");
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

namespace {

void stamp_graph(const Graph& g, Certificate& c) {
  c.n = g.order();
  c.e = g.size();
  c.edge_digest = graph_edge_digest(g);
}

}  // namespace

Certificate certify_keyring(const Graph& g, const Keyring& kr, int k, int r) {
  Certificate c;
  c.kind = "keyring";
  c.k = k;
  c.r = r;
  c.center = kr.center;
  c.cycle = kr.cycle;
  c.leaves = kr.leaves;
  stamp_graph(g, c);
  c.verified = verify_keyring(g, kr, k, r);
  return c;
}

Certificate certify_heavy_cycle(const Graph& g, const HeavyCycleWitness& w) {
  Certificate c;
  c.kind = "heavy-cycle";
  c.k = w.k;
  c.r = 0;
  c.center = w.center;
  c.cycle = w.cycle.vertices;
  stamp_graph(g, c);
  c.verified = witness_valid(g, w);
  return c;
}

std::string to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["kind"] = c.kind;
  j["k"] = c.k;
  j["r"] = c.r;
  j["center"] = c.center;
  j["cycle"] = c.cycle;
  j["leaves"] = c.leaves;
  j["n"] = c.n;
  j["e"] = c.e;
  j["edge_digest"] = c.edge_digest;
  j["verified"] = c.verified;
  return j.dump(2) + "\n";
}

std::string to_text(const Certificate& c) {
  std::string out;
  out += "kind: " + c.kind + "\n";
  out += "k: " + std::to_string(c.k) + "\n";
  out += "r: " + std::to_string(c.r) + "\n";
  out += "center: " + std::to_string(c.center) + "\n";
  auto join = [](const std::vector<Vertex>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(xs[i]);
    }
    return s;
  };
  out += "cycle: " + join(c.cycle) + "\n";
  out += "leaves: " + join(c.leaves) + "\n";
  out += "n: " + std::to_string(c.n) + "\n";
  out += "e: " + std::to_string(c.e) + "\n";
  out += "edge_digest: " + c.edge_digest + "\n";
  out += std::string("verified: ") + (c.verified ? "true" : "false") + "\n";
  return out;
}

Certificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("certificate: bad JSON: ") + e.what());
  }
  Certificate c;
  try {
    c.kind = j.at("kind").get<std::string>();
    c.k = j.at("k").get<int>();
    c.r = j.at("r").get<int>();
    c.center = j.at("center").get<Vertex>();
    c.cycle = j.at("cycle").get<std::vector<Vertex>>();
    c.leaves = j.at("leaves").get<std::vector<Vertex>>();
    c.n = j.at("n").get<int>();
    c.e = j.at("e").get<int>();
    c.edge_digest = j.at("edge_digest").get<std::string>();
    c.verified = j.at("verified").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("certificate: missing or mistyped field: ") + e.what());
  }
  if (c.kind != "keyring" && c.kind != "heavy-cycle" && c.kind != "none")
    throw InvalidInput("certificate: unknown kind '" + c.kind + "'");
  return c;
}

bool verify_certificate(const Graph& g, const Certificate& c, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (c.n != g.order())
    return fail("vertex count mismatch: certificate says " + std::to_string(c.n) +
                ", graph has " + std::to_string(g.order()));
  if (c.e != g.size())
    return fail("edge count mismatch: certificate says " + std::to_string(c.e) +
                ", graph has " + std::to_string(g.size()));
  if (c.edge_digest != graph_edge_digest(g)) return fail("edge digest mismatch");
  if (c.kind == "keyring") {
    Keyring kr;
    kr.center = c.center;
    kr.cycle = c.cycle;
    kr.leaves = c.leaves;
    return verify_keyring(g, kr, c.k, c.r, reason);
  }
  if (c.kind == "heavy-cycle") {
    HeavyCycleWitness w;
    w.center = c.center;
    w.cycle = Cycle{c.cycle};
    w.k = c.k;
    return witness_valid(g, w, reason);
  }
  return fail("certificate of kind 'none' claims nothing to verify");
}

}  // namespace keyring
