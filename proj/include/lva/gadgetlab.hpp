#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lva/graph.hpp"

namespace lva {

constexpr int kWhite = 0;
constexpr int kGray = 1;

struct Anchor {
  Vertex vertex;
  int color;  // kWhite or kGray
};

struct GadgetReport {
  int order = 0;
  std::vector<Anchor> anchors;
  std::uint64_t examined = 0;                // 2^(n - |anchors|)
  std::vector<std::vector<int>> legal;       // each a colour per vertex
  std::map<Vertex, int> forced;              // constant over all legal colourings
  bool unique() const noexcept { return legal.size() == 1; }
};

struct EnumerateOptions {
  int max_vertices = 24;
  int threads = 1;  // the counter range is split into this many chunks
};

/// Every 2-colouring extending the anchors, kept if both classes induce
/// linear forests. Each kept colouring is re-checked with
/// is_legal_partition. Throws std::invalid_argument on the size guard,
/// unknown vertices or contradictory anchors.
GadgetReport enumerate_legal(const Graph& g, const std::vector<Anchor>& anchors, const EnumerateOptions& opt = {});

struct LemmaCertificate {
  std::string id;         // "L1".."L6"
  std::string statement;  // what was checked, in one line
  bool pass = false;
  Graph gadget;
  GadgetReport report;
  std::vector<std::string> details;  // human-readable findings

  std::string to_json() const;
  std::string summary() const;
};

std::vector<std::string> lemma_ids();
/// Throws std::invalid_argument for unknown ids.
LemmaCertificate verify_lemma(std::string_view id, const EnumerateOptions& opt = {});

/// Anchor by vertex label; throws if the label is missing.
Anchor anchor_at(const Graph& g, std::string_view label, int color);

}  // namespace lva
