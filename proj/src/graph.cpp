#include "zforce/graph.hpp"

#include <algorithm>

#include "zforce/errors.hpp"

namespace zforce {

Graph::Graph(int order, const std::vector<Edge>& edges,
             std::vector<std::string> labels)
    : order_(order), labels_(std::move(labels)) {
  if (order < 1) throw ParameterError("graph order must be at least 1");
  if (order > kMaxOrder)
    throw CapacityError("graph order " + std::to_string(order) +
                            " exceeds capacity " + std::to_string(kMaxOrder),
                        order);
  if (!labels_.empty() && static_cast<int>(labels_.size()) != order)
    throw ParameterError("label count does not match graph order");
  if (std::all_of(labels_.begin(), labels_.end(),
                  [](const std::string& l) { return l.empty(); }))
    labels_.clear();
  rows_.resize(static_cast<std::size_t>(order));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw ParameterError("edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ") out of range");
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
    if (rows_[u].contains(v))
      throw ParameterError("duplicate edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
    rows_[u].insert(v);
    rows_[v].insert(u);
    ++edge_count_;
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order_; ++u)
    for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

const std::string& Graph::label(int v) const {
  static const std::string kNone;
  return labels_.empty() ? kNone : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  Graph copy = *this;
  if (!labels.empty() && static_cast<int>(labels.size()) != order_)
    throw ParameterError("label count does not match graph order");
  copy.labels_ = std::move(labels);
  if (std::all_of(copy.labels_.begin(), copy.labels_.end(),
                  [](const std::string& l) { return l.empty(); }))
    copy.labels_.clear();
  return copy;
}

}  // namespace zforce
