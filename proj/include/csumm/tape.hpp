#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csumm/tensor.hpp"

namespace csumm {

// Gradients keyed by parameter identity (the address of the caller-owned
// tensor), in first-registration order. Repeated adds accumulate.
class GradientMap {
 public:
  bool contains(const Tensor* p) const;
  const Tensor& at(const Tensor* p) const;
  void add(const Tensor* p, const Tensor& g);
  void scale(double factor);
  bool empty() const { return items_.empty(); }
  size_t size() const { return items_.size(); }
  const std::vector<std::pair<const Tensor*, Tensor>>& items() const { return items_; }

 private:
  std::vector<std::pair<const Tensor*, Tensor>> items_;
};

using NodeId = int;

// One LSTM step yields two nodes; c feeds the next step, h feeds the next
// step and the output projection.
struct LstmNodes {
  NodeId h;
  NodeId c;
};

// Define-by-run reverse-mode tape. Rebuilt per forward pass; single-threaded
// per tape. Parameter nodes reference caller-owned tensors and are never
// copied; everything else owns its value.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  NodeId input(Tensor value);
  NodeId param(const Tensor* p);

  // Rows of table selected by ids; gradient sums over repeated ids.
  NodeId embed_lookup(NodeId table, std::vector<int> ids);
  // filters shape [w × d_in × d_out], stride 1, no padding.
  NodeId conv1d(NodeId in, NodeId filters, NodeId bias);
  NodeId relu(NodeId x);
  NodeId square(NodeId x);
  NodeId sum_over_time(NodeId x);
  NodeId dense(NodeId x, NodeId weight, NodeId bias);
  // Gates ordered [input | forget | candidate | output].
  LstmNodes lstm_cell(NodeId x, NodeId h, NodeId c, NodeId wx, NodeId wh, NodeId b);
  // -log softmax(logits)[target], max-subtracted.
  NodeId softmax_cross_entropy(NodeId logits, int target);
  // sum_i coeffs[i] * nodes[i]; all nodes same shape.
  NodeId scaled_sum(const std::vector<NodeId>& nodes, const std::vector<double>& coeffs);
  NodeId reshape(NodeId x, std::vector<int> shape);

  const Tensor& value(NodeId id) const;
  int size() const { return static_cast<int>(nodes_.size()); }

  // Reverse pass from a scalar loss node. Gradients of every parameter
  // registered via param() that the loss depends on; unused parameters are
  // absent from the map.
  GradientMap backward(NodeId loss) const;

 private:
  enum class Op {
    input,
    param,
    embed,
    conv,
    relu,
    square,
    sum_time,
    dense,
    lstm_h,
    lstm_c,
    xent,
    scaled_sum,
    reshape,
  };

  struct Node {
    Op op;
    Tensor value;              // unused for param nodes
    const Tensor* pref = nullptr;  // param nodes only
    std::vector<NodeId> args;
    Tensor aux;                // lstm_h: post-activation gates; xent: probs
    std::vector<int> ids;      // embed
    std::vector<double> coeffs;  // scaled_sum
    int target = -1;           // xent
    NodeId companion = -1;     // lstm_h: the paired c node
  };

  const Tensor& node_value(const Node& n) const { return n.op == Op::param ? *n.pref : n.value; }
  NodeId push(Node n);
  void check_id(NodeId id, const char* what) const;

  std::vector<Node> nodes_;
};

}  // namespace csumm
