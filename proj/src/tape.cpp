#include "csumm/tape.hpp"

#include <cmath>

#include "csumm/errors.hpp"
#include "csumm/kernels.hpp"

namespace csumm {

bool GradientMap::contains(const Tensor* p) const {
  for (const auto& item : items_) {
    if (item.first == p) return true;
  }
  return false;
}

const Tensor& GradientMap::at(const Tensor* p) const {
  for (const auto& item : items_) {
    if (item.first == p) return item.second;
  }
  throw index_error("gradient map: parameter not present");
}

void GradientMap::add(const Tensor* p, const Tensor& g) {
  for (auto& item : items_) {
    if (item.first == p) {
      if (!item.second.same_shape(g)) {
        throw shape_error("gradient map: shape mismatch for repeated parameter");
      }
      kernels::accumulate(item.second.data.data(), g.data.data(), g.numel());
      return;
    }
  }
  items_.emplace_back(p, g);
}

void GradientMap::scale(double factor) {
  for (auto& item : items_) {
    kernels::scale_inplace(item.second.data.data(), factor, item.second.numel());
  }
}

NodeId Tape::push(Node n) {
  if (n.op != Op::param && !n.value.all_finite()) {
    throw numeric_error("tape: operation produced a non-finite value");
  }
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size()) - 1;
}

void Tape::check_id(NodeId id, const char* what) const {
  if (id < 0 || id >= static_cast<NodeId>(nodes_.size())) {
    throw usage_error(std::string(what) + ": node id not on this tape");
  }
}

const Tensor& Tape::value(NodeId id) const {
  check_id(id, "value");
  return node_value(nodes_[static_cast<size_t>(id)]);
}

NodeId Tape::input(Tensor value) {
  Node n;
  n.op = Op::input;
  n.value = std::move(value);
  return push(std::move(n));
}

NodeId Tape::param(const Tensor* p) {
  if (p == nullptr) throw usage_error("param: null tensor");
  Node n;
  n.op = Op::param;
  n.pref = p;
  return push(std::move(n));
}

NodeId Tape::embed_lookup(NodeId table, std::vector<int> ids) {
  check_id(table, "embed_lookup");
  const Tensor& tab = value(table);
  require_rank(tab, 2, "embed_lookup table");
  if (ids.empty()) throw shape_error("embed_lookup: empty id sequence");
  const int v = tab.dim(0);
  const int d = tab.dim(1);
  for (int id : ids) {
    if (id < 0 || id >= v) throw index_error("embed_lookup: id out of range");
  }
  const int len = static_cast<int>(ids.size());
  Node n;
  n.op = Op::embed;
  n.args = {table};
  n.ids = std::move(ids);
  n.value = Tensor::zeros({len, d});
  kernels::embed_forward(tab.data.data(), n.ids.data(), n.value.data.data(), len, d);
  return push(std::move(n));
}

NodeId Tape::conv1d(NodeId in, NodeId filters, NodeId bias) {
  check_id(in, "conv1d");
  check_id(filters, "conv1d");
  check_id(bias, "conv1d");
  const Tensor& x = value(in);
  const Tensor& f = value(filters);
  const Tensor& b = value(bias);
  require_rank(x, 2, "conv1d input");
  require_rank(f, 3, "conv1d filters");
  const int len = x.dim(0);
  const int din = x.dim(1);
  const int width = f.dim(0);
  const int dout = f.dim(2);
  if (f.dim(1) != din) throw shape_error("conv1d: filter d_in mismatch");
  require_shape(b, {dout}, "conv1d bias");
  if (len < width) throw shape_error("conv1d: input shorter than filter width");
  Node n;
  n.op = Op::conv;
  n.args = {in, filters, bias};
  n.value = Tensor::zeros({len - width + 1, dout});
  kernels::conv1d_forward(x.data.data(), f.data.data(), b.data.data(), n.value.data.data(), len,
                          width, din, dout);
  return push(std::move(n));
}

NodeId Tape::relu(NodeId x) {
  check_id(x, "relu");
  const Tensor& v = value(x);
  Node n;
  n.op = Op::relu;
  n.args = {x};
  n.value = Tensor::zeros(v.shape);
  kernels::relu_forward(v.data.data(), n.value.data.data(), v.numel());
  return push(std::move(n));
}

NodeId Tape::square(NodeId x) {
  check_id(x, "square");
  const Tensor& v = value(x);
  Node n;
  n.op = Op::square;
  n.args = {x};
  n.value = Tensor::zeros(v.shape);
  for (int i = 0; i < v.numel(); ++i) {
    const double xi = v.at(i);
    n.value.at(i) = static_cast<float>(xi * xi);
  }
  return push(std::move(n));
}

NodeId Tape::sum_over_time(NodeId x) {
  check_id(x, "sum_over_time");
  const Tensor& v = value(x);
  require_rank(v, 2, "sum_over_time input");
  Node n;
  n.op = Op::sum_time;
  n.args = {x};
  n.value = Tensor::zeros({v.dim(1)});
  kernels::sum_over_time_forward(v.data.data(), n.value.data.data(), v.dim(0), v.dim(1));
  return push(std::move(n));
}

NodeId Tape::dense(NodeId x, NodeId weight, NodeId bias) {
  check_id(x, "dense");
  check_id(weight, "dense");
  check_id(bias, "dense");
  const Tensor& xv = value(x);
  const Tensor& w = value(weight);
  const Tensor& b = value(bias);
  require_rank(xv, 1, "dense input");
  require_rank(w, 2, "dense weight");
  const int din = w.dim(0);
  const int dout = w.dim(1);
  require_shape(xv, {din}, "dense input");
  require_shape(b, {dout}, "dense bias");
  Node n;
  n.op = Op::dense;
  n.args = {x, weight, bias};
  n.value = Tensor::zeros({dout});
  kernels::dense_forward(xv.data.data(), w.data.data(), b.data.data(), n.value.data.data(), din,
                         dout);
  return push(std::move(n));
}

LstmNodes Tape::lstm_cell(NodeId x, NodeId h, NodeId c, NodeId wx, NodeId wh, NodeId b) {
  check_id(x, "lstm_cell");
  check_id(h, "lstm_cell");
  check_id(c, "lstm_cell");
  check_id(wx, "lstm_cell");
  check_id(wh, "lstm_cell");
  check_id(b, "lstm_cell");
  const Tensor& xv = value(x);
  const Tensor& hv = value(h);
  const Tensor& cv = value(c);
  const Tensor& wxv = value(wx);
  const Tensor& whv = value(wh);
  const Tensor& bv = value(b);
  require_rank(xv, 1, "lstm_cell x");
  require_rank(hv, 1, "lstm_cell h");
  const int dx = xv.dim(0);
  const int dh = hv.dim(0);
  require_shape(cv, {dh}, "lstm_cell c");
  require_shape(wxv, {dx, 4 * dh}, "lstm_cell wx");
  require_shape(whv, {dh, 4 * dh}, "lstm_cell wh");
  require_shape(bv, {4 * dh}, "lstm_cell bias");

  Node hn;
  hn.op = Op::lstm_h;
  hn.args = {x, h, c, wx, wh, b};
  hn.value = Tensor::zeros({dh});
  hn.aux = Tensor::zeros({4 * dh});
  Tensor c_out = Tensor::zeros({dh});
  kernels::lstm_forward(xv.data.data(), hv.data.data(), cv.data.data(), wxv.data.data(),
                        whv.data.data(), bv.data.data(), hn.aux.data.data(),
                        hn.value.data.data(), c_out.data.data(), dx, dh);
  NodeId hid = push(std::move(hn));

  Node cn;
  cn.op = Op::lstm_c;
  cn.args = {hid};
  cn.value = std::move(c_out);
  NodeId cid = push(std::move(cn));
  nodes_[static_cast<size_t>(hid)].companion = cid;
  return {hid, cid};
}

NodeId Tape::softmax_cross_entropy(NodeId logits, int target) {
  check_id(logits, "softmax_cross_entropy");
  const Tensor& lv = value(logits);
  require_rank(lv, 1, "softmax_cross_entropy logits");
  const int v = lv.dim(0);
  if (target < 0 || target >= v) {
    throw index_error("softmax_cross_entropy: target out of range");
  }
  Node n;
  n.op = Op::xent;
  n.args = {logits};
  n.target = target;
  n.aux = Tensor::zeros({v});
  kernels::softmax(lv.data.data(), n.aux.data.data(), v);
  double m = lv.at(0);
  for (int i = 1; i < v; ++i) {
    if (lv.at(i) > m) m = lv.at(i);
  }
  double z = 0.0;
  for (int i = 0; i < v; ++i) {
    z += std::exp(static_cast<double>(lv.at(i)) - m);
  }
  const double loss = std::log(z) - (static_cast<double>(lv.at(target)) - m);
  n.value = Tensor::scalar(static_cast<float>(loss));
  return push(std::move(n));
}

NodeId Tape::scaled_sum(const std::vector<NodeId>& nodes, const std::vector<double>& coeffs) {
  if (nodes.empty() || nodes.size() != coeffs.size()) {
    throw usage_error("scaled_sum: nodes and coefficients must be non-empty and aligned");
  }
  for (NodeId id : nodes) check_id(id, "scaled_sum");
  const Tensor& first = value(nodes[0]);
  for (NodeId id : nodes) {
    if (!value(id).same_shape(first)) throw shape_error("scaled_sum: shape mismatch");
  }
  Node n;
  n.op = Op::scaled_sum;
  n.args = nodes;
  n.coeffs = coeffs;
  n.value = Tensor::zeros(first.shape);
  const int count = first.numel();
  for (int i = 0; i < count; ++i) {
    double acc = 0.0;
    for (size_t k = 0; k < nodes.size(); ++k) {
      acc += coeffs[k] * static_cast<double>(value(nodes[k]).at(i));
    }
    n.value.at(i) = static_cast<float>(acc);
  }
  return push(std::move(n));
}

NodeId Tape::reshape(NodeId x, std::vector<int> shape) {
  check_id(x, "reshape");
  const Tensor& v = value(x);
  if (shape_numel(shape) != v.numel()) throw shape_error("reshape: element count mismatch");
  Node n;
  n.op = Op::reshape;
  n.args = {x};
  n.value = Tensor(std::move(shape), v.data);
  return push(std::move(n));
}

GradientMap Tape::backward(NodeId loss) const {
  check_id(loss, "backward");
  if (node_value(nodes_[static_cast<size_t>(loss)]).numel() != 1) {
    throw usage_error("backward: loss must be scalar");
  }

  std::vector<Tensor> grads(nodes_.size());
  auto grad_of = [&](NodeId id) -> Tensor& {
    Tensor& g = grads[static_cast<size_t>(id)];
    if (g.data.empty()) g = Tensor::zeros(node_value(nodes_[static_cast<size_t>(id)]).shape);
    return g;
  };

  grad_of(loss).at(0) = 1.0f;

  for (NodeId id = loss; id >= 0; --id) {
    const Node& n = nodes_[static_cast<size_t>(id)];
    const Tensor& gout = grads[static_cast<size_t>(id)];
    if (gout.data.empty()) continue;

    switch (n.op) {
      case Op::input:
      case Op::param:
      case Op::lstm_c:
        break;

      case Op::embed: {
        const Tensor& out = n.value;
        kernels::embed_backward(n.ids.data(), gout.data.data(), grad_of(n.args[0]).data.data(),
                                out.dim(0), out.dim(1));
        break;
      }

      case Op::conv: {
        const Tensor& x = node_value(nodes_[static_cast<size_t>(n.args[0])]);
        const Tensor& f = node_value(nodes_[static_cast<size_t>(n.args[1])]);
        const int len = x.dim(0);
        const int din = x.dim(1);
        const int width = f.dim(0);
        const int dout = f.dim(2);
        kernels::conv1d_backward_input(f.data.data(), gout.data.data(),
                                       grad_of(n.args[0]).data.data(), len, width, din, dout);
        kernels::conv1d_backward_filters(x.data.data(), gout.data.data(),
                                         grad_of(n.args[1]).data.data(), len, width, din, dout);
        kernels::conv1d_backward_bias(gout.data.data(), grad_of(n.args[2]).data.data(),
                                      len - width + 1, dout);
        break;
      }

      case Op::relu: {
        const Tensor& x = node_value(nodes_[static_cast<size_t>(n.args[0])]);
        kernels::relu_backward(x.data.data(), gout.data.data(), grad_of(n.args[0]).data.data(),
                               x.numel());
        break;
      }

      case Op::square: {
        const Tensor& x = node_value(nodes_[static_cast<size_t>(n.args[0])]);
        Tensor& ga = grad_of(n.args[0]);
        for (int i = 0; i < x.numel(); ++i) {
          ga.at(i) = static_cast<float>(static_cast<double>(ga.at(i)) +
                                        2.0 * static_cast<double>(x.at(i)) *
                                            static_cast<double>(gout.at(i)));
        }
        break;
      }

      case Op::sum_time: {
        const Tensor& x = node_value(nodes_[static_cast<size_t>(n.args[0])]);
        kernels::sum_over_time_backward(gout.data.data(), grad_of(n.args[0]).data.data(),
                                        x.dim(0), x.dim(1));
        break;
      }

      case Op::dense: {
        const Tensor& x = node_value(nodes_[static_cast<size_t>(n.args[0])]);
        const Tensor& w = node_value(nodes_[static_cast<size_t>(n.args[1])]);
        const int din = w.dim(0);
        const int dout = w.dim(1);
        kernels::dense_backward_input(w.data.data(), gout.data.data(),
                                      grad_of(n.args[0]).data.data(), din, dout);
        kernels::dense_backward_weight(x.data.data(), gout.data.data(),
                                       grad_of(n.args[1]).data.data(), din, dout);
        kernels::accumulate(grad_of(n.args[2]).data.data(), gout.data.data(), dout);
        break;
      }

      case Op::lstm_h: {
        const Tensor& x = node_value(nodes_[static_cast<size_t>(n.args[0])]);
        const Tensor& h = node_value(nodes_[static_cast<size_t>(n.args[1])]);
        const Tensor& c = node_value(nodes_[static_cast<size_t>(n.args[2])]);
        const Tensor& wx = node_value(nodes_[static_cast<size_t>(n.args[3])]);
        const Tensor& wh = node_value(nodes_[static_cast<size_t>(n.args[4])]);
        const Tensor& c_out = node_value(nodes_[static_cast<size_t>(n.companion)]);
        const int dx = x.dim(0);
        const int dh = h.dim(0);
        // The companion c node may not have received any gradient.
        Tensor& gc_out = grad_of(n.companion);
        kernels::lstm_backward(x.data.data(), h.data.data(), c.data.data(), wx.data.data(),
                               wh.data.data(), n.aux.data.data(), c_out.data.data(),
                               gout.data.data(), gc_out.data.data(),
                               grad_of(n.args[0]).data.data(), grad_of(n.args[1]).data.data(),
                               grad_of(n.args[2]).data.data(), grad_of(n.args[3]).data.data(),
                               grad_of(n.args[4]).data.data(), grad_of(n.args[5]).data.data(),
                               dx, dh);
        break;
      }

      case Op::xent: {
        Tensor& gl = grad_of(n.args[0]);
        const double g = gout.at(0);
        const int v = gl.numel();
        for (int i = 0; i < v; ++i) {
          const double onehot = i == n.target ? 1.0 : 0.0;
          gl.at(i) = static_cast<float>(static_cast<double>(gl.at(i)) +
                                        g * (static_cast<double>(n.aux.at(i)) - onehot));
        }
        break;
      }

      case Op::scaled_sum: {
        for (size_t k = 0; k < n.args.size(); ++k) {
          Tensor& ga = grad_of(n.args[k]);
          const double ck = n.coeffs[k];
          for (int i = 0; i < ga.numel(); ++i) {
            ga.at(i) = static_cast<float>(static_cast<double>(ga.at(i)) +
                                          ck * static_cast<double>(gout.at(i)));
          }
        }
        break;
      }

      case Op::reshape: {
        Tensor& ga = grad_of(n.args[0]);
        kernels::accumulate(ga.data.data(), gout.data.data(), ga.numel());
        break;
      }
    }
  }

  GradientMap out;
  for (size_t id = 0; id < nodes_.size(); ++id) {
    const Node& n = nodes_[id];
    if (n.op == Op::param && !grads[id].data.empty()) {
      out.add(n.pref, grads[id]);
    }
  }
  return out;
}

}  // namespace csumm
