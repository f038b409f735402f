#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cyseg/rng.hpp"
#include "cyseg/tensor.hpp"

namespace cyseg {

enum class LayerKind {
    Conv2d,
    Relu,
    MaxPool2x2,
    GlobalAvgPool,
    Linear,
    UpsampleNearest2x,
    Sigmoid,
    Softmax,
};

const char* layer_kind_name(LayerKind k);

struct Node {
    LayerKind kind;
    int input = -1;     // producing node index; -1 = graph input
    std::string param;  // parameter name prefix; empty for parameterless layers
    int in_ch = 0, out_ch = 0, ksize = 0;
    std::vector<int> out_shape;
};

// Named tensors split into "backbone." and "head." partitions.
struct ModelWeights {
    std::map<std::string, Tensor> tensors;

    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;
    bool operator==(const ModelWeights& o) const { return tensors == o.tensors; }
};

inline bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape == b.shape && a.data == b.data;
}

using GradientSet = std::map<std::string, Tensor>;

struct Activations {
    std::vector<Tensor> values;  // one per node, in node order
    const Tensor& output() const { return values.back(); }
};

// Static feed-forward graph. Nodes are topologically ordered by construction:
// a node may only reference earlier nodes (or the graph input). Parameters
// live in `params`, keyed "<prefix>.weight" / "<prefix>.bias".
struct Graph {
    std::vector<int> input_shape;
    std::vector<Node> nodes;
    ModelWeights params;

    int add_conv2d(int input, const std::string& name, int out_ch, int ksize, Rng& rng);
    int add_relu(int input);
    int add_maxpool2x2(int input);
    int add_global_avg_pool(int input);
    int add_linear(int input, const std::string& name, int out_dim, Rng& rng);
    int add_upsample2x(int input);
    int add_sigmoid(int input);
    int add_softmax(int input);

    const std::vector<int>& shape_of(int node) const;

private:
    int push(Node n);
};

Activations forward(const Graph& g, const Tensor& input);

// Gradient of a scalar loss w.r.t. every parameter, given dLoss/dOutput of
// the final node. `acts` must come from a matching forward call.
GradientSet backward(const Graph& g, const Tensor& input, const Activations& acts,
                     const Tensor& loss_grad);

// w <- w - lr * (g + weight_decay * w)
void sgd_step(ModelWeights& weights, const GradientSet& grads, float lr, float weight_decay);

// Central differences on every parameter element, evaluated with a
// double-precision reference forward that is independent of the float path.
// `loss` maps the final node's output (as doubles) to a scalar.
GradientSet finite_difference_gradient(const Graph& g, const Tensor& input,
                                       const std::function<double(const std::vector<double>&)>& loss,
                                       double eps);

// Reference forward in double precision (naive kernels, no Eigen). Returns
// every node's output; used by the finite-difference oracle and by tests as
// an independent forward implementation.
std::vector<std::vector<double>> forward_ref64(const Graph& g, const std::vector<double>& input,
                                               const std::map<std::string, std::vector<double>>& params);

}  // namespace cyseg
