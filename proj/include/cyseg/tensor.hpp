#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cyseg {

// Dense row-major float tensor. Feature maps use shape {C,H,W},
// vectors {N}, conv weights {Cout,Cin,K,K}.
struct Tensor {
    std::vector<int> shape;
    std::vector<float> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> s, float fill = 0.0f)
        : shape(std::move(s)), data(numel_of(shape), fill) {}
    Tensor(std::vector<int> s, std::vector<float> d) : shape(std::move(s)), data(std::move(d)) {}

    static std::size_t numel_of(const std::vector<int>& s) {
        std::size_t n = 1;
        for (int e : s) n *= static_cast<std::size_t>(e);
        return n;
    }

    std::size_t numel() const { return data.size(); }
    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    // {C,H,W} accessors
    int channels() const { return shape.size() == 3 ? shape[0] : 1; }
    int height() const { return shape.size() == 3 ? shape[1] : 0; }
    int width() const { return shape.size() == 3 ? shape[2] : 0; }

    float& at(int c, int y, int x) { return data[(static_cast<std::size_t>(c) * shape[1] + y) * shape[2] + x]; }
    float at(int c, int y, int x) const { return data[(static_cast<std::size_t>(c) * shape[1] + y) * shape[2] + x]; }
};

std::string shape_str(const std::vector<int>& shape);
bool all_finite(const Tensor& t);

}  // namespace cyseg
