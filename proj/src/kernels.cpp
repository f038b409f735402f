#include "cyseg/kernels.hpp"

#include <Eigen/Dense>

#include <cstring>
#include <vector>

namespace cyseg::kernels {

using MatRM = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapRM = Eigen::Map<MatRM>;
using CMapRM = Eigen::Map<const MatRM>;

namespace {

// col: (cin*k*k) x (h*wd), column j = receptive field of output pixel j
void im2col(const float* x, float* col, int cin, int h, int wd, int k) {
    const int pad = k / 2;
    const int hw = h * wd;
    for (int ci = 0; ci < cin; ++ci) {
        for (int ky = 0; ky < k; ++ky) {
            for (int kx = 0; kx < k; ++kx) {
                float* row = col + (static_cast<std::size_t>(ci) * k * k + ky * k + kx) * hw;
                const int dy = ky - pad, dx = kx - pad;
                for (int y = 0; y < h; ++y) {
                    const int sy = y + dy;
                    if (sy < 0 || sy >= h) {
                        std::memset(row + y * wd, 0, sizeof(float) * wd);
                        continue;
                    }
                    const float* src = x + (static_cast<std::size_t>(ci) * h + sy) * wd;
                    for (int xx = 0; xx < wd; ++xx) {
                        const int sx = xx + dx;
                        row[y * wd + xx] = (sx < 0 || sx >= wd) ? 0.0f : src[sx];
                    }
                }
            }
        }
    }
}

// scatter-add of a col buffer back into image layout
void col2im(const float* col, float* x, int cin, int h, int wd, int k) {
    const int pad = k / 2;
    const int hw = h * wd;
    std::memset(x, 0, sizeof(float) * static_cast<std::size_t>(cin) * hw);
    for (int ci = 0; ci < cin; ++ci) {
        for (int ky = 0; ky < k; ++ky) {
            for (int kx = 0; kx < k; ++kx) {
                const float* row = col + (static_cast<std::size_t>(ci) * k * k + ky * k + kx) * hw;
                const int dy = ky - pad, dx = kx - pad;
                for (int y = 0; y < h; ++y) {
                    const int sy = y + dy;
                    if (sy < 0 || sy >= h) continue;
                    float* dst = x + (static_cast<std::size_t>(ci) * h + sy) * wd;
                    for (int xx = 0; xx < wd; ++xx) {
                        const int sx = xx + dx;
                        if (sx >= 0 && sx < wd) dst[sx] += row[y * wd + xx];
                    }
                }
            }
        }
    }
}

}  // namespace

void conv2d_forward(const float* x, const float* w, const float* b, float* y,
                    int cin, int h, int wd, int cout, int k) {
    const int hw = h * wd, ck = cin * k * k;
    std::vector<float> col(static_cast<std::size_t>(ck) * hw);
    im2col(x, col.data(), cin, h, wd, k);
    CMapRM wm(w, cout, ck);
    CMapRM cm(col.data(), ck, hw);
    MapRM ym(y, cout, hw);
    ym.noalias() = wm * cm;
    for (int co = 0; co < cout; ++co) ym.row(co).array() += b[co];
}

void conv2d_backward_data(const float* gy, const float* w, float* gx,
                          int cin, int h, int wd, int cout, int k) {
    const int hw = h * wd, ck = cin * k * k;
    std::vector<float> gcol(static_cast<std::size_t>(ck) * hw);
    CMapRM wm(w, cout, ck);
    CMapRM gym(gy, cout, hw);
    MapRM gcm(gcol.data(), ck, hw);
    gcm.noalias() = wm.transpose() * gym;
    col2im(gcol.data(), gx, cin, h, wd, k);
}

void conv2d_backward_params(const float* gy, const float* x, float* gw, float* gb,
                            int cin, int h, int wd, int cout, int k) {
    const int hw = h * wd, ck = cin * k * k;
    std::vector<float> col(static_cast<std::size_t>(ck) * hw);
    im2col(x, col.data(), cin, h, wd, k);
    CMapRM gym(gy, cout, hw);
    CMapRM cm(col.data(), ck, hw);
    MapRM gwm(gw, cout, ck);
    gwm.noalias() = gym * cm.transpose();
    for (int co = 0; co < cout; ++co) gb[co] = gym.row(co).sum();
}

void linear_forward(const float* x, const float* w, const float* b, float* y,
                    int in_dim, int out_dim) {
    CMapRM wm(w, out_dim, in_dim);
    Eigen::Map<const Eigen::VectorXf> xv(x, in_dim);
    Eigen::Map<Eigen::VectorXf> yv(y, out_dim);
    yv.noalias() = wm * xv;
    yv += Eigen::Map<const Eigen::VectorXf>(b, out_dim);
}

void linear_backward_data(const float* gy, const float* w, float* gx,
                          int in_dim, int out_dim) {
    CMapRM wm(w, out_dim, in_dim);
    Eigen::Map<const Eigen::VectorXf> gyv(gy, out_dim);
    Eigen::Map<Eigen::VectorXf> gxv(gx, in_dim);
    gxv.noalias() = wm.transpose() * gyv;
}

void linear_backward_params(const float* gy, const float* x, float* gw, float* gb,
                            int in_dim, int out_dim) {
    Eigen::Map<const Eigen::VectorXf> gyv(gy, out_dim);
    Eigen::Map<const Eigen::VectorXf> xv(x, in_dim);
    MapRM gwm(gw, out_dim, in_dim);
    gwm.noalias() = gyv * xv.transpose();
    std::memcpy(gb, gy, sizeof(float) * out_dim);
}

}  // namespace cyseg::kernels
