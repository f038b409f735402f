#pragma once

// Low-level layer kernels shared by the forward/backward pass and the
// relevance propagation pass. All convs are stride 1 with zero "same"
// padding (pad = k/2, odd k only).

namespace cyseg::kernels {

void conv2d_forward(const float* x, const float* w, const float* b, float* y,
                    int cin, int h, int wd, int cout, int k);

// gx += is NOT used; gx is overwritten
void conv2d_backward_data(const float* gy, const float* w, float* gx,
                          int cin, int h, int wd, int cout, int k);

void conv2d_backward_params(const float* gy, const float* x, float* gw, float* gb,
                            int cin, int h, int wd, int cout, int k);

void linear_forward(const float* x, const float* w, const float* b, float* y,
                    int in_dim, int out_dim);

void linear_backward_data(const float* gy, const float* w, float* gx,
                          int in_dim, int out_dim);

void linear_backward_params(const float* gy, const float* x, float* gw, float* gb,
                            int in_dim, int out_dim);

}  // namespace cyseg::kernels
