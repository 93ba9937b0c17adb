#pragma once

#include <cstdint>

namespace csumm::kernels {

// Two interchangeable backends: `serial` is the plain-loop reference,
// `omp` parallelizes over output elements. Both accumulate in double and
// write float32, and every parallel loop assigns each output element to
// exactly one thread, so results are bit-identical across backends and
// thread counts.
enum class Backend { serial, openmp };

Backend active_backend();
void set_backend(Backend b);
int max_threads();
void set_max_threads(int n);

// All buffers are row-major float32. Backward kernels accumulate (+=)
// into their gradient outputs; callers zero-initialize.
//
//   dense:   y[j] = b[j] + sum_i x[i] * w[i*dout + j]
//   conv1d:  out[t*dout + o] = b[o] + sum_{a<width} sum_i in[(t+a)*din + i] * f[(a*din + i)*dout + o]
//            t in [0, len - width]
//   lstm:    gates laid out [i | f | g | o], each dh wide; gates buffer
//            stores post-activation values for the backward pass.
#define CSUMM_KERNEL_DECLS                                                                        \
  void dense_forward(const float* x, const float* w, const float* b, float* y, int din,          \
                     int dout);                                                                   \
  void dense_backward_input(const float* w, const float* gy, float* gx, int din, int dout);      \
  void dense_backward_weight(const float* x, const float* gy, float* gw, int din, int dout);     \
  void conv1d_forward(const float* in, const float* f, const float* b, float* out, int len,      \
                      int width, int din, int dout);                                             \
  void conv1d_backward_input(const float* f, const float* gout, float* gin, int len, int width,  \
                             int din, int dout);                                                  \
  void conv1d_backward_filters(const float* in, const float* gout, float* gf, int len,           \
                               int width, int din, int dout);                                     \
  void conv1d_backward_bias(const float* gout, float* gb, int out_len, int dout);                \
  void relu_forward(const float* x, float* y, int n);                                            \
  void relu_backward(const float* x, const float* gy, float* gx, int n);                         \
  void sum_over_time_forward(const float* in, float* out, int len, int d);                       \
  void sum_over_time_backward(const float* gout, float* gin, int len, int d);                    \
  void embed_forward(const float* table, const int* ids, float* out, int len, int d);            \
  void embed_backward(const int* ids, const float* gout, float* gtable, int len, int d);         \
  void lstm_forward(const float* x, const float* h, const float* c, const float* wx,             \
                    const float* wh, const float* b, float* gates, float* h_out, float* c_out,    \
                    int dx, int dh);                                                              \
  void lstm_backward(const float* x, const float* h, const float* c, const float* wx,            \
                     const float* wh, const float* gates, const float* c_out,                     \
                     const float* gh_out, const float* gc_out, float* gx, float* gh, float* gc,   \
                     float* gwx, float* gwh, float* gb, int dx, int dh);                          \
  void softmax(const float* logits, float* probs, int n);                                        \
  void adam_update(float* p, const float* g, float* m, float* v, int n, long long step,          \
                   double lr, double beta1, double beta2, double eps);                            \
  void accumulate(float* dst, const float* src, int n);                                          \
  void scale_inplace(float* dst, double factor, int n)

namespace serial {
CSUMM_KERNEL_DECLS;
}

namespace omp {
CSUMM_KERNEL_DECLS;
}

// Dispatch to the active backend.
CSUMM_KERNEL_DECLS;

#undef CSUMM_KERNEL_DECLS

}  // namespace csumm::kernels
