#include "csumm/kernels.hpp"

#include <omp.h>

namespace csumm::kernels {

namespace {
Backend g_backend = Backend::openmp;
}  // namespace

Backend active_backend() { return g_backend; }

void set_backend(Backend b) { g_backend = b; }

int max_threads() { return omp_get_max_threads(); }

void set_max_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

// Forward each call to the active backend.
#define CSUMM_DISPATCH(call)                  \
  do {                                        \
    if (g_backend == Backend::serial) {       \
      serial::call;                           \
    } else {                                  \
      omp::call;                              \
    }                                         \
  } while (0)

void dense_forward(const float* x, const float* w, const float* b, float* y, int din, int dout) {
  CSUMM_DISPATCH(dense_forward(x, w, b, y, din, dout));
}

void dense_backward_input(const float* w, const float* gy, float* gx, int din, int dout) {
  CSUMM_DISPATCH(dense_backward_input(w, gy, gx, din, dout));
}

void dense_backward_weight(const float* x, const float* gy, float* gw, int din, int dout) {
  CSUMM_DISPATCH(dense_backward_weight(x, gy, gw, din, dout));
}

void conv1d_forward(const float* in, const float* f, const float* b, float* out, int len,
                    int width, int din, int dout) {
  CSUMM_DISPATCH(conv1d_forward(in, f, b, out, len, width, din, dout));
}

void conv1d_backward_input(const float* f, const float* gout, float* gin, int len, int width,
                           int din, int dout) {
  CSUMM_DISPATCH(conv1d_backward_input(f, gout, gin, len, width, din, dout));
}

void conv1d_backward_filters(const float* in, const float* gout, float* gf, int len, int width,
                             int din, int dout) {
  CSUMM_DISPATCH(conv1d_backward_filters(in, gout, gf, len, width, din, dout));
}

void conv1d_backward_bias(const float* gout, float* gb, int out_len, int dout) {
  CSUMM_DISPATCH(conv1d_backward_bias(gout, gb, out_len, dout));
}

void relu_forward(const float* x, float* y, int n) { CSUMM_DISPATCH(relu_forward(x, y, n)); }

void relu_backward(const float* x, const float* gy, float* gx, int n) {
  CSUMM_DISPATCH(relu_backward(x, gy, gx, n));
}

void sum_over_time_forward(const float* in, float* out, int len, int d) {
  CSUMM_DISPATCH(sum_over_time_forward(in, out, len, d));
}

void sum_over_time_backward(const float* gout, float* gin, int len, int d) {
  CSUMM_DISPATCH(sum_over_time_backward(gout, gin, len, d));
}

void embed_forward(const float* table, const int* ids, float* out, int len, int d) {
  CSUMM_DISPATCH(embed_forward(table, ids, out, len, d));
}

void embed_backward(const int* ids, const float* gout, float* gtable, int len, int d) {
  CSUMM_DISPATCH(embed_backward(ids, gout, gtable, len, d));
}

void lstm_forward(const float* x, const float* h, const float* c, const float* wx,
                  const float* wh, const float* b, float* gates, float* h_out, float* c_out,
                  int dx, int dh) {
  CSUMM_DISPATCH(lstm_forward(x, h, c, wx, wh, b, gates, h_out, c_out, dx, dh));
}

void lstm_backward(const float* x, const float* h, const float* c, const float* wx,
                   const float* wh, const float* gates, const float* c_out,
                   const float* gh_out, const float* gc_out, float* gx, float* gh, float* gc,
                   float* gwx, float* gwh, float* gb, int dx, int dh) {
  CSUMM_DISPATCH(lstm_backward(x, h, c, wx, wh, gates, c_out, gh_out, gc_out, gx, gh, gc, gwx,
                               gwh, gb, dx, dh));
}

void softmax(const float* logits, float* probs, int n) { CSUMM_DISPATCH(softmax(logits, probs, n)); }

void adam_update(float* p, const float* g, float* m, float* v, int n, long long step,
                 double lr, double beta1, double beta2, double eps) {
  CSUMM_DISPATCH(adam_update(p, g, m, v, n, step, lr, beta1, beta2, eps));
}

void accumulate(float* dst, const float* src, int n) { CSUMM_DISPATCH(accumulate(dst, src, n)); }

void scale_inplace(float* dst, double factor, int n) {
  CSUMM_DISPATCH(scale_inplace(dst, factor, n));
}

#undef CSUMM_DISPATCH

}  // namespace csumm::kernels
