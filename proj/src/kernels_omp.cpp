#include <cmath>
#include <vector>

#include "csumm/kernels.hpp"

// OpenMP backend. Every loop is parallel over output elements only, and the
// per-element arithmetic is the same double-accumulator sequence as the
// serial backend, so results are bit-identical at any thread count.

namespace csumm::kernels::omp {

namespace {
inline double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }
}  // namespace

void dense_forward(const float* x, const float* w, const float* b, float* y, int din, int dout) {
#pragma omp parallel for schedule(static)
  for (int j = 0; j < dout; ++j) {
    double acc = b[j];
    for (int i = 0; i < din; ++i) {
      acc += static_cast<double>(x[i]) * static_cast<double>(w[i * dout + j]);
    }
    y[j] = static_cast<float>(acc);
  }
}

void dense_backward_input(const float* w, const float* gy, float* gx, int din, int dout) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < din; ++i) {
    double acc = gx[i];
    for (int j = 0; j < dout; ++j) {
      acc += static_cast<double>(w[i * dout + j]) * static_cast<double>(gy[j]);
    }
    gx[i] = static_cast<float>(acc);
  }
}

void dense_backward_weight(const float* x, const float* gy, float* gw, int din, int dout) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < din; ++i) {
    for (int j = 0; j < dout; ++j) {
      gw[i * dout + j] = static_cast<float>(
          static_cast<double>(gw[i * dout + j]) +
          static_cast<double>(x[i]) * static_cast<double>(gy[j]));
    }
  }
}

void conv1d_forward(const float* in, const float* f, const float* b, float* out, int len,
                    int width, int din, int dout) {
  const int out_len = len - width + 1;
#pragma omp parallel for schedule(static)
  for (int t = 0; t < out_len; ++t) {
    for (int o = 0; o < dout; ++o) {
      double acc = b[o];
      for (int a = 0; a < width; ++a) {
        for (int i = 0; i < din; ++i) {
          acc += static_cast<double>(in[(t + a) * din + i]) *
                 static_cast<double>(f[(a * din + i) * dout + o]);
        }
      }
      out[t * dout + o] = static_cast<float>(acc);
    }
  }
}

void conv1d_backward_input(const float* f, const float* gout, float* gin, int len, int width,
                           int din, int dout) {
  const int out_len = len - width + 1;
#pragma omp parallel for schedule(static)
  for (int t = 0; t < len; ++t) {
    const int a_lo = t - out_len + 1 > 0 ? t - out_len + 1 : 0;
    const int a_hi = t < width - 1 ? t : width - 1;
    for (int i = 0; i < din; ++i) {
      double acc = gin[t * din + i];
      for (int a = a_lo; a <= a_hi; ++a) {
        for (int o = 0; o < dout; ++o) {
          acc += static_cast<double>(f[(a * din + i) * dout + o]) *
                 static_cast<double>(gout[(t - a) * dout + o]);
        }
      }
      gin[t * din + i] = static_cast<float>(acc);
    }
  }
}

void conv1d_backward_filters(const float* in, const float* gout, float* gf, int len, int width,
                             int din, int dout) {
  const int out_len = len - width + 1;
  const int rows = width * din;
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    const int a = r / din;
    const int i = r % din;
    for (int o = 0; o < dout; ++o) {
      double acc = gf[(a * din + i) * dout + o];
      for (int t = 0; t < out_len; ++t) {
        acc += static_cast<double>(in[(t + a) * din + i]) *
               static_cast<double>(gout[t * dout + o]);
      }
      gf[(a * din + i) * dout + o] = static_cast<float>(acc);
    }
  }
}

void conv1d_backward_bias(const float* gout, float* gb, int out_len, int dout) {
#pragma omp parallel for schedule(static)
  for (int o = 0; o < dout; ++o) {
    double acc = gb[o];
    for (int t = 0; t < out_len; ++t) {
      acc += static_cast<double>(gout[t * dout + o]);
    }
    gb[o] = static_cast<float>(acc);
  }
}

void relu_forward(const float* x, float* y, int n) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    y[i] = x[i] > 0.0f ? x[i] : 0.0f;
  }
}

void relu_backward(const float* x, const float* gy, float* gx, int n) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    if (x[i] > 0.0f) {
      gx[i] = static_cast<float>(static_cast<double>(gx[i]) + static_cast<double>(gy[i]));
    }
  }
}

void sum_over_time_forward(const float* in, float* out, int len, int d) {
#pragma omp parallel for schedule(static)
  for (int j = 0; j < d; ++j) {
    double acc = 0.0;
    for (int t = 0; t < len; ++t) {
      acc += static_cast<double>(in[t * d + j]);
    }
    out[j] = static_cast<float>(acc);
  }
}

void sum_over_time_backward(const float* gout, float* gin, int len, int d) {
#pragma omp parallel for schedule(static)
  for (int t = 0; t < len; ++t) {
    for (int j = 0; j < d; ++j) {
      gin[t * d + j] = static_cast<float>(
          static_cast<double>(gin[t * d + j]) + static_cast<double>(gout[j]));
    }
  }
}

void embed_forward(const float* table, const int* ids, float* out, int len, int d) {
#pragma omp parallel for schedule(static)
  for (int t = 0; t < len; ++t) {
    const float* row = table + static_cast<size_t>(ids[t]) * d;
    for (int j = 0; j < d; ++j) {
      out[t * d + j] = row[j];
    }
  }
}

void embed_backward(const int* ids, const float* gout, float* gtable, int len, int d) {
  // Parallel over columns: a repeated id still accumulates its timesteps in
  // order inside one thread, and no two threads touch the same column.
#pragma omp parallel for schedule(static)
  for (int j = 0; j < d; ++j) {
    for (int t = 0; t < len; ++t) {
      float* cell = gtable + static_cast<size_t>(ids[t]) * d + j;
      *cell = static_cast<float>(static_cast<double>(*cell) +
                                 static_cast<double>(gout[t * d + j]));
    }
  }
}

void lstm_forward(const float* x, const float* h, const float* c, const float* wx,
                  const float* wh, const float* b, float* gates, float* h_out, float* c_out,
                  int dx, int dh) {
  const int dg = 4 * dh;
#pragma omp parallel for schedule(static)
  for (int k = 0; k < dg; ++k) {
    double acc = b[k];
    for (int i = 0; i < dx; ++i) {
      acc += static_cast<double>(x[i]) * static_cast<double>(wx[i * dg + k]);
    }
    for (int u = 0; u < dh; ++u) {
      acc += static_cast<double>(h[u]) * static_cast<double>(wh[u * dg + k]);
    }
    gates[k] = static_cast<float>(k < 2 * dh || k >= 3 * dh ? sigmoid(acc) : std::tanh(acc));
  }
#pragma omp parallel for schedule(static)
  for (int u = 0; u < dh; ++u) {
    const double iv = gates[u];
    const double fv = gates[dh + u];
    const double gv = gates[2 * dh + u];
    const double ov = gates[3 * dh + u];
    const float cf = static_cast<float>(fv * static_cast<double>(c[u]) + iv * gv);
    c_out[u] = cf;
    h_out[u] = static_cast<float>(ov * std::tanh(static_cast<double>(cf)));
  }
}

void lstm_backward(const float* x, const float* h, const float* c, const float* wx,
                   const float* wh, const float* gates, const float* c_out,
                   const float* gh_out, const float* gc_out, float* gx, float* gh, float* gc,
                   float* gwx, float* gwh, float* gb, int dx, int dh) {
  const int dg = 4 * dh;
  std::vector<float> dpre(static_cast<size_t>(dg));
#pragma omp parallel for schedule(static)
  for (int u = 0; u < dh; ++u) {
    const double iv = gates[u];
    const double fv = gates[dh + u];
    const double gv = gates[2 * dh + u];
    const double ov = gates[3 * dh + u];
    const double tc = std::tanh(static_cast<double>(c_out[u]));
    const double dht = gh_out[u];
    const double dct = static_cast<double>(gc_out[u]) + dht * ov * (1.0 - tc * tc);
    dpre[u] = static_cast<float>(dct * gv * iv * (1.0 - iv));
    dpre[dh + u] = static_cast<float>(dct * static_cast<double>(c[u]) * fv * (1.0 - fv));
    dpre[2 * dh + u] = static_cast<float>(dct * iv * (1.0 - gv * gv));
    dpre[3 * dh + u] = static_cast<float>(dht * tc * ov * (1.0 - ov));
    gc[u] = static_cast<float>(static_cast<double>(gc[u]) + dct * fv);
  }
  dense_backward_input(wx, dpre.data(), gx, dx, dg);
  dense_backward_input(wh, dpre.data(), gh, dh, dg);
  dense_backward_weight(x, dpre.data(), gwx, dx, dg);
  dense_backward_weight(h, dpre.data(), gwh, dh, dg);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < dg; ++k) {
    gb[k] = static_cast<float>(static_cast<double>(gb[k]) + static_cast<double>(dpre[k]));
  }
}

void softmax(const float* logits, float* probs, int n) {
  // Max and sum stay serial so the reduction order is fixed; only the
  // elementwise pass parallelizes.
  double m = logits[0];
  for (int i = 1; i < n; ++i) {
    if (logits[i] > m) m = logits[i];
  }
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    z += std::exp(static_cast<double>(logits[i]) - m);
  }
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    probs[i] = static_cast<float>(std::exp(static_cast<double>(logits[i]) - m) / z);
  }
}

void adam_update(float* p, const float* g, float* m, float* v, int n, long long step,
                 double lr, double beta1, double beta2, double eps) {
  const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(step));
  const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(step));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const double gi = g[i];
    const double mi = beta1 * static_cast<double>(m[i]) + (1.0 - beta1) * gi;
    const double vi = beta2 * static_cast<double>(v[i]) + (1.0 - beta2) * gi * gi;
    m[i] = static_cast<float>(mi);
    v[i] = static_cast<float>(vi);
    const double mhat = static_cast<double>(m[i]) / bc1;
    const double vhat = static_cast<double>(v[i]) / bc2;
    p[i] = static_cast<float>(static_cast<double>(p[i]) - lr * mhat / (std::sqrt(vhat) + eps));
  }
}

void accumulate(float* dst, const float* src, int n) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    dst[i] = static_cast<float>(static_cast<double>(dst[i]) + static_cast<double>(src[i]));
  }
}

void scale_inplace(float* dst, double factor, int n) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    dst[i] = static_cast<float>(static_cast<double>(dst[i]) * factor);
  }
}

}  // namespace csumm::kernels::omp
