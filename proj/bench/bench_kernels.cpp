// Times the serial reference backend against the OpenMP backend for the
// kernels that dominate training, at model-realistic shapes. Also checks
// the two backends agree bit-for-bit on every output buffer.
//
// Usage: bench_kernels [iters]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "csumm/kernels.hpp"
#include "csumm/rng.hpp"

namespace k = csumm::kernels;

namespace {

std::vector<float> random_buf(size_t n, csumm::Rng& rng) {
  std::vector<float> v(n);
  for (auto& x : v) x = rng.uniform(-1.0f, 1.0f);
  return v;
}

double time_median_ms(const std::function<void()>& fn, int iters) {
  std::vector<double> samples;
  fn();  // warmup
  for (int i = 0; i < iters; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

bool bit_equal(const std::vector<float>& a, const std::vector<float>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(float)) == 0;
}

struct Row {
  std::string name;
  double serial_ms = 0;
  double omp_ms = 0;
  bool match = false;
};

void print_row(const Row& r) {
  std::printf("%-28s %10.3f %10.3f %8.2fx   %s\n", r.name.c_str(), r.serial_ms, r.omp_ms,
              r.serial_ms / r.omp_ms, r.match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int iters = argc > 1 ? std::atoi(argv[1]) : 20;
  csumm::Rng rng(1234);

  // Encoder shapes: char sequence length 1024, embed 16, conv 32/64 filters.
  // Decoder shapes: hidden 160, vocab 4096 output projection.
  const int len = 1024, embed = 16, c1 = 32, c2 = 64, w1 = 5, w2 = 3;
  const int dh = 160, vocab = 4096;

  std::vector<Row> rows;
  bool all_match = true;

  auto bench = [&](const std::string& name, size_t out_elems,
                   const std::function<void(float*)>& run) {
    Row r;
    r.name = name;
    std::vector<float> out_s(out_elems, 0.0f), out_p(out_elems, 0.0f);
    k::set_backend(k::Backend::serial);
    r.serial_ms = time_median_ms([&] {
      std::fill(out_s.begin(), out_s.end(), 0.0f);
      run(out_s.data());
    }, iters);
    k::set_backend(k::Backend::openmp);
    r.omp_ms = time_median_ms([&] {
      std::fill(out_p.begin(), out_p.end(), 0.0f);
      run(out_p.data());
    }, iters);
    r.match = bit_equal(out_s, out_p);
    all_match = all_match && r.match;
    rows.push_back(r);
    print_row(r);
  };

  std::printf("threads: %d, iters: %d (median)\n", k::max_threads(), iters);
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  {
    auto in = random_buf(size_t(len) * embed, rng);
    auto f = random_buf(size_t(w1) * embed * c1, rng);
    auto b = random_buf(c1, rng);
    int out_len = len - w1 + 1;
    bench("conv1d_fwd 1024x16->32 w5", size_t(out_len) * c1,
          [&](float* out) { k::conv1d_forward(in.data(), f.data(), b.data(), out, len, w1, embed, c1); });

    auto gout = random_buf(size_t(out_len) * c1, rng);
    bench("conv1d_bwd_in  same", size_t(len) * embed, [&](float* gin) {
      k::conv1d_backward_input(f.data(), gout.data(), gin, len, w1, embed, c1);
    });
    bench("conv1d_bwd_flt same", f.size(), [&](float* gf) {
      k::conv1d_backward_filters(in.data(), gout.data(), gf, len, w1, embed, c1);
    });
  }

  {
    auto in = random_buf(size_t(len) * c1, rng);
    auto f = random_buf(size_t(w2) * c1 * c2, rng);
    auto b = random_buf(c2, rng);
    int out_len = len - w2 + 1;
    bench("conv1d_fwd 1024x32->64 w3", size_t(out_len) * c2,
          [&](float* out) { k::conv1d_forward(in.data(), f.data(), b.data(), out, len, w2, c1, c2); });
  }

  {
    auto x = random_buf(dh, rng);
    auto w = random_buf(size_t(dh) * vocab, rng);
    auto b = random_buf(vocab, rng);
    bench("dense_fwd 160->4096", vocab,
          [&](float* y) { k::dense_forward(x.data(), w.data(), b.data(), y, dh, vocab); });

    auto gy = random_buf(vocab, rng);
    bench("dense_bwd_w 160->4096", size_t(dh) * vocab, [&](float* gw) {
      k::dense_backward_weight(x.data(), gy.data(), gw, dh, vocab);
    });
  }

  {
    auto x = random_buf(dh, rng);
    auto h = random_buf(dh, rng);
    auto c = random_buf(dh, rng);
    auto wx = random_buf(size_t(dh) * 4 * dh, rng);
    auto wh = random_buf(size_t(dh) * 4 * dh, rng);
    auto b = random_buf(size_t(4) * dh, rng);
    // Pack the three outputs into one buffer so the match check covers all.
    bench("lstm_fwd 160", size_t(4) * dh + 2 * dh, [&](float* out) {
      float* gates = out;
      float* h_out = out + 4 * dh;
      float* c_out = out + 5 * dh;
      k::lstm_forward(x.data(), h.data(), c.data(), wx.data(), wh.data(), b.data(), gates, h_out,
                      c_out, dh, dh);
    });
  }

  {
    const int n = 1 << 20;
    auto g = random_buf(n, rng);
    std::vector<float> p0 = random_buf(n, rng), m0(n, 0.0f), v0(n, 0.0f);
    bench("adam_update 1M", 3 * size_t(n), [&](float* buf) {
      float* p = buf;
      float* m = buf + n;
      float* v = buf + 2 * n;
      std::memcpy(p, p0.data(), n * sizeof(float));
      std::memset(m, 0, n * sizeof(float));
      std::memset(v, 0, n * sizeof(float));
      k::adam_update(p, g.data(), m, v, n, 1, 1e-3, 0.9, 0.999, 1e-8);
    });
  }

  if (!all_match) {
    std::printf("backend outputs differ\n");
    return 1;
  }
  return 0;
}
