#include "npzeta/common.hpp"

#include <atomic>

namespace npzeta {

Complex chunked_complex_sum(uint64_t total, int threads,
                            const std::function<Complex(uint64_t, uint64_t)>& chunk_sum) {
  if (total == 0) return Complex(0.0, 0.0);
  const uint64_t kChunks = total < 256 ? total : 256;
  std::vector<Complex> partial(kChunks, Complex(0.0, 0.0));
  auto run_chunk = [&](uint64_t c) {
    uint64_t begin = total / kChunks * c + std::min<uint64_t>(c, total % kChunks);
    uint64_t len = total / kChunks + (c < total % kChunks ? 1 : 0);
    partial[c] = chunk_sum(begin, begin + len);
  };
  if (threads <= 1 || kChunks == 1) {
    for (uint64_t c = 0; c < kChunks; ++c) run_chunk(c);
  } else {
    std::atomic<uint64_t> next{0};
    auto worker = [&] {
      for (;;) {
        uint64_t c = next.fetch_add(1);
        if (c >= kChunks) break;
        run_chunk(c);
      }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(threads, static_cast<int>(kChunks));
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  Complex acc(0.0, 0.0);
  for (uint64_t c = 0; c < kChunks; ++c) acc += partial[c];
  return acc;
}

}  // namespace npzeta
