#include "pf/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace pf {

static inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

uint64_t Rng::next_u64() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t x = state;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double Rng::next_unit() {
    return ((next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::next_gauss() {
    if (have_spare) {
        have_spare = false;
        return spare;
    }
    double u1 = next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare = r * std::sin(a);
    have_spare = true;
    return r * std::cos(a);
}

uint64_t mix_seed(uint64_t master, uint64_t stream, uint64_t counter) {
    return splitmix64(splitmix64(master ^ (stream * 0xd1342543de82ef95ull)) ^
                      (counter * 0xaf251af3b0f025b5ull));
}

std::vector<double> awgn_transmit(const std::vector<uint8_t>& codeword,
                                  double sigma, uint64_t block_seed) {
    if (!(sigma > 0.0)) throw std::domain_error("sigma must be positive");
    Rng rng(block_seed);
    std::vector<double> llr(codeword.size());
    double scale = 2.0 / (sigma * sigma);
    for (size_t i = 0; i < codeword.size(); ++i) {
        double s = codeword[i] ? -1.0 : 1.0;
        llr[i] = scale * (s + sigma * rng.next_gauss());
    }
    return llr;
}

void wilson_interval(uint64_t errors, uint64_t trials, double& lo, double& hi) {
    if (trials == 0) {
        lo = hi = 0.0;
        return;
    }
    const double z = 1.959963984540054;
    double n = (double)trials;
    double p = (double)errors / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = (z / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

namespace {

struct BlockTally {
    bool block_error = false;
    uint32_t bit_errors = 0;
    bool prune = false;
    bool ml_like = false;
    int first_error = -1;
};

BlockTally run_block(const CodeConfig& cfg, const SimConfig& sim, double sigma,
                     uint64_t snr_idx, uint64_t block_idx) {
    uint64_t seed = mix_seed(sim.master_seed, snr_idx, block_idx);
    Rng msg_rng(splitmix64(seed));
    std::vector<uint8_t> message(cfg.payload_len());
    for (auto& b : message) b = (uint8_t)(msg_rng.next_u64() & 1u);
    EncodeTrace tr = encode(message, cfg);

    std::vector<double> llr;
    if (sim.noiseless) {
        llr.resize(tr.codeword.size());
        for (size_t i = 0; i < llr.size(); ++i) llr[i] = tr.codeword[i] ? -300.0 : 300.0;
    } else {
        llr = awgn_transmit(tr.codeword, sigma, seed);
    }

    DecodeOptions opt;
    opt.list_size = sim.list_size;
    opt.exact_llr = sim.exact_llr;
    opt.genie = &tr;
    DecoderOutcome out = scl_decode(llr, cfg, opt);

    BlockTally t;
    t.first_error = out.first_error;
    t.block_error = out.event != EventClass::Correct;
    t.prune = out.event == EventClass::Prune;
    t.ml_like = out.event == EventClass::MlLike;
    for (size_t i = 0; i < message.size(); ++i)
        t.bit_errors += (uint32_t)(out.message[i] != message[i]);
    return t;
}

}  // namespace

SimResult run_bler(const CodeConfig& cfg, const SimConfig& sim) {
    cfg.validate();
    if (sim.ebn0_grid_db.empty()) throw std::domain_error("empty Eb/N0 grid");
    if (sim.target_errors < 1) throw std::domain_error("target errors must be >= 1");
    double rate = (double)cfg.payload_len() / (double)cfg.n();
    uint32_t workers = std::max<uint32_t>(1, sim.workers);
    SimResult res;

    for (size_t s = 0; s < sim.ebn0_grid_db.size(); ++s) {
        double db = sim.ebn0_grid_db[s];
        double sigma = std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, db / 10.0)));
        SimPoint pt;
        pt.ebn0_db = db;
        if (sim.list_size == 1) pt.first_error_hist.assign(cfg.n(), 0);

        uint64_t done = 0;
        while (done < sim.max_blocks && pt.block_errors < sim.target_errors) {
            uint64_t batch = std::min(sim.batch_size, sim.max_blocks - done);
            std::vector<BlockTally> tallies(batch);
            if (workers == 1 || batch < 2) {
                for (uint64_t b = 0; b < batch; ++b)
                    tallies[b] = run_block(cfg, sim, sigma, s, done + b);
            } else {
                std::vector<std::thread> pool;
                for (uint32_t w = 0; w < workers; ++w) {
                    pool.emplace_back([&, w] {
                        for (uint64_t b = w; b < batch; b += workers)
                            tallies[b] = run_block(cfg, sim, sigma, s, done + b);
                    });
                }
                for (auto& th : pool) th.join();
            }
            // aggregation in block order keeps results worker-count independent
            for (uint64_t b = 0; b < batch; ++b) {
                const BlockTally& t = tallies[b];
                pt.block_errors += t.block_error;
                pt.bit_errors += t.bit_errors;
                pt.prune += t.prune;
                pt.ml_like += t.ml_like;
                if (!pt.first_error_hist.empty() && t.first_error >= 0)
                    ++pt.first_error_hist[t.first_error];
            }
            done += batch;
        }
        pt.blocks = done;
        pt.bler = done ? (double)pt.block_errors / (double)done : 0.0;
        wilson_interval(pt.block_errors, pt.blocks, pt.bler_lo, pt.bler_hi);
        res.points.push_back(std::move(pt));
    }
    return res;
}

}  // namespace pf
