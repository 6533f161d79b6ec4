#include "pf/codec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace pf {

void polar_transform(std::vector<uint8_t>& u) {
    size_t n = u.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("transform length must be a power of two");
    for (size_t h = 1; h < n; h <<= 1)
        for (size_t base = 0; base < n; base += 2 * h)
            for (size_t j = base; j < base + h; ++j) u[j] ^= u[j + h];
}

void CodeConfig::validate() const {
    if (!(m >= 1 && m <= 30)) throw std::domain_error("m outside [1,30]");
    if (info_set.empty() || info_set.size() > n())
        throw std::domain_error("information set size outside [1,N]");
    if (!std::is_sorted(info_set.begin(), info_set.end()) ||
        std::adjacent_find(info_set.begin(), info_set.end()) != info_set.end())
        throw std::domain_error("information set must be sorted and duplicate-free");
    if (info_set.back() >= n()) throw std::domain_error("information index out of range");
    if (pre == Pretransform::Crc) {
        if (crc_len < 1 || crc_len > 31 || (uint32_t)crc_len >= k())
            throw std::domain_error("CRC length incompatible with K");
    }
    if (pre == Pretransform::Pac) {
        if (pac_p.empty() || pac_p[0] != 1)
            throw std::domain_error("PAC impulse response must be monic");
    }
}

uint32_t crc_compute(const std::vector<uint8_t>& payload, uint32_t poly, int len) {
    uint32_t reg = 0;
    uint32_t mask = (len == 31) ? 0x7fffffffu : ((1u << len) - 1);
    for (uint8_t b : payload) {
        uint32_t fb = ((reg >> (len - 1)) & 1u) ^ (b & 1u);
        reg = ((reg << 1) & mask) ^ (fb ? (poly & mask) : 0u);
    }
    return reg;
}

bool crc_check(const std::vector<uint8_t>& word, uint32_t poly, int len) {
    if ((int)word.size() < len) return false;
    std::vector<uint8_t> payload(word.begin(), word.end() - len);
    uint32_t rem = crc_compute(payload, poly, len);
    for (int t = 0; t < len; ++t)
        if (((rem >> (len - 1 - t)) & 1u) != word[word.size() - len + t]) return false;
    return true;
}

namespace {

struct ConvState {
    uint64_t reg = 0;   // previous v bits, most recent in bit 0
    uint64_t taps = 0;  // p[1..] as a mask aligned with reg
    uint64_t mask = 0;

    void init(const std::vector<uint8_t>& p) {
        taps = 0;
        for (size_t t = 1; t < p.size(); ++t)
            if (p[t]) taps |= (uint64_t(1) << (t - 1));
        mask = p.size() > 1 ? ((uint64_t(1) << (p.size() - 1)) - 1) : 0;
        reg = 0;
    }
    uint8_t step(uint8_t v) {
        uint8_t u = (uint8_t)((v ^ std::popcount(reg & taps)) & 1);
        reg = ((reg << 1) | (v & 1)) & mask;
        return u;
    }
};

}  // namespace

EncodeTrace encode(const std::vector<uint8_t>& message, const CodeConfig& cfg) {
    cfg.validate();
    if (message.size() != cfg.payload_len())
        throw std::invalid_argument("message length mismatch");
    uint32_t n = cfg.n();
    std::vector<uint8_t> info_bits(message);
    if (cfg.pre == Pretransform::Crc) {
        uint32_t rem = crc_compute(message, cfg.crc_poly, cfg.crc_len);
        for (int t = 0; t < cfg.crc_len; ++t)
            info_bits.push_back((rem >> (cfg.crc_len - 1 - t)) & 1u);
    }
    EncodeTrace tr;
    tr.v.assign(n, 0);
    for (size_t t = 0; t < cfg.info_set.size(); ++t) tr.v[cfg.info_set[t]] = info_bits[t];
    if (cfg.pre == Pretransform::Pac) {
        ConvState conv;
        conv.init(cfg.pac_p);
        tr.u.resize(n);
        for (uint32_t i = 0; i < n; ++i) tr.u[i] = conv.step(tr.v[i]);
    } else {
        tr.u = tr.v;
    }
    tr.codeword = tr.u;
    polar_transform(tr.codeword);
    return tr;
}

namespace {

inline double f_minsum(double a, double b) {
    double s = std::copysign(1.0, a) * std::copysign(1.0, b);
    return s * std::min(std::fabs(a), std::fabs(b));
}

inline double f_exact(double a, double b) {
    return f_minsum(a, b) + std::log1p(std::exp(-std::fabs(a + b))) -
           std::log1p(std::exp(-std::fabs(a - b)));
}

inline double g_update(double a, double b, uint8_t u) {
    return u ? b - a : b + a;
}

// ln(1 + e^{-x}) with x = agreement between llr and the decision
inline double penalty_exact(double llr, uint8_t u) {
    double x = u ? -llr : llr;
    if (x < -30.0) return -x;
    return std::log1p(std::exp(-x));
}

inline double penalty_minsum(double llr, uint8_t u) {
    bool disagree = u ? (llr >= 0.0) : (llr < 0.0);
    return disagree ? std::fabs(llr) : 0.0;
}

struct Path {
    std::vector<double> llr;   // (m+1) rows of n
    std::vector<uint8_t> bits;
    std::vector<uint8_t> u_hat;
    std::vector<uint8_t> v_hat;
    double pm = 0.0;
    ConvState conv;
    bool true_prefix = true;
};

struct Decoder {
    const CodeConfig& cfg;
    const DecodeOptions& opt;
    uint32_t n;
    int m;
    std::vector<uint8_t> frozen;
    std::vector<Path> paths;

    Decoder(const CodeConfig& c, const DecodeOptions& o)
        : cfg(c), opt(o), n(c.n()), m(c.m) {
        frozen.assign(n, 1);
        for (uint32_t i : cfg.info_set) frozen[i] = 0;
    }

    double f(double a, double b) const {
        return opt.exact_llr ? f_exact(a, b) : f_minsum(a, b);
    }
    double penalty(double llr, uint8_t u) const {
        return opt.exact_llr ? penalty_exact(llr, u) : penalty_minsum(llr, u);
    }

    void calc_llr(Path& p, int d, uint32_t node) {
        if (d == 0) return;
        if ((node & 1u) == 0) calc_llr(p, d - 1, node >> 1);
        uint32_t len = n >> d;
        uint32_t off = node * len;
        uint32_t poff = (node >> 1) * (2 * len);
        const double* up = &p.llr[(size_t)(d - 1) * n + poff];
        double* row = &p.llr[(size_t)d * n + off];
        if ((node & 1u) == 0) {
            for (uint32_t j = 0; j < len; ++j) row[j] = f(up[j], up[j + len]);
        } else {
            const uint8_t* left = &p.bits[(size_t)d * n + off - len];
            for (uint32_t j = 0; j < len; ++j)
                row[j] = g_update(up[j], up[j + len], left[j]);
        }
    }

    void update_bits(Path& p, int d, uint32_t node) {
        while (d > 0 && (node & 1u)) {
            uint32_t len = n >> d;
            uint32_t off = node * len;
            uint32_t poff = (node >> 1) * (2 * len);
            uint8_t* row = &p.bits[(size_t)d * n + off];
            uint8_t* left = &p.bits[(size_t)d * n + off - len];
            uint8_t* up = &p.bits[(size_t)(d - 1) * n + poff];
            for (uint32_t j = 0; j < len; ++j) {
                up[j] = left[j] ^ row[j];
                up[j + len] = row[j];
            }
            --d;
            node >>= 1;
        }
    }

    void set_leaf(Path& p, uint32_t phi, uint8_t v, uint8_t true_v) {
        uint8_t u = (cfg.pre == Pretransform::Pac) ? p.conv.step(v) : v;
        p.pm += penalty(p.llr[(size_t)m * n + phi], u);
        p.bits[(size_t)m * n + phi] = u;
        p.u_hat[phi] = u;
        p.v_hat[phi] = v;
        if (opt.genie && v != true_v) p.true_prefix = false;
        update_bits(p, m, phi);
    }

    DecoderOutcome run(const std::vector<double>& llr_in) {
        uint32_t L = std::max<uint32_t>(1, opt.list_size);
        Path init;
        init.llr.assign((size_t)(m + 1) * n, 0.0);
        init.bits.assign((size_t)(m + 1) * n, 0);
        init.u_hat.assign(n, 0);
        init.v_hat.assign(n, 0);
        init.conv.init(cfg.pac_p);
        std::copy(llr_in.begin(), llr_in.end(), init.llr.begin());
        paths.clear();
        paths.push_back(std::move(init));

        int first_error = -1;
        for (uint32_t phi = 0; phi < n; ++phi) {
            for (Path& p : paths) calc_llr(p, m, phi);
            uint8_t true_v = opt.genie ? opt.genie->v[phi] : 0;
            if (frozen[phi]) {
                for (Path& p : paths) set_leaf(p, phi, 0, true_v);
                continue;
            }
            if (paths.size() * 2 <= L) {
                size_t cur = paths.size();
                for (size_t t = 0; t < cur; ++t) {
                    paths.push_back(paths[t]);  // fork: copy takes v = 1
                    set_leaf(paths[t], phi, 0, true_v);
                    set_leaf(paths.back(), phi, 1, true_v);
                }
            } else {
                struct Cand {
                    double pm;
                    uint32_t path;
                    uint8_t v;
                };
                std::vector<Cand> cands;
                cands.reserve(paths.size() * 2);
                for (uint32_t t = 0; t < paths.size(); ++t) {
                    double leaf = paths[t].llr[(size_t)m * n + phi];
                    uint8_t u0 = (cfg.pre == Pretransform::Pac)
                                     ? (uint8_t)((0 ^ std::popcount(paths[t].conv.reg &
                                                                    paths[t].conv.taps)) & 1)
                                     : 0;
                    cands.push_back({paths[t].pm + penalty(leaf, u0), t, 0});
                    cands.push_back({paths[t].pm + penalty(leaf, (uint8_t)(u0 ^ 1)), t, 1});
                }
                std::stable_sort(cands.begin(), cands.end(),
                                 [](const Cand& a, const Cand& b) { return a.pm < b.pm; });
                cands.resize(L);
                std::vector<uint8_t> uses(paths.size(), 0);
                for (const Cand& c : cands) ++uses[c.path];
                std::vector<Path> next;
                next.reserve(L);
                for (const Cand& c : cands) {
                    if (--uses[c.path] > 0)
                        next.push_back(paths[c.path]);
                    else
                        next.push_back(std::move(paths[c.path]));
                    set_leaf(next.back(), phi, c.v, true_v);
                }
                paths.swap(next);
            }
            if (opt.genie && L == 1 && first_error < 0 && !paths[0].true_prefix)
                first_error = (int)phi;
        }

        // winner selection: best metric, CRC configs prefer a passing path
        std::vector<uint32_t> order(paths.size());
        for (uint32_t t = 0; t < order.size(); ++t) order[t] = t;
        std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
            return paths[a].pm < paths[b].pm;
        });
        uint32_t win = order[0];
        if (cfg.pre == Pretransform::Crc) {
            for (uint32_t t : order) {
                std::vector<uint8_t> word;
                word.reserve(cfg.k());
                for (uint32_t i : cfg.info_set) word.push_back(paths[t].v_hat[i]);
                if (crc_check(word, cfg.crc_poly, cfg.crc_len)) {
                    win = t;
                    break;
                }
            }
        }

        DecoderOutcome out;
        out.first_error = first_error;
        out.winner_metric = paths[win].pm;
        for (uint32_t t = 0; t < cfg.payload_len(); ++t)
            out.message.push_back(paths[win].v_hat[cfg.info_set[t]]);
        out.codeword = paths[win].u_hat;
        polar_transform(out.codeword);
        if (opt.genie) {
            for (const Path& p : paths) {
                if (p.true_prefix) {
                    out.true_path_survived = true;
                    out.true_metric = p.pm;
                    break;
                }
            }
            if (paths[win].true_prefix)
                out.event = EventClass::Correct;
            else if (out.true_path_survived)
                out.event = EventClass::MlLike;
            else
                out.event = EventClass::Prune;
        }
        return out;
    }
};

}  // namespace

DecoderOutcome scl_decode(const std::vector<double>& llr, const CodeConfig& cfg,
                          const DecodeOptions& opt) {
    cfg.validate();
    if (llr.size() != cfg.n()) throw std::invalid_argument("LLR length mismatch");
    Decoder dec(cfg, opt);
    return dec.run(llr);
}

DecoderOutcome sc_decode(const std::vector<double>& llr, const CodeConfig& cfg,
                         bool exact_llr, const EncodeTrace* genie) {
    DecodeOptions opt;
    opt.list_size = 1;
    opt.exact_llr = exact_llr;
    opt.genie = genie;
    return scl_decode(llr, cfg, opt);
}

}  // namespace pf
