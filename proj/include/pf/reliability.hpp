#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pf {

enum class ChannelKind { BEC, BiAWGN };

struct ChannelModel {
    ChannelKind kind = ChannelKind::BiAWGN;
    double eps = 0.5;       // BEC erasure probability
    double ebn0_db = 4.0;   // BiAWGN design Eb/N0
    double rate = 0.5;      // K/N, enters sigma^2 = 1/(2 R 10^{dB/10})

    static ChannelModel bec(double eps);
    static ChannelModel awgn(double ebn0_db, double rate);
    double sigma2() const;  // BiAWGN noise variance
};

enum class Metric { Bhattacharyya, ScErrorProb, MeanLlr };

// Per bit-channel quality figures. `values` holds the error metric
// (Z_i or P_i^SC); `log_values` holds its natural log, kept separately so
// that ranking still resolves channels whose linear value underflows.
struct ReliabilityProfile {
    Metric kind = Metric::Bhattacharyya;
    std::vector<double> values;
    std::vector<double> log_values;
    std::vector<double> mean_llr;  // GA profiles only, else empty
    ChannelModel channel;
};

// Exact BEC Bhattacharyya recursion (Z- = 2Z - Z^2, Z+ = Z^2), evaluated
// in the log domain, plus transform taken on set index bits from the most
// significant bit down.
ReliabilityProfile bec_bhattacharyya(int m, double eps);

// Gaussian approximation of the BPSK-AWGN bit channels: mean-LLR recursion
// mu+ = 2 mu, mu- = phi_inv(1 - (1 - phi(mu))^2), root mu = 4 R 10^{dB/10}.
// P_i^SC = Q(sqrt(mu_i / 2)). Check-node inputs are clamped at a ceiling
// beyond which the surrogate has no double-precision resolution.
ReliabilityProfile ga_awgn(int m, double ebn0_db, double rate);

// Scalar channel Bhattacharyya parameter: eps for BEC,
// exp(-R 10^{dB/10}) for BiAWGN.
double channel_bhattacharyya(const ChannelModel& model);

enum class PairwiseMode { Bhattacharyya, Qfunc };

// Pairwise error probability against a weight-w competitor.
double pairwise_error(uint64_t w, const ChannelModel& model, PairwiseMode mode);

// GA primitives, exposed for validation.
double ga_phi(double x);       // E[tanh(L/2)] surrogate, exp(-0.4527 x^0.86 + 0.0218)
double ga_phi_inv(double y);   // closed-form inverse
double qfunc(double x);        // Gaussian tail
double log_qfunc(double x);    // log of the tail, stable for large x

// Indices of the K most reliable channels (smallest log metric, ties broken
// toward the smaller index), returned sorted ascending.
std::vector<uint32_t> select_best(const ReliabilityProfile& prof, uint32_t k);

std::string channel_to_string(const ChannelModel& model);

}  // namespace pf
