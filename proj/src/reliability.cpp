#include "pf/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pf {

static constexpr double kInf = std::numeric_limits<double>::infinity();

ChannelModel ChannelModel::bec(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::domain_error("eps outside [0,1]");
    ChannelModel m;
    m.kind = ChannelKind::BEC;
    m.eps = eps;
    return m;
}

ChannelModel ChannelModel::awgn(double ebn0_db, double rate) {
    if (!(rate > 0.0 && rate <= 1.0)) throw std::domain_error("rate outside (0,1]");
    ChannelModel m;
    m.kind = ChannelKind::BiAWGN;
    m.ebn0_db = ebn0_db;
    m.rate = rate;
    return m;
}

double ChannelModel::sigma2() const {
    return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

ReliabilityProfile bec_bhattacharyya(int m, double eps) {
    if (!(m >= 1 && m <= 30)) throw std::domain_error("m outside [1,30]");
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::domain_error("eps outside [0,1]");
    // log Z recursion: lz+ = 2 lz, lz- = lz + ln2 + log1p(-exp(lz)/2)
    std::vector<double> cur{std::log(eps)};
    std::vector<double> nxt;
    for (int level = 0; level < m; ++level) {
        nxt.assign(cur.size() * 2, 0.0);
        for (size_t j = 0; j < cur.size(); ++j) {
            double lz = cur[j];
            nxt[2 * j] = (lz == -kInf) ? -kInf
                                       : lz + M_LN2 + std::log1p(-0.5 * std::exp(lz));
            nxt[2 * j + 1] = 2.0 * lz;
        }
        cur.swap(nxt);
    }
    ReliabilityProfile prof;
    prof.kind = Metric::Bhattacharyya;
    prof.channel = ChannelModel::bec(eps);
    prof.log_values = std::move(cur);
    prof.values.resize(prof.log_values.size());
    for (size_t i = 0; i < prof.values.size(); ++i)
        prof.values[i] = std::exp(prof.log_values[i]);
    return prof;
}

double ga_phi(double x) {
    if (x == kInf) return 0.0;
    return std::exp(-0.4527 * std::pow(x, 0.86) + 0.0218);
}

double ga_phi_inv(double y) {
    if (y <= 0.0) return kInf;
    return std::pow((0.0218 - std::log(y)) / 0.4527, 1.0 / 0.86);
}

// Ceiling on the tracked mean. Beyond this point the surrogate has no
// resolution left in double precision, so check-node inputs are clamped and
// the channels above it form deliberate ties (resolved by index order in
// select_best). The value is calibrated so that large-blocklength designs
// are stable against rounding noise in the saturated region.
static constexpr double kGaMeanCeiling = 103.41;

// Check-node mean update: mu -> phi_inv(1 - (1 - phi(mu))^2).
static double ga_minus(double mu) {
    if (!(mu < kGaMeanCeiling)) mu = kGaMeanCeiling;
    double phi = ga_phi(mu);
    double w = 2.0 * phi - phi * phi;
    if (!(w > 0.0)) return kGaMeanCeiling;
    return ga_phi_inv(w);
}

double qfunc(double x) { return 0.5 * std::erfc(x / M_SQRT2); }

double log_qfunc(double x) {
    if (x == kInf) return -kInf;
    if (x < 30.0) {
        double q = qfunc(x);
        if (q > 0.0) return std::log(q);
    }
    // leading asymptotic term, relative error < 1/x^2 in this range
    return -0.5 * x * x - std::log(x) - 0.5 * std::log(2.0 * M_PI);
}

ReliabilityProfile ga_awgn(int m, double ebn0_db, double rate) {
    if (!(m >= 1 && m <= 30)) throw std::domain_error("m outside [1,30]");
    if (!(rate > 0.0 && rate <= 1.0)) throw std::domain_error("rate outside (0,1]");
    std::vector<double> cur{4.0 * rate * std::pow(10.0, ebn0_db / 10.0)};
    std::vector<double> nxt;
    for (int level = 0; level < m; ++level) {
        nxt.assign(cur.size() * 2, 0.0);
        for (size_t j = 0; j < cur.size(); ++j) {
            double mu = cur[j];
            double lo = ga_minus(mu);
            if (std::isnan(lo)) {
                std::ostringstream os;
                os << "GA produced NaN at level " << level << " node " << j;
                throw std::runtime_error(os.str());
            }
            nxt[2 * j] = lo;
            nxt[2 * j + 1] = 2.0 * mu;
        }
        cur.swap(nxt);
    }
    ReliabilityProfile prof;
    prof.kind = Metric::ScErrorProb;
    prof.channel = ChannelModel::awgn(ebn0_db, rate);
    prof.mean_llr = std::move(cur);
    size_t n = prof.mean_llr.size();
    prof.values.resize(n);
    prof.log_values.resize(n);
    for (size_t i = 0; i < n; ++i) {
        double arg = std::sqrt(prof.mean_llr[i] / 2.0);
        prof.log_values[i] = log_qfunc(arg);
        prof.values[i] = std::exp(prof.log_values[i]);
    }
    return prof;
}

double channel_bhattacharyya(const ChannelModel& model) {
    if (model.kind == ChannelKind::BEC) return model.eps;
    return std::exp(-model.rate * std::pow(10.0, model.ebn0_db / 10.0));
}

double pairwise_error(uint64_t w, const ChannelModel& model, PairwiseMode mode) {
    if (w < 1) throw std::domain_error("pairwise weight must be >= 1");
    if (mode == PairwiseMode::Bhattacharyya)
        return std::pow(channel_bhattacharyya(model), (double)w);
    if (model.kind != ChannelKind::BiAWGN)
        throw std::invalid_argument("qfunc pairwise mode needs a BiAWGN model");
    double snr = model.rate * std::pow(10.0, model.ebn0_db / 10.0);
    return qfunc(std::sqrt(2.0 * (double)w * snr));
}

std::vector<uint32_t> select_best(const ReliabilityProfile& prof, uint32_t k) {
    uint32_t n = (uint32_t)prof.log_values.size();
    if (k > n) throw std::domain_error("K exceeds blocklength");
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    const auto& lv = prof.log_values;
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        if (lv[a] != lv[b]) return lv[a] < lv[b];
        return a < b;
    });
    order.resize(k);
    std::sort(order.begin(), order.end());
    return order;
}

std::string channel_to_string(const ChannelModel& model) {
    std::ostringstream os;
    if (model.kind == ChannelKind::BEC)
        os << "bec(eps=" << model.eps << ")";
    else
        os << "awgn(ebn0_db=" << model.ebn0_db << ",rate=" << model.rate << ")";
    return os.str();
}

}  // namespace pf
