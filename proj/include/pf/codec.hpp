#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace pf {

// In-place u <- u * G_2^{tensor m} over GF(2). Involutive.
void polar_transform(std::vector<uint8_t>& u);

enum class Pretransform { None, Crc, Pac };

struct CodeConfig {
    int m = 7;
    std::vector<uint32_t> info_set;  // sorted information indices, size K
    Pretransform pre = Pretransform::None;
    uint32_t crc_poly = 0xC06;       // non-leading generator coefficients
    int crc_len = 12;
    std::vector<uint8_t> pac_p = {1, 0, 1, 1, 0, 1, 1};  // monic, msb first

    uint32_t n() const { return 1u << m; }
    uint32_t k() const { return (uint32_t)info_set.size(); }
    // message payload length seen by the caller
    uint32_t payload_len() const {
        return pre == Pretransform::Crc ? k() - (uint32_t)crc_len : k();
    }
    void validate() const;
};

// Remainder of payload * x^len modulo the monic generator given by `poly`
// (bit-serial long division, zero initial state, no reflection).
uint32_t crc_compute(const std::vector<uint8_t>& payload, uint32_t poly, int len);
bool crc_check(const std::vector<uint8_t>& word, uint32_t poly, int len);

struct EncodeTrace {
    std::vector<uint8_t> u;  // transform input (post pretransform)
    std::vector<uint8_t> v;  // bits placed on the information set (PAC: pre-conv)
    std::vector<uint8_t> codeword;
};

EncodeTrace encode(const std::vector<uint8_t>& message, const CodeConfig& cfg);

enum class EventClass { Correct, Prune, MlLike, Error };

struct DecoderOutcome {
    std::vector<uint8_t> message;
    std::vector<uint8_t> codeword;
    EventClass event = EventClass::Correct;
    int first_error = -1;      // SC only: first leaf where the decision flips
    double winner_metric = 0.0;
    double true_metric = 0.0;  // genie mode, valid unless the true path was pruned
    bool true_path_survived = false;
};

struct DecodeOptions {
    uint32_t list_size = 1;
    bool exact_llr = false;  // exact boxplus / metric instead of min-sum
    // genie reference: the encoder's v bits on the information set
    // (message for None/Crc, pre-convolution bits for Pac)
    const EncodeTrace* genie = nullptr;
};

DecoderOutcome scl_decode(const std::vector<double>& llr, const CodeConfig& cfg,
                          const DecodeOptions& opt);

// SCL with L = 1.
DecoderOutcome sc_decode(const std::vector<double>& llr, const CodeConfig& cfg,
                         bool exact_llr = false,
                         const EncodeTrace* genie = nullptr);

}  // namespace pf
