#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wlanlab/errors.hpp"

namespace wlanlab {

enum class FrameType : uint8_t { Management = 0b00, Control = 0b01, Data = 0b10 };

enum class FrameSubtype {
    AssociationRequest,
    AssociationResponse,
    ReassociationRequest,
    ReassociationResponse,
    ProbeRequest,
    ProbeResponse,
    Beacon,
    Atim,
    Dissociation,
    Authentication,
    Deauthentication,
    PsPoll,
    Rts,
    Cts,
    Ack,
    CfEnd,
    CfEndCfAck,
    Data_,
    DataCfAck,
    DataCfPoll,
    DataCfAckCfPoll,
    NullFunction,
    CfAckNoData,
    CfPollNoData,
    CfAckCfPollNoData,
};

struct FrameKind {
    FrameType type;
    FrameSubtype subtype;
    bool operator==(const FrameKind& o) const { return type == o.type && subtype == o.subtype; }
};

struct FrameKindRow {
    uint8_t type_bits;    // 2 bits
    uint8_t subtype_bits; // 4 bits
    FrameKind kind;
    const char* name;
};

// The full frame type/subtype combination table.
const std::vector<FrameKindRow>& frame_kind_table();

// (type bits, subtype bits) for a kind; decode of an unlisted pair throws
// DomainError (UnknownFrameKind).
std::pair<uint8_t, uint8_t> encode_type_subtype(const FrameKind& kind);
FrameKind decode_type_subtype(uint8_t type_bits, uint8_t subtype_bits);

// CSV export (type_bits, subtype_bits, name), one row per table entry.
std::string frame_table_csv();

constexpr int kMacHeaderOctets = 30;
constexpr int kMacCrcOctets = 4;
constexpr int kMaxBodyOctets = 2312;

struct MacFrameMeta {
    FrameKind kind{FrameType::Data, FrameSubtype::Data_};
    int body_octets = 0;
    bool retry = false;
    uint32_t duration_id = 0;
};

// header + body + CRC; body over 2312 octets throws DomainError.
int frame_octet_length(const MacFrameMeta& m);

// All durations are integer microsecond ticks.
struct TimingParams {
    int64_t sifs_us = 16;
    int64_t slot_us = 9;
    int64_t ack_time_us = 44;
    int w_min = 32;
    int alpha = 5;     // number of backoff stages; W_max = 2^alpha * w_min
    int retry_limit = 7;

    void validate() const;
};

int64_t pifs(const TimingParams& t);
int64_t difs(const TimingParams& t);
int64_t eifs(const TimingParams& t);

// Contention window at a backoff stage: min(2^stage, 2^alpha) * w_min.
int window(int stage, const TimingParams& t);

struct BackoffState {
    int stage = 0;
    int counter = 0;
    int retries = 0; // consecutive failed attempts for the current frame
};

enum class TxOutcome { Success, Collision };

using Rng = std::mt19937_64;

// Uniform draw in [0, window(stage) - 1].  The generator output is mapped by
// modulo, which is bit-stable across platforms for mt19937_64.
int backoff_draw(const BackoffState& state, const TimingParams& t, Rng& rng);

// Success resets to stage 0; a collision advances the stage, saturating at
// alpha.  Retry-limit enforcement is the caller's: `retries` is maintained
// here, and frame_dropped() reports when the caller should drop and reset.
BackoffState next_stage(const BackoffState& state, TxOutcome outcome, const TimingParams& t);

bool frame_dropped(const BackoffState& state, const TimingParams& t);

} // namespace wlanlab
