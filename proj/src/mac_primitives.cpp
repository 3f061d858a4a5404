#include "wlanlab/mac_primitives.hpp"

#include <algorithm>
#include <sstream>

namespace wlanlab {

const std::vector<FrameKindRow>& frame_kind_table()
{
    static const std::vector<FrameKindRow> table = {
        {0b00, 0b0000, {FrameType::Management, FrameSubtype::AssociationRequest}, "Association request"},
        {0b00, 0b0001, {FrameType::Management, FrameSubtype::AssociationResponse}, "Association response"},
        {0b00, 0b0010, {FrameType::Management, FrameSubtype::ReassociationRequest}, "Reassociation request"},
        {0b00, 0b0011, {FrameType::Management, FrameSubtype::ReassociationResponse}, "Reassociation response"},
        {0b00, 0b0100, {FrameType::Management, FrameSubtype::ProbeRequest}, "Probe request"},
        {0b00, 0b0101, {FrameType::Management, FrameSubtype::ProbeResponse}, "Probe response"},
        {0b00, 0b1000, {FrameType::Management, FrameSubtype::Beacon}, "Beacon"},
        {0b00, 0b1001, {FrameType::Management, FrameSubtype::Atim}, "Announcement traffic indication message (ATIM)"},
        {0b00, 0b1010, {FrameType::Management, FrameSubtype::Dissociation}, "Dissociation"},
        {0b00, 0b1011, {FrameType::Management, FrameSubtype::Authentication}, "Authentication"},
        {0b00, 0b1100, {FrameType::Management, FrameSubtype::Deauthentication}, "Deauthentication"},
        {0b01, 0b1010, {FrameType::Control, FrameSubtype::PsPoll}, "Power save - poll"},
        {0b01, 0b1011, {FrameType::Control, FrameSubtype::Rts}, "Request to send"},
        {0b01, 0b1100, {FrameType::Control, FrameSubtype::Cts}, "Clear to send"},
        {0b01, 0b1101, {FrameType::Control, FrameSubtype::Ack}, "Acknowledgement"},
        {0b01, 0b1110, {FrameType::Control, FrameSubtype::CfEnd}, "Contention-free (CF)-end"},
        {0b01, 0b1111, {FrameType::Control, FrameSubtype::CfEndCfAck}, "CF-end + CF-ack"},
        {0b10, 0b0000, {FrameType::Data, FrameSubtype::Data_}, "Data"},
        {0b10, 0b0001, {FrameType::Data, FrameSubtype::DataCfAck}, "Data + CF-Ack"},
        {0b10, 0b0010, {FrameType::Data, FrameSubtype::DataCfPoll}, "Data + CF-Poll"},
        {0b10, 0b0011, {FrameType::Data, FrameSubtype::DataCfAckCfPoll}, "Data + CF-Ack + CF-Poll"},
        {0b10, 0b0100, {FrameType::Data, FrameSubtype::NullFunction}, "Null function (no data)"},
        {0b10, 0b0101, {FrameType::Data, FrameSubtype::CfAckNoData}, "CF-Ack (no data)"},
        {0b10, 0b0110, {FrameType::Data, FrameSubtype::CfPollNoData}, "CF-Poll (no data)"},
        {0b10, 0b0111, {FrameType::Data, FrameSubtype::CfAckCfPollNoData}, "CF-Ack + CF-Poll (no data)"},
    };
    return table;
}

std::pair<uint8_t, uint8_t> encode_type_subtype(const FrameKind& kind)
{
    for (const auto& row : frame_kind_table()) {
        if (row.kind == kind)
            return {row.type_bits, row.subtype_bits};
    }
    throw DomainError("UnknownFrameKind: no table row for this (type, subtype)");
}

FrameKind decode_type_subtype(uint8_t type_bits, uint8_t subtype_bits)
{
    for (const auto& row : frame_kind_table()) {
        if (row.type_bits == type_bits && row.subtype_bits == subtype_bits)
            return row.kind;
    }
    std::ostringstream os;
    os << "UnknownFrameKind: type=" << int(type_bits) << " subtype=" << int(subtype_bits);
    throw DomainError(os.str());
}

namespace {

std::string to_bits(uint8_t v, int n)
{
    std::string s;
    for (int b = n - 1; b >= 0; --b)
        s += ((v >> b) & 1) ? '1' : '0';
    return s;
}

} // namespace

std::string frame_table_csv()
{
    std::ostringstream os;
    os << "type_bits,subtype_bits,name\n";
    for (const auto& row : frame_kind_table())
        os << to_bits(row.type_bits, 2) << "," << to_bits(row.subtype_bits, 4) << "," << row.name
           << "\n";
    return os.str();
}

int frame_octet_length(const MacFrameMeta& m)
{
    if (m.body_octets < 0 || m.body_octets > kMaxBodyOctets)
        throw DomainError("BodyTooLarge: frame body of " + std::to_string(m.body_octets) +
                          " octets exceeds " + std::to_string(kMaxBodyOctets));
    return kMacHeaderOctets + m.body_octets + kMacCrcOctets;
}

void TimingParams::validate() const
{
    if (sifs_us < 0 || ack_time_us < 0)
        throw ConfigError("negative duration in timing parameters");
    if (slot_us < 1)
        throw ConfigError("slot duration must be positive");
    if (w_min < 1)
        throw ConfigError("w_min must be >= 1");
    if (alpha < 0 || alpha > 30)
        throw ConfigError("alpha out of range");
    if (retry_limit < 0)
        throw ConfigError("retry_limit must be >= 0");
}

int64_t pifs(const TimingParams& t)
{
    return t.sifs_us + t.slot_us;
}

int64_t difs(const TimingParams& t)
{
    return t.sifs_us + 2 * t.slot_us;
}

int64_t eifs(const TimingParams& t)
{
    return t.sifs_us + difs(t) + t.ack_time_us;
}

int window(int stage, const TimingParams& t)
{
    const int s = std::min(stage, t.alpha);
    return (1 << s) * t.w_min;
}

int backoff_draw(const BackoffState& state, const TimingParams& t, Rng& rng)
{
    const uint64_t w = static_cast<uint64_t>(window(state.stage, t));
    return static_cast<int>(rng() % w);
}

BackoffState next_stage(const BackoffState& state, TxOutcome outcome, const TimingParams& t)
{
    BackoffState next = state;
    if (outcome == TxOutcome::Success) {
        next.stage = 0;
        next.retries = 0;
    } else {
        next.stage = std::min(state.stage + 1, t.alpha);
        next.retries = state.retries + 1;
    }
    next.counter = 0;
    return next;
}

bool frame_dropped(const BackoffState& state, const TimingParams& t)
{
    return state.retries > t.retry_limit;
}

} // namespace wlanlab
