#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wlanlab/errors.hpp"

namespace wlanlab {

enum class Bandwidth : int { MHz20 = 20, MHz40 = 40, MHz80 = 80, MHz160 = 160 };

Bandwidth bandwidth_from_mhz(int mhz);

// Number of 26-tone smallest resource units in a channel: 9/18/37/74.
int sru_count(Bandwidth bw);

enum class LayoutKind { Standard, Binary };

// One resource unit RU(l, i).  Levels are counted from the bottom: l = 0 is
// the single whole-channel unit.  The SRU span uses 1-based indices on the
// left-to-right SRU line.
struct RuNode {
    int level = 0;
    int index = 0;
    int tones = 26;
    int sru_first = 1; // inclusive
    int sru_last = 1;  // inclusive

    int sru_width() const { return sru_last - sru_first + 1; }
    bool operator==(const RuNode& o) const { return level == o.level && index == o.index; }
    std::string to_string() const;
};

// A per-bandwidth grid of valid resource units, one row per level.
//
// Two variants coexist.  The Standard layout follows the 802.11ax formation
// rules with the center 26-tone orphans in the 52/106-tone rows.  The Binary
// layout is a perfect binary tree over the whole bandwidth, where every unit
// above the leaf row splits into exactly two equal halves and leaf units
// carry 26 tones.
class RuLayout {
  public:
    static RuLayout standard(Bandwidth bw);
    static RuLayout binary(Bandwidth bw);

    LayoutKind kind() const { return kind_; }
    Bandwidth bandwidth() const { return bandwidth_; }
    int level_count() const { return static_cast<int>(rows_.size()); }
    // Length of this layout's SRU line (leaf row size).
    int sru_line_length() const { return static_cast<int>(rows_.back().size()); }
    const std::vector<std::vector<RuNode>>& rows() const { return rows_; }
    const RuNode& node(int level, int index) const;

    // The node spanning exactly [sru_first, sru_last], if one exists.
    const RuNode* find_span(int sru_first, int sru_last) const;

    // Children of `ru` in the next row up.  Throws ConfigError
    // (SplitNotAllowed) for leaf units or Standard-layout units that do not
    // decompose into exactly two nodes.
    std::pair<RuNode, RuNode> split(const RuNode& ru) const;

    // True iff the given SRU indices exactly span one valid unit of the
    // layout.  Out-of-range indices throw DomainError.
    bool can_merge(const std::set<int>& srus) const;

    // One row per level, node spans listed; for golden-file tests.
    std::string dump() const;

  private:
    RuLayout() = default;
    LayoutKind kind_ = LayoutKind::Binary;
    Bandwidth bandwidth_ = Bandwidth::MHz20;
    std::vector<std::vector<RuNode>> rows_; // rows_[l] is level l, widest first
};

int level_count(Bandwidth bw, LayoutKind kind);

// Partitions of the SRU line into valid units, widest-first at each
// position, deterministically ordered.  Stops after max_count partitions
// (0 = unlimited).
std::vector<std::vector<RuNode>> enumerate_valid_partitions(const RuLayout& layout,
                                                            std::size_t max_count = 0);

} // namespace wlanlab
