#include "wlanlab/ru_model.hpp"

#include <algorithm>
#include <sstream>

namespace wlanlab {

Bandwidth bandwidth_from_mhz(int mhz)
{
    switch (mhz) {
    case 20:
        return Bandwidth::MHz20;
    case 40:
        return Bandwidth::MHz40;
    case 80:
        return Bandwidth::MHz80;
    case 160:
        return Bandwidth::MHz160;
    default:
        throw ConfigError("unsupported bandwidth: " + std::to_string(mhz) + " MHz");
    }
}

int sru_count(Bandwidth bw)
{
    switch (bw) {
    case Bandwidth::MHz20:
        return 9;
    case Bandwidth::MHz40:
        return 18;
    case Bandwidth::MHz80:
        return 37;
    case Bandwidth::MHz160:
        return 74;
    }
    throw ConfigError("unsupported bandwidth");
}

int level_count(Bandwidth bw, LayoutKind kind)
{
    if (kind == LayoutKind::Binary) {
        switch (bw) {
        case Bandwidth::MHz20:
            return 4;
        case Bandwidth::MHz40:
            return 5;
        case Bandwidth::MHz80:
            return 6;
        case Bandwidth::MHz160:
            return 7;
        }
    }
    switch (bw) {
    case Bandwidth::MHz20:
        return 4; // 242 / 106 / 52 / 26 rows
    case Bandwidth::MHz40:
        return 5; // 484 row on top of two mirrored 20 MHz halves
    default:
        throw ConfigError("Standard layout is only constructed for 20 and 40 MHz");
    }
}

std::string RuNode::to_string() const
{
    std::ostringstream os;
    os << "RU(" << level << "," << index << ")";
    return os.str();
}

const RuNode& RuLayout::node(int level, int index) const
{
    if (level < 0 || level >= level_count())
        throw DomainError("RU level out of range: " + std::to_string(level));
    const auto& row = rows_[static_cast<std::size_t>(level)];
    if (index < 0 || index >= static_cast<int>(row.size()))
        throw DomainError("RU index out of range: " + std::to_string(index));
    return row[static_cast<std::size_t>(index)];
}

const RuNode* RuLayout::find_span(int sru_first, int sru_last) const
{
    for (const auto& row : rows_) {
        for (const auto& n : row) {
            if (n.sru_first == sru_first && n.sru_last == sru_last)
                return &n;
        }
    }
    return nullptr;
}

RuLayout RuLayout::binary(Bandwidth bw)
{
    RuLayout layout;
    layout.kind_ = LayoutKind::Binary;
    layout.bandwidth_ = bw;
    const int levels = wlanlab::level_count(bw, LayoutKind::Binary);
    const int leaves = 1 << (levels - 1);
    for (int l = 0; l < levels; ++l) {
        std::vector<RuNode> row;
        const int width = leaves >> l; // SRUs per node at this level
        for (int i = 0; i < (1 << l); ++i) {
            RuNode n;
            n.level = l;
            n.index = i;
            n.sru_first = i * width + 1;
            n.sru_last = (i + 1) * width;
            n.tones = 26 * width;
            row.push_back(n);
        }
        layout.rows_.push_back(std::move(row));
    }
    return layout;
}

namespace {

// SRU spans of one 20 MHz half of the Standard formation, as (first, last,
// tones) offsets into a 9-SRU line.  The 52- and 106-tone rows keep the
// center SRU 5 as a 26-tone orphan.
struct Span {
    int first;
    int last;
    int tones;
};

const std::vector<std::vector<Span>> kStandardHalfRows = {
    {{1, 9, 242}},
    {{1, 4, 106}, {5, 5, 26}, {6, 9, 106}},
    {{1, 2, 52}, {3, 4, 52}, {5, 5, 26}, {6, 7, 52}, {8, 9, 52}},
    {{1, 1, 26}, {2, 2, 26}, {3, 3, 26}, {4, 4, 26}, {5, 5, 26}, {6, 6, 26}, {7, 7, 26},
     {8, 8, 26}, {9, 9, 26}},
};

} // namespace

RuLayout RuLayout::standard(Bandwidth bw)
{
    if (bw != Bandwidth::MHz20 && bw != Bandwidth::MHz40)
        throw ConfigError("Standard layout is only constructed for 20 and 40 MHz");
    RuLayout layout;
    layout.kind_ = LayoutKind::Standard;
    layout.bandwidth_ = bw;

    const int halves = (bw == Bandwidth::MHz40) ? 2 : 1;
    if (halves == 2) {
        // Whole-channel 484-tone unit.
        layout.rows_.push_back({RuNode{0, 0, 484, 1, 18}});
    }
    const int base_level = (halves == 2) ? 1 : 0;
    for (std::size_t r = 0; r < kStandardHalfRows.size(); ++r) {
        std::vector<RuNode> row;
        for (int h = 0; h < halves; ++h) {
            for (const auto& s : kStandardHalfRows[r]) {
                RuNode n;
                n.level = base_level + static_cast<int>(r);
                n.index = static_cast<int>(row.size());
                n.sru_first = h * 9 + s.first;
                n.sru_last = h * 9 + s.last;
                n.tones = s.tones;
                row.push_back(n);
            }
        }
        layout.rows_.push_back(std::move(row));
    }
    return layout;
}

std::pair<RuNode, RuNode> RuLayout::split(const RuNode& ru) const
{
    if (ru.level >= level_count() - 1)
        throw ConfigError("SplitNotAllowed: " + ru.to_string() + " is a leaf-level RU");
    if (kind_ == LayoutKind::Binary) {
        return {node(ru.level + 1, 2 * ru.index), node(ru.level + 1, 2 * ru.index + 1)};
    }
    // Standard: the children are the next-row nodes covering this span; a
    // split is valid only when there are exactly two of them.
    const auto& next = rows_[static_cast<std::size_t>(ru.level) + 1];
    std::vector<const RuNode*> children;
    for (const auto& n : next) {
        if (n.sru_first >= ru.sru_first && n.sru_last <= ru.sru_last)
            children.push_back(&n);
    }
    if (children.size() != 2)
        throw ConfigError("SplitNotAllowed: " + ru.to_string() + " has " +
                          std::to_string(children.size()) + " children");
    return {*children[0], *children[1]};
}

bool RuLayout::can_merge(const std::set<int>& srus) const
{
    if (srus.empty())
        return false;
    const int line = sru_line_length();
    for (int s : srus) {
        if (s < 1 || s > line)
            throw DomainError("InvalidIndex: SRU " + std::to_string(s) + " outside [1, " +
                              std::to_string(line) + "]");
    }
    const int first = *srus.begin();
    const int last = *srus.rbegin();
    if (last - first + 1 != static_cast<int>(srus.size()))
        return false; // not contiguous
    return find_span(first, last) != nullptr;
}

std::string RuLayout::dump() const
{
    std::ostringstream os;
    os << (kind_ == LayoutKind::Standard ? "standard" : "binary") << " "
       << static_cast<int>(bandwidth_) << "MHz srus=" << sru_line_length() << "\n";
    for (const auto& row : rows_) {
        os << "l=" << row.front().level << ":";
        for (const auto& n : row)
            os << " [" << n.sru_first << "-" << n.sru_last << ":" << n.tones << "t]";
        os << "\n";
    }
    return os.str();
}

namespace {

void enumerate_from(const RuLayout& layout, int pos, std::vector<RuNode>& prefix,
                    std::vector<std::vector<RuNode>>& out, std::size_t max_count)
{
    if (max_count != 0 && out.size() >= max_count)
        return;
    const int line = layout.sru_line_length();
    if (pos > line) {
        out.push_back(prefix);
        return;
    }
    // Widest node first, so the whole-channel partition is yielded first.
    // The Standard rows repeat the center orphan span at several levels;
    // visit each span once.
    int last_end = -1;
    for (const auto& row : layout.rows()) {
        for (const auto& n : row) {
            if (n.sru_first == pos && n.sru_last <= line && n.sru_last != last_end) {
                last_end = n.sru_last;
                prefix.push_back(n);
                enumerate_from(layout, n.sru_last + 1, prefix, out, max_count);
                prefix.pop_back();
            }
        }
    }
}

} // namespace

std::vector<std::vector<RuNode>> enumerate_valid_partitions(const RuLayout& layout,
                                                            std::size_t max_count)
{
    std::vector<std::vector<RuNode>> out;
    std::vector<RuNode> prefix;
    enumerate_from(layout, 1, prefix, out, max_count);
    return out;
}

} // namespace wlanlab
