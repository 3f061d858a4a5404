#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "wlanlab/errors.hpp"
#include "wlanlab/ru_model.hpp"

using namespace wlanlab;

TEST_CASE("sru_count per bandwidth")
{
    CHECK(sru_count(Bandwidth::MHz20) == 9);
    CHECK(sru_count(Bandwidth::MHz40) == 18);
    CHECK(sru_count(Bandwidth::MHz80) == 37);
    CHECK(sru_count(Bandwidth::MHz160) == 74);
}

TEST_CASE("level_count binary tree depths")
{
    CHECK(level_count(Bandwidth::MHz20, LayoutKind::Binary) == 4);
    CHECK(level_count(Bandwidth::MHz40, LayoutKind::Binary) == 5);
    CHECK(level_count(Bandwidth::MHz80, LayoutKind::Binary) == 6);
    CHECK(level_count(Bandwidth::MHz160, LayoutKind::Binary) == 7);
}

TEST_CASE("binary split produces the canonical children")
{
    const RuLayout layout = RuLayout::binary(Bandwidth::MHz20);

    const auto [a, b] = layout.split(layout.node(1, 0));
    CHECK(a.level == 2);
    CHECK(a.index == 0);
    CHECK(b.level == 2);
    CHECK(b.index == 1);
    CHECK(a.tones + b.tones == layout.node(1, 0).tones);

    const auto [c, d] = layout.split(layout.node(2, 2));
    CHECK(c.level == 3);
    CHECK(c.index == 4);
    CHECK(d.level == 3);
    CHECK(d.index == 5);

    // Leaf units have no children.
    CHECK_THROWS_AS(layout.split(layout.node(3, 0)), ConfigError);
}

TEST_CASE("binary split round-trips through find_span")
{
    for (Bandwidth bw : {Bandwidth::MHz20, Bandwidth::MHz40}) {
        const RuLayout layout = RuLayout::binary(bw);
        for (int l = 0; l + 1 < layout.level_count(); ++l) {
            for (int i = 0; i < (1 << l); ++i) {
                const RuNode& parent = layout.node(l, i);
                const auto [left, right] = layout.split(parent);
                const RuNode* merged = layout.find_span(left.sru_first, right.sru_last);
                REQUIRE(merged != nullptr);
                CHECK(merged->level == parent.level);
                CHECK(merged->index == parent.index);
            }
        }
    }
}

TEST_CASE("merge validity on the 40 MHz standard layout")
{
    const RuLayout layout = RuLayout::standard(Bandwidth::MHz40);
    CHECK(layout.can_merge({15, 16}));
    CHECK_FALSE(layout.can_merge({14, 15}));
    CHECK_FALSE(layout.can_merge({16, 17}));
    CHECK_THROWS_AS(layout.can_merge({0, 1}), DomainError);
    CHECK_THROWS_AS(layout.can_merge({18, 19}), DomainError);
}

TEST_CASE("40 MHz standard 52-tone row pairs and orphans")
{
    const RuLayout layout = RuLayout::standard(Bandwidth::MHz40);
    const std::set<std::pair<int, int>> expected_pairs = {
        {1, 2}, {3, 4}, {6, 7}, {8, 9}, {10, 11}, {12, 13}, {15, 16}, {17, 18}};
    for (const auto& [first, last] : expected_pairs)
        CHECK(layout.can_merge({first, last}));
    // Center SRUs 5 and 14 sit alone at the 52-tone row: no valid two-SRU
    // unit contains them.
    for (int orphan : {5, 14})
        for (int other = 1; other <= 18; ++other)
            if (other != orphan && (other == orphan - 1 || other == orphan + 1))
                CHECK_FALSE(layout.can_merge({orphan, other}));
}

TEST_CASE("no merge across the 20 MHz half boundary except the whole channel")
{
    const RuLayout layout = RuLayout::standard(Bandwidth::MHz40);
    for (int first = 2; first <= 9; ++first) {
        for (int last = 10; last <= 17; ++last) {
            std::set<int> span;
            for (int s = first; s <= last; ++s)
                span.insert(s);
            CHECK_FALSE(layout.can_merge(span));
        }
    }
    std::set<int> whole;
    for (int s = 1; s <= 18; ++s)
        whole.insert(s);
    CHECK(layout.can_merge(whole));
}

TEST_CASE("every SRU belongs to exactly one node per covering row")
{
    for (Bandwidth bw : {Bandwidth::MHz20, Bandwidth::MHz40}) {
        const RuLayout layout = RuLayout::standard(bw);
        for (const auto& row : layout.rows()) {
            std::map<int, int> cover;
            for (const RuNode& n : row)
                for (int s = n.sru_first; s <= n.sru_last; ++s)
                    cover[s] += 1;
            for (const auto& [sru, count] : cover)
                CHECK(count == 1);
        }
    }
}

TEST_CASE("partition totals")
{
    // Binary layout tones are abstract (26 per SRU), so tone totals are
    // exact; the Standard layout carries the real per-unit tone counts
    // (52/106/242/484), so its conserved quantity is the SRU width.
    for (Bandwidth bw : {Bandwidth::MHz20, Bandwidth::MHz40}) {
        const RuLayout binary = RuLayout::binary(bw);
        for (const auto& partition : enumerate_valid_partitions(binary, 500)) {
            int tones = 0;
            for (const RuNode& n : partition)
                tones += n.tones;
            CHECK(tones == 26 * binary.sru_line_length());
        }

        const RuLayout standard = RuLayout::standard(bw);
        for (const auto& partition : enumerate_valid_partitions(standard, 500)) {
            int width = 0;
            for (const RuNode& n : partition) {
                width += n.sru_width();
                CHECK(n.tones >= 26 * n.sru_width());
            }
            CHECK(width == standard.sru_line_length());
        }
    }
}

TEST_CASE("binary layout trivial partitions are enumerated")
{
    const RuLayout layout = RuLayout::binary(Bandwidth::MHz20);
    const auto partitions = enumerate_valid_partitions(layout);
    bool found_whole = false, found_leaves = false;
    for (const auto& partition : partitions) {
        if (partition.size() == 1 && partition[0].level == 0)
            found_whole = true;
        if (partition.size() == 8) {
            bool all_leaves = true;
            for (const RuNode& n : partition)
                all_leaves &= (n.level == 3);
            found_leaves |= all_leaves;
        }
    }
    CHECK(found_whole);
    CHECK(found_leaves);
}

namespace {

// Independent tiling counter over a hand-listed span table.  The 40 MHz
// standard rows, re-entered from scratch: (first, last) spans of every valid
// unit on the 18-SRU line.
int64_t count_tilings_oracle()
{
    const std::vector<std::pair<int, int>> spans = {
        {1, 18},                                     // 484 tones
        {1, 9},   {10, 18},                          // 242
        {1, 4},   {6, 9},   {10, 13}, {15, 18},      // 106
        {1, 2},   {3, 4},   {6, 7},   {8, 9},        // 52
        {10, 11}, {12, 13}, {15, 16}, {17, 18},
        {1, 1},   {2, 2},   {3, 3},   {4, 4},   {5, 5},   {6, 6},   // 26
        {7, 7},   {8, 8},   {9, 9},   {10, 10}, {11, 11}, {12, 12},
        {13, 13}, {14, 14}, {15, 15}, {16, 16}, {17, 17}, {18, 18},
    };
    // ways[pos] = number of tilings of [pos, 18].
    std::vector<int64_t> ways(20, 0);
    ways[19] = 1;
    for (int pos = 18; pos >= 1; --pos)
        for (const auto& [first, last] : spans)
            if (first == pos)
                ways[pos] += ways[last + 1];
    return ways[1];
}

} // namespace

TEST_CASE("40 MHz standard partition count matches the recursive oracle")
{
    const RuLayout layout = RuLayout::standard(Bandwidth::MHz40);
    const auto partitions = enumerate_valid_partitions(layout);
    CHECK(static_cast<int64_t>(partitions.size()) == count_tilings_oracle());

    // And each enumerated partition is distinct.
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const auto& partition : partitions) {
        std::vector<std::pair<int, int>> key;
        for (const RuNode& n : partition)
            key.emplace_back(n.sru_first, n.sru_last);
        CHECK(seen.insert(key).second);
    }
}

TEST_CASE("standard layout for unsupported bandwidths is rejected")
{
    CHECK_THROWS_AS(RuLayout::standard(Bandwidth::MHz80), ConfigError);
    CHECK_THROWS_AS(RuLayout::standard(Bandwidth::MHz160), ConfigError);
}
