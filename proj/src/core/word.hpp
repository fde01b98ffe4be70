#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fmz {

/// One link of the chain: an up, flat or down step.
enum class Step : uint8_t { U = 0, F = 1, D = 2 };

char step_char(Step s);
Step step_from_char(char c);

/// A length-L word over {U, F, D}, one symbol per link. Link 1 is steps[0]
/// and is the most significant digit of the base-3 code (U=0, F=1, D=2).
class ConfigWord {
public:
    explicit ConfigWord(std::vector<Step> steps);
    static ConfigWord from_code(int length, int64_t code);
    static ConfigWord from_string(const std::string& text);
    static ConfigWord all_flat(int length);

    int length() const { return static_cast<int>(steps_.size()); }
    Step step(int link) const { return steps_[link - 1]; }  // 1-based link index
    const std::vector<Step>& steps() const { return steps_; }
    int64_t code() const;
    std::string str() const;

    /// Cyclic rotation: link j of the result is link j+shift of the input.
    ConfigWord translated(int shift) const;
    /// U and D exchanged at every link, F fixed.
    ConfigWord swapped_ud() const;

    bool operator==(const ConfigWord& o) const { return steps_ == o.steps_; }
    bool operator<(const ConfigWord& o) const;

private:
    std::vector<Step> steps_;
};

/// Conserved quantum numbers: counts of up and down steps.
struct SectorLabel {
    int u = 0;
    int d = 0;
    int length = 0;

    int f() const { return length - u - d; }
    int r() const { return u + d; }
    bool valid() const { return u >= 0 && d >= 0 && u + d <= length; }
    bool operator==(const SectorLabel& o) const {
        return u == o.u && d == o.d && length == o.length;
    }
    bool operator<(const SectorLabel& o) const;
};

SectorLabel sector_of(const ConfigWord& w);

/// L! / (u! d! f!)
int64_t sector_dimension(const SectorLabel& s);
/// binom(L, r) * 2^r, the dimension of the aggregated r-particle subspace.
int64_t aggregated_sector_dimension(int length, int r);

int64_t binomial(int n, int k);
int64_t pow3(int length);

/// All words in the sector, sorted by code ascending.
std::vector<ConfigWord> enumerate_sector(int length, const SectorLabel& s);

/// All 3^L words in code order.
std::vector<ConfigWord> enumerate_all(int length);

}  // namespace fmz
