#include "word.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmz {

char step_char(Step s) {
    switch (s) {
        case Step::U: return 'u';
        case Step::F: return 'f';
        case Step::D: return 'd';
    }
    throw std::logic_error("bad step");
}

Step step_from_char(char c) {
    switch (c) {
        case 'u': case 'U': return Step::U;
        case 'f': case 'F': return Step::F;
        case 'd': case 'D': return Step::D;
    }
    throw std::invalid_argument(std::string("bad step character '") + c + "'");
}

ConfigWord::ConfigWord(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("zero-length chain");
}

ConfigWord ConfigWord::from_code(int length, int64_t code) {
    if (length < 1) throw std::invalid_argument("zero-length chain");
    if (code < 0 || code >= pow3(length)) throw std::invalid_argument("code out of range");
    std::vector<Step> steps(length);
    for (int i = length - 1; i >= 0; --i) {
        steps[i] = static_cast<Step>(code % 3);
        code /= 3;
    }
    return ConfigWord(std::move(steps));
}

ConfigWord ConfigWord::from_string(const std::string& text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) steps.push_back(step_from_char(c));
    return ConfigWord(std::move(steps));
}

ConfigWord ConfigWord::all_flat(int length) {
    if (length < 1) throw std::invalid_argument("zero-length chain");
    return ConfigWord(std::vector<Step>(length, Step::F));
}

int64_t ConfigWord::code() const {
    int64_t c = 0;
    for (Step s : steps_) c = 3 * c + static_cast<int64_t>(s);
    return c;
}

std::string ConfigWord::str() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s.push_back(step_char(st));
    return s;
}

ConfigWord ConfigWord::translated(int shift) const {
    const int L = length();
    shift = ((shift % L) + L) % L;
    std::vector<Step> out(L);
    for (int i = 0; i < L; ++i) out[i] = steps_[(i + shift) % L];
    return ConfigWord(std::move(out));
}

ConfigWord ConfigWord::swapped_ud() const {
    std::vector<Step> out(steps_);
    for (Step& s : out) {
        if (s == Step::U) s = Step::D;
        else if (s == Step::D) s = Step::U;
    }
    return ConfigWord(std::move(out));
}

bool ConfigWord::operator<(const ConfigWord& o) const {
    if (length() != o.length()) return length() < o.length();
    return code() < o.code();
}

bool SectorLabel::operator<(const SectorLabel& o) const {
    if (length != o.length) return length < o.length;
    if (u != o.u) return u < o.u;
    return d < o.d;
}

SectorLabel sector_of(const ConfigWord& w) {
    SectorLabel s;
    s.length = w.length();
    for (Step st : w.steps()) {
        if (st == Step::U) ++s.u;
        else if (st == Step::D) ++s.d;
    }
    return s;
}

int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int64_t pow3(int length) {
    int64_t p = 1;
    for (int i = 0; i < length; ++i) p *= 3;
    return p;
}

int64_t sector_dimension(const SectorLabel& s) {
    if (!s.valid()) throw std::invalid_argument("invalid sector");
    return binomial(s.length, s.u) * binomial(s.length - s.u, s.d);
}

int64_t aggregated_sector_dimension(int length, int r) {
    if (r < 0 || r > length) throw std::invalid_argument("invalid particle number");
    return binomial(length, r) * (int64_t(1) << r);
}

std::vector<ConfigWord> enumerate_sector(int length, const SectorLabel& s) {
    if (s.length != length || !s.valid()) throw std::invalid_argument("invalid sector");
    // lexicographic generation in code order: U < F < D digit order matches code order
    std::vector<Step> steps;
    steps.reserve(length);
    for (int i = 0; i < s.u; ++i) steps.push_back(Step::U);
    for (int i = 0; i < s.f(); ++i) steps.push_back(Step::F);
    for (int i = 0; i < s.d; ++i) steps.push_back(Step::D);
    std::vector<ConfigWord> out;
    out.reserve(sector_dimension(s));
    do {
        out.emplace_back(steps);
    } while (std::next_permutation(steps.begin(), steps.end()));
    return out;
}

std::vector<ConfigWord> enumerate_all(int length) {
    std::vector<ConfigWord> out;
    out.reserve(pow3(length));
    for (int64_t c = 0; c < pow3(length); ++c) out.push_back(ConfigWord::from_code(length, c));
    return out;
}

}  // namespace fmz
