#include "scalecomplex/pitchspace.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "scalecomplex/errors.hpp"

namespace scx {

namespace {

std::uint64_t universe_mask(const PitchUniverse& u)
{
    return u.n_pitches() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << u.n_pitches()) - 1;
}

int mod(int a, int n)
{
    int r = a % n;
    return r < 0 ? r + n : r;
}

constexpr std::array<const char*, 12> kSharpNames = {"C",  "C#", "D",  "D#", "E",  "F",
                                                     "F#", "G",  "G#", "A",  "A#", "B"};

} // namespace

PitchUniverse::PitchUniverse(int n_pitches, int run_limit) : n_pitches_(n_pitches), run_limit_(run_limit)
{
    if (n_pitches < 3 || n_pitches > kMaxPitches)
        throw DomainError("number of pitches must lie in [3, 64], got " + std::to_string(n_pitches));
    if (run_limit < 2 || run_limit > n_pitches)
        throw DomainError("run limit must lie in [2, " + std::to_string(n_pitches) + "], got " +
                          std::to_string(run_limit));
}

Scale::Scale(std::initializer_list<int> members)
{
    for (int m : members) {
        if (m < 0 || m >= 64)
            throw DomainError("pitch index out of range: " + std::to_string(m));
        bits_ |= std::uint64_t{1} << m;
    }
}

Scale Scale::from_members(const std::vector<int>& members)
{
    Scale s;
    for (int m : members)
        s = s.with(m);
    return s;
}

int Scale::size() const { return std::popcount(bits_); }

bool Scale::contains(int pitch) const
{
    return pitch >= 0 && pitch < 64 && ((bits_ >> pitch) & 1U) != 0;
}

Scale Scale::with(int pitch) const
{
    if (pitch < 0 || pitch >= 64)
        throw DomainError("pitch index out of range: " + std::to_string(pitch));
    return Scale(bits_ | (std::uint64_t{1} << pitch));
}

Scale Scale::without(int pitch) const
{
    if (pitch < 0 || pitch >= 64)
        return *this;
    return Scale(bits_ & ~(std::uint64_t{1} << pitch));
}

std::vector<int> Scale::members() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

int Scale::min_member() const
{
    if (bits_ == 0)
        throw DomainError("empty scale has no smallest member");
    return std::countr_zero(bits_);
}

IntervalSequence::IntervalSequence(std::vector<int> intervals) : intervals_(std::move(intervals))
{
    for (int g : intervals_)
        if (g <= 0)
            throw DomainError("interval sequence entries must be positive");
}

IntervalSequence IntervalSequence::parse(std::string_view text)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('-', pos);
        if (next == std::string_view::npos)
            next = text.size();
        std::string_view tok = text.substr(pos, next - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("malformed interval sequence: " + std::string(text));
        out.push_back(value);
        pos = next + 1;
    }
    return IntervalSequence(std::move(out));
}

int IntervalSequence::sum() const { return std::accumulate(intervals_.begin(), intervals_.end(), 0); }

std::vector<IntervalSequence> IntervalSequence::distinct_rotations() const
{
    std::vector<std::vector<int>> rots;
    std::vector<int> r = intervals_;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        rots.push_back(r);
        std::rotate(r.begin(), r.begin() + 1, r.end());
    }
    std::sort(rots.begin(), rots.end());
    rots.erase(std::unique(rots.begin(), rots.end()), rots.end());
    std::vector<IntervalSequence> out;
    out.reserve(rots.size());
    for (auto& v : rots)
        out.emplace_back(std::move(v));
    return out;
}

IntervalSequence IntervalSequence::canonical() const
{
    if (intervals_.empty())
        return *this;
    std::vector<int> best = intervals_;
    std::vector<int> r = intervals_;
    for (std::size_t i = 1; i < intervals_.size(); ++i) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        if (r < best)
            best = r;
    }
    return IntervalSequence(std::move(best));
}

std::string IntervalSequence::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (i)
            out += '-';
        out += std::to_string(intervals_[i]);
    }
    return out;
}

Scale IntervalSequence::realize(int root, const PitchUniverse& u) const
{
    if (sum() != u.n_pitches())
        throw DomainError("interval sequence " + to_string() + " does not sum to " +
                          std::to_string(u.n_pitches()));
    Scale s;
    int p = mod(root, u.n_pitches());
    for (int g : intervals_) {
        s = s.with(p);
        p = (p + g) % u.n_pitches();
    }
    return s;
}

bool IntervalSequence::operator==(const IntervalSequence& other) const
{
    return canonical().intervals_ == other.canonical().intervals_;
}

void validate(Scale s, const PitchUniverse& u)
{
    if ((s.bits() & ~universe_mask(u)) != 0)
        throw DomainError("scale " + format_scale_numeric(s) + " has members outside the universe of " +
                          std::to_string(u.n_pitches()) + " pitches");
}

void validate(PitchClass p, const PitchUniverse& u)
{
    if (p.index < 0 || p.index >= u.n_pitches())
        throw DomainError("pitch class " + std::to_string(p.index) + " outside [0, " +
                          std::to_string(u.n_pitches()) + ")");
}

int distance(PitchClass t1, PitchClass t2, const PitchUniverse& u)
{
    validate(t1, u);
    validate(t2, u);
    const int n = u.n_pitches();
    return std::min(mod(t2.index - t1.index, n), mod(t1.index - t2.index, n));
}

IntervalSequence interval_sequence(Scale s, const PitchUniverse& u)
{
    validate(s, u);
    if (s.empty())
        throw DomainError("interval sequence of the empty scale is undefined");
    const auto m = s.members();
    const int n = u.n_pitches();
    std::vector<int> gaps;
    gaps.reserve(m.size());
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        gaps.push_back(m[i + 1] - m[i]);
    gaps.push_back(m.front() + n - m.back());
    return IntervalSequence(std::move(gaps));
}

bool is_non_chromatic(Scale s, const PitchUniverse& u)
{
    validate(s, u);
    const int n = u.n_pitches();
    const int r = u.run_limit();
    if (s.size() < r)
        return true;
    for (int start = 0; start < n; ++start) {
        int k = 0;
        while (k < r && s.contains((start + k) % n))
            ++k;
        if (k == r)
            return false;
    }
    return true;
}

Scale transpose(Scale s, int k, const PitchUniverse& u)
{
    validate(s, u);
    const int n = u.n_pitches();
    const int shift = mod(k, n);
    if (shift == 0)
        return s;
    const std::uint64_t mask = universe_mask(u);
    const std::uint64_t b = s.bits();
    return Scale(((b << shift) | (b >> (n - shift))) & mask);
}

int symmetry_order(Scale s, const PitchUniverse& u)
{
    validate(s, u);
    if (s.empty())
        throw DomainError("symmetry order of the empty scale is undefined");
    int count = 0;
    for (int k = 0; k < u.n_pitches(); ++k)
        if (transpose(s, k, u) == s)
            ++count;
    return count;
}

int orbit_size(Scale s, const PitchUniverse& u) { return u.n_pitches() / symmetry_order(s, u); }

int mode_count(Scale s, const PitchUniverse& u)
{
    const int rotations = static_cast<int>(interval_sequence(s, u).distinct_rotations().size());
    return orbit_size(s, u) * rotations;
}

std::vector<Scale> non_chromatic_subsets(Scale s, int size, const PitchUniverse& u)
{
    validate(s, u);
    const auto m = s.members();
    std::vector<Scale> out;
    if (size < 0 || size > static_cast<int>(m.size()))
        return out;
    // Walk all selections of `size` positions out of m.
    std::vector<bool> pick(m.size(), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
        Scale t;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (pick[i])
                t = t.with(m[i]);
        if (is_non_chromatic(t, u))
            out.push_back(t);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string note_name(int pitch)
{
    if (pitch < 0 || pitch >= 12)
        throw DomainError("no note name for pitch " + std::to_string(pitch));
    return kSharpNames[static_cast<std::size_t>(pitch)];
}

std::string format_scale(Scale s, const PitchUniverse& u)
{
    if (u.n_pitches() != 12)
        return format_scale_numeric(s);
    std::string out = "{";
    bool first = true;
    for (int m : s.members()) {
        if (!first)
            out += ',';
        out += note_name(m);
        first = false;
    }
    return out + "}";
}

std::string format_scale_numeric(Scale s)
{
    std::string out = "{";
    bool first = true;
    for (int m : s.members()) {
        if (!first)
            out += ',';
        out += std::to_string(m);
        first = false;
    }
    return out + "}";
}

namespace {

int parse_note(std::string_view tok)
{
    static constexpr std::array<int, 7> kNatural = {9, 11, 0, 2, 4, 5, 7}; // A..G
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if (letter < 'A' || letter > 'G')
        return -1;
    int p = kNatural[static_cast<std::size_t>(letter - 'A')];
    for (std::size_t i = 1; i < tok.size(); ++i) {
        const char c = tok[i];
        if (c == '#')
            ++p;
        else if (c == 'b' || c == 'B')
            --p;
        else
            return -1;
    }
    return mod(p, 12);
}

} // namespace

Scale parse_scale(std::string_view text, const PitchUniverse& u)
{
    Scale s;
    std::string buf(text);
    for (char& c : buf)
        if (c == ',' || c == '{' || c == '}' || c == '[' || c == ']')
            c = ' ';
    std::istringstream in(buf);
    std::string tok;
    while (in >> tok) {
        int p = -1;
        if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError("malformed pitch token: " + tok);
        } else {
            if (u.n_pitches() != 12)
                throw ParseError("note names require the twelve-tone universe: " + tok);
            p = parse_note(tok);
            if (p < 0)
                throw ParseError("unknown note name: " + tok);
        }
        if (p < 0 || p >= u.n_pitches())
            throw ParseError("pitch " + tok + " outside the universe");
        s = s.with(p);
    }
    return s;
}

} // namespace scx
