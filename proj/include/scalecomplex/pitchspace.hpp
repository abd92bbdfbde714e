#ifndef SCALECOMPLEX_PITCHSPACE_HPP
#define SCALECOMPLEX_PITCHSPACE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace scx {

/// Cyclic universe of pitch classes 0..n_pitches-1. A scale is chromatic
/// when it contains run_limit cyclically consecutive pitch classes.
class PitchUniverse {
public:
    static constexpr int kMaxPitches = 64;

    /// The twelve-tone universe with the "no three consecutive semitones" rule.
    PitchUniverse() = default;
    PitchUniverse(int n_pitches, int run_limit);

    int n_pitches() const { return n_pitches_; }
    int run_limit() const { return run_limit_; }
    bool is_default() const { return n_pitches_ == 12 && run_limit_ == 3; }

    bool operator==(const PitchUniverse&) const = default;

private:
    int n_pitches_ = 12;
    int run_limit_ = 3;
};

/// A pitch class, 0 = C, 1 = C#, ..., 11 = B in the twelve-tone universe.
struct PitchClass {
    int index = 0;

    constexpr auto operator<=>(const PitchClass&) const = default;
};

/// A set of pitch classes stored as a 64-bit mask. The empty scale is the
/// (-1)-simplex. Ordering compares the numeric value of the mask.
class Scale {
public:
    constexpr Scale() = default;
    constexpr explicit Scale(std::uint64_t bits) : bits_(bits) {}
    Scale(std::initializer_list<int> members);

    static Scale from_members(const std::vector<int>& members);

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const;
    bool contains(int pitch) const;
    bool contains(PitchClass p) const { return contains(p.index); }

    Scale with(int pitch) const;
    Scale without(int pitch) const;

    bool is_subset_of(Scale other) const { return (bits_ & ~other.bits_) == 0; }
    Scale operator&(Scale o) const { return Scale(bits_ & o.bits_); }
    Scale operator|(Scale o) const { return Scale(bits_ | o.bits_); }

    /// Members in ascending order.
    std::vector<int> members() const;

    /// Smallest member; the scale must be non-empty.
    int min_member() const;

    auto operator<=>(const Scale&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Cyclic gap sequence between consecutive members of a scale.
class IntervalSequence {
public:
    IntervalSequence() = default;
    explicit IntervalSequence(std::vector<int> intervals);

    /// Parse "2-2-1-2-2-2-1".
    static IntervalSequence parse(std::string_view text);

    const std::vector<int>& intervals() const { return intervals_; }
    std::size_t length() const { return intervals_.size(); }
    int sum() const;

    /// Lexicographically smallest rotation.
    IntervalSequence canonical() const;
    std::vector<IntervalSequence> distinct_rotations() const;

    /// Hyphen-joined form, e.g. "2-2-1-2-2-2-1".
    std::string to_string() const;

    /// Realize as a scale starting at pitch `root`.
    Scale realize(int root, const PitchUniverse& u) const;

    /// Cyclic equality: equal iff canonical forms coincide.
    bool operator==(const IntervalSequence& other) const;
    bool operator<(const IntervalSequence& other) const { return intervals_ < other.intervals_; }

private:
    std::vector<int> intervals_;
};

void validate(Scale s, const PitchUniverse& u);
void validate(PitchClass p, const PitchUniverse& u);

int distance(PitchClass t1, PitchClass t2, const PitchUniverse& u);

/// Gaps between cyclically consecutive members, starting at the smallest.
IntervalSequence interval_sequence(Scale s, const PitchUniverse& u);

/// True iff `s` contains no run_limit cyclically consecutive pitch classes.
bool is_non_chromatic(Scale s, const PitchUniverse& u);

Scale transpose(Scale s, int k, const PitchUniverse& u);

/// Number of shifts k in [0, N) that fix `s`.
int symmetry_order(Scale s, const PitchUniverse& u);

/// Transposition orbit size, N / symmetry_order.
int orbit_size(Scale s, const PitchUniverse& u);

/// Orbit size times the number of distinct rotations of the interval sequence.
int mode_count(Scale s, const PitchUniverse& u);

/// All non-chromatic subsets of `s` with exactly `size` members, ascending.
std::vector<Scale> non_chromatic_subsets(Scale s, int size, const PitchUniverse& u);

/// Sharp-convention name of a pitch class ("C", "C#", ..., "B").
std::string note_name(int pitch);

/// Note names in the twelve-tone universe, integers otherwise; comma separated.
std::string format_scale(Scale s, const PitchUniverse& u);

/// Integers only, e.g. "{0,2,4}".
std::string format_scale_numeric(Scale s);

/// Parse a comma- or space-separated list of note names (twelve-tone
/// universe only; flats are normalized to sharps) or integers.
Scale parse_scale(std::string_view text, const PitchUniverse& u);

} // namespace scx

template <>
struct std::hash<scx::Scale> {
    std::size_t operator()(scx::Scale s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

#endif
