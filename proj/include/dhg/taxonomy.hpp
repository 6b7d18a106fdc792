#pragma once

// The 91-class directed hypergraphlet taxonomy.
//
// For an incident pair e = <T, H>, e' = <T', H'> the class is determined by
// which of eight regions of the four-set Venn diagram are non-empty:
//
//   1: H \ H' \ T'   2: H ∩ H'   3: H ∩ T'   4: H' \ H \ T
//   5: T' \ H \ T    6: H' ∩ T   7: T ∩ T'   8: T \ H' \ T'
//
// Exchanging e and e' permutes the regions as (1 4)(3 6)(5 8). Classes are
// the swap orbits of the patterns that describe two non-duplicate incident
// arcs; each class is represented by the smaller pattern of its orbit.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "dhg/hypergraph.hpp"

namespace dhg {

inline constexpr std::size_t kNumClasses = 91;

/// Eight region-non-emptiness flags, packed with region 1 as the most
/// significant bit. The packed value is also the total order used for
/// canonicalization and class numbering.
class RegionPattern {
 public:
  constexpr RegionPattern() = default;
  constexpr explicit RegionPattern(std::uint8_t bits) : bits_(bits) {}

  /// `regions[k]` is region k+1.
  static constexpr RegionPattern from_regions(const std::array<bool, 8>& regions) {
    std::uint8_t bits = 0;
    for (int k = 0; k < 8; ++k) bits = static_cast<std::uint8_t>((bits << 1) | (regions[k] ? 1 : 0));
    return RegionPattern(bits);
  }

  /// Parses 8 characters of '0'/'1', region 1 first. Throws std::invalid_argument.
  static RegionPattern parse(std::string_view text);

  constexpr std::uint8_t bits() const noexcept { return bits_; }

  /// Region k in 1..8.
  constexpr bool region(int k) const noexcept { return (bits_ >> (8 - k)) & 1U; }

  constexpr RegionPattern swapped() const noexcept {
    constexpr int image[8] = {4, 2, 6, 1, 8, 3, 7, 5};
    std::uint8_t out = 0;
    for (int k = 1; k <= 8; ++k) out = static_cast<std::uint8_t>((out << 1) | (region(image[k - 1]) ? 1 : 0));
    return RegionPattern(out);
  }

  /// H, T, H', T' are all non-empty.
  constexpr bool sets_non_empty() const noexcept {
    const auto r = [this](int k) { return region(k); };
    return (r(1) || r(2) || r(3)) && (r(6) || r(7) || r(8)) && (r(2) || r(4) || r(6)) &&
           (r(3) || r(5) || r(7));
  }

  /// ē ∩ ē' != ∅.
  constexpr bool incident() const noexcept { return region(2) || region(3) || region(6) || region(7); }

  /// H = H' and T = T'.
  constexpr bool duplicate() const noexcept { return bits_ == 0b01000010; }

  std::string to_string() const;

  friend constexpr auto operator<=>(RegionPattern, RegionPattern) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// min(p, swap(p)) under the packed-integer order.
constexpr RegionPattern canonicalize(RegionPattern p) noexcept {
  const RegionPattern s = p.swapped();
  return s < p ? s : p;
}

/// Region pattern of a pair plus |ē ∩ ē'|, computed by scanning the smaller
/// arc and deriving the four difference regions from intersection sizes.
struct PairOverlap {
  RegionPattern pattern;
  std::uint32_t shared = 0;
};

PairOverlap overlap(const Hyperarc& e, const Hyperarc& other);

/// Throws NotIncidentError when the arcs share no node.
RegionPattern region_pattern(const Hyperarc& e, const Hyperarc& other);

/// 1-based class index as reported to users; slot() is the 0-based position
/// in count vectors.
class ClassId {
 public:
  constexpr explicit ClassId(int index) : index_(static_cast<std::uint8_t>(index)) {}
  constexpr int index() const noexcept { return index_; }
  constexpr std::size_t slot() const noexcept { return index_ - 1U; }
  friend constexpr auto operator<=>(ClassId, ClassId) = default;

 private:
  std::uint8_t index_;
};

/// Intermediate tallies of the class enumeration.
struct TaxonomyCensus {
  int valid_patterns = 0;  // non-empty sets, incident, not duplicate
  int swap_fixed = 0;      // valid patterns with p == swap(p)
  int classes = 0;
};

/// Pattern -> class lookup over all 256 patterns. Immutable.
class ClassTable {
 public:
  /// Enumerates the taxonomy; throws std::logic_error unless exactly 91
  /// classes come out.
  ClassTable();

  /// Process-wide table, built on first use.
  static const ClassTable& standard();

  static TaxonomyCensus census();

  /// nullopt for patterns outside the taxonomy (duplicate, non-incident,
  /// or describing an empty set).
  std::optional<ClassId> lookup(RegionPattern p) const noexcept {
    const std::uint8_t c = pattern_to_class_[p.bits()];
    if (c == 0) return std::nullopt;
    return ClassId(c);
  }

  RegionPattern canonical(ClassId c) const { return class_to_canonical_.at(c.slot()); }

  static constexpr std::size_t size() noexcept { return kNumClasses; }

 private:
  std::array<std::uint8_t, 256> pattern_to_class_{};
  std::array<RegionPattern, kNumClasses> class_to_canonical_{};
};

/// Class of the pair (i, j) of g. Throws std::invalid_argument for i == j,
/// NotIncidentError for non-incident arcs, and std::invalid_argument for
/// duplicate arcs (which belong to no class).
ClassId classify_pair(const DirectedHypergraph& g, ArcId i, ArcId j, const ClassTable& table);

/// Optional external numbering of classes (e.g. a figure's ordering).
/// File format: one line per class, `b1b2b3b4b5b6b7b8<TAB>index`.
class ExternalIndexMap {
 public:
  ExternalIndexMap() = default;

  /// Throws ParseError for malformed lines or patterns outside the taxonomy.
  static ExternalIndexMap parse(std::istream& in, const ClassTable& table);
  static ExternalIndexMap read_file(const std::string& path, const ClassTable& table);

  std::optional<int> find(ClassId c) const { return index_.at(c.slot()); }

 private:
  std::array<std::optional<int>, kNumClasses> index_{};
};

}  // namespace dhg
