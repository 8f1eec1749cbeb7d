#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nashcert {

/// Variable families. W and T are single variables; the spatial families
/// carry n indexed members each.
enum class Family : std::uint8_t { W, T, X, Y, Z, ZBar };

struct Var {
  Family family;
  int index = 0;  // 1-based for spatial families, 0 for t and w

  static Var t() { return {Family::T, 0}; }
  static Var w() { return {Family::W, 0}; }
  static Var x(int k) { return {Family::X, k}; }
  static Var y(int k) { return {Family::Y, k}; }
  static Var z(int k) { return {Family::Z, k}; }
  static Var zbar(int k) { return {Family::ZBar, k}; }

  bool is_spatial() const { return family != Family::W && family != Family::T; }
  std::string name() const;

  friend bool operator==(const Var&, const Var&) = default;
  friend auto operator<=>(const Var&, const Var&) = default;
};

/// Parses "x3", "zb1", "t", "w". Returns nullopt for anything else.
std::optional<Var> parse_var(const std::string& name);

/// The variable layout a MultiPoly lives in.
///
/// Exponent slots are laid out as [w] t, then n slots per present spatial
/// family in the order x, y, z, zb. The leading w/t block drives the term
/// order (see MultiPoly).
class VarSpace {
 public:
  VarSpace(int n, std::vector<Family> spatial, bool has_w = false);

  static VarSpace real(int n) { return VarSpace(n, {Family::X, Family::Y}); }
  static VarSpace complex(int n) { return VarSpace(n, {Family::Z}); }
  static VarSpace conjugate_pair(int n) { return VarSpace(n, {Family::Z, Family::ZBar}); }

  VarSpace with_w() const { return VarSpace(n_, families_, true); }
  VarSpace without_w() const { return VarSpace(n_, families_, false); }

  int n() const noexcept { return n_; }
  bool has_w() const noexcept { return has_w_; }
  bool has_family(Family f) const;
  const std::vector<Family>& spatial_families() const noexcept { return families_; }

  std::size_t size() const noexcept { return block_size() + families_.size() * static_cast<std::size_t>(n_); }
  /// Number of leading slots compared lexicographically before the graded part.
  std::size_t block_size() const noexcept { return has_w_ ? 2 : 1; }

  std::optional<std::size_t> slot(Var v) const;
  std::size_t t_slot() const noexcept { return has_w_ ? 1 : 0; }
  Var var_at(std::size_t slot) const;
  bool contains(Var v) const { return slot(v).has_value(); }
  std::vector<Var> variables() const;

  /// e.g. "{t, x1, y1}" for diagnostics.
  std::string describe() const;

  friend bool operator==(const VarSpace&, const VarSpace&) = default;

 private:
  int n_;
  std::vector<Family> families_;  // sorted, unique
  bool has_w_;
};

}  // namespace nashcert
