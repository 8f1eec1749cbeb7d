#include "nashcert/var_space.hpp"

#include <algorithm>
#include <cctype>

#include "nashcert/error.hpp"

namespace nashcert {

std::string Var::name() const {
  switch (family) {
    case Family::W: return "w";
    case Family::T: return "t";
    case Family::X: return "x" + std::to_string(index);
    case Family::Y: return "y" + std::to_string(index);
    case Family::Z: return "z" + std::to_string(index);
    case Family::ZBar: return "zb" + std::to_string(index);
  }
  return "?";
}

std::optional<Var> parse_var(const std::string& name) {
  if (name == "t") return Var::t();
  if (name == "w") return Var::w();
  Family family;
  std::size_t digits;
  if (name.rfind("zb", 0) == 0) {
    family = Family::ZBar;
    digits = 2;
  } else if (!name.empty() && (name[0] == 'x' || name[0] == 'y' || name[0] == 'z')) {
    family = name[0] == 'x' ? Family::X : name[0] == 'y' ? Family::Y : Family::Z;
    digits = 1;
  } else {
    return std::nullopt;
  }
  if (digits == name.size() || name[digits] == '0') return std::nullopt;
  int index = 0;
  for (std::size_t k = digits; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
    if (index > 100000) return std::nullopt;
    index = index * 10 + (name[k] - '0');
  }
  return Var{family, index};
}

VarSpace::VarSpace(int n, std::vector<Family> spatial, bool has_w)
    : n_(n), families_(std::move(spatial)), has_w_(has_w) {
  if (n_ < 1) throw Error(ErrorCode::InvalidArgument, "variable space needs n >= 1");
  std::sort(families_.begin(), families_.end());
  families_.erase(std::unique(families_.begin(), families_.end()), families_.end());
  for (Family f : families_) {
    if (f == Family::W || f == Family::T) {
      throw Error(ErrorCode::InvalidArgument, "t and w are not spatial families");
    }
  }
}

bool VarSpace::has_family(Family f) const {
  return std::find(families_.begin(), families_.end(), f) != families_.end();
}

std::optional<std::size_t> VarSpace::slot(Var v) const {
  if (v.family == Family::W) return has_w_ ? std::optional<std::size_t>(0) : std::nullopt;
  if (v.family == Family::T) return t_slot();
  if (v.index < 1 || v.index > n_) return std::nullopt;
  auto it = std::find(families_.begin(), families_.end(), v.family);
  if (it == families_.end()) return std::nullopt;
  const auto family_pos = static_cast<std::size_t>(it - families_.begin());
  return block_size() + family_pos * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v.index - 1);
}

Var VarSpace::var_at(std::size_t slot) const {
  if (has_w_ && slot == 0) return Var::w();
  if (slot == t_slot()) return Var::t();
  const std::size_t rel = slot - block_size();
  const auto n = static_cast<std::size_t>(n_);
  return Var{families_.at(rel / n), static_cast<int>(rel % n) + 1};
}

std::vector<Var> VarSpace::variables() const {
  std::vector<Var> out;
  out.reserve(size());
  for (std::size_t s = 0; s < size(); ++s) out.push_back(var_at(s));
  return out;
}

std::string VarSpace::describe() const {
  std::string out = "{";
  for (std::size_t s = 0; s < size(); ++s) {
    if (s) out += ", ";
    out += var_at(s).name();
  }
  return out + "}";
}

}  // namespace nashcert
