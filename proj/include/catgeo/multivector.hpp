#pragma once

#include <map>
#include <utility>

namespace catgeo {

/// Scalar plus a sparse sum of grade-2 blades. Zero coefficients are never
/// stored, so equality of canonical forms is plain member-wise equality.
template <class Blade, class Coef>
class Multivector {
 public:
  using blade_type = Blade;
  using coefficient_type = Coef;

  Multivector() = default;

  static Multivector scalar(Coef s) {
    Multivector m;
    m.scalar_ = std::move(s);
    return m;
  }

  static Multivector blade(Blade b, Coef c) {
    Multivector m;
    m.add_blade(std::move(b), std::move(c));
    return m;
  }

  const Coef& scalar_part() const noexcept { return scalar_; }
  const std::map<Blade, Coef>& blades() const noexcept { return blades_; }

  bool is_zero() const { return scalar_ == Coef{} && blades_.empty(); }
  bool is_scalar() const { return blades_.empty(); }

  void add_blade(Blade b, Coef c) {
    if (c == Coef{}) return;
    auto [it, inserted] = blades_.try_emplace(std::move(b), c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coef{}) blades_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& other) {
    scalar_ += other.scalar_;
    for (const auto& [b, c] : other.blades_) add_blade(b, c);
    return *this;
  }

  friend Multivector operator+(Multivector lhs, const Multivector& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend Multivector operator-(const Multivector& m) {
    Multivector out;
    out.scalar_ = -m.scalar_;
    for (const auto& [b, c] : m.blades_) out.blades_.emplace(b, -c);
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.scalar_ == b.scalar_ && a.blades_ == b.blades_;
  }

 private:
  Coef scalar_{};
  std::map<Blade, Coef> blades_;
};

}  // namespace catgeo
