#pragma once

#include <exception>
#include <functional>
#include <optional>
#include <string>

#include "burnloops/instance.hpp"
#include "burnloops/verify.hpp"

namespace burnloops::detail {

/// Structures shared by the verifiers of one (family, n), computed on first
/// use. A failed computation is remembered and rethrown on every access.
class VerifyContext {
 public:
  VerifyContext(Family f, int n, VerifyOptions options);

  Family family() const { return family_; }
  int n() const { return n_; }
  const VerifyOptions& options() const { return options_; }
  const BurnInstance& inst() const { return inst_; }
  const Loop& loop() const { return inst_.loop(); }
  const Net& net() const { return inst_.net; }

  const Translations& translations() const;
  const Nuclei& nuclei() const;
  const ReflectionGroups& refl() const;
  /// ker Phi as collineations (members of N with v = id).
  const FiniteGroup& kernel_collineations() const;
  /// ker Phi as the group K of u-components.
  const FiniteGroup& kernel() const;
  const SpecialSubgroups& special() const;
  const GammaAnalysis& gamma() const;
  const FiniteGroup& center_nplus() const;
  const FiniteGroup& hk(std::size_t k) const;
  const NetOrbits& orbits() const;

 private:
  template <typename T>
  struct Lazy {
    std::optional<T> value;
    std::exception_ptr error;
  };

  template <typename T, typename Make>
  const T& get(Lazy<T>& slot, Make make) const {
    if (slot.error) std::rethrow_exception(slot.error);
    if (!slot.value) {
      try {
        slot.value.emplace(make());
      } catch (...) {
        slot.error = std::current_exception();
        throw;
      }
    }
    return *slot.value;
  }

  Family family_;
  int n_;
  VerifyOptions options_;
  BurnInstance inst_;
  mutable Lazy<Translations> translations_;
  mutable Lazy<Nuclei> nuclei_;
  mutable Lazy<ReflectionGroups> refl_;
  mutable Lazy<FiniteGroup> kernel_collineations_, kernel_, center_nplus_;
  mutable Lazy<SpecialSubgroups> special_;
  mutable Lazy<GammaAnalysis> gamma_;
  mutable Lazy<NetOrbits> orbits_;
  mutable Lazy<FiniteGroup> hk_[5];
};

void run_kernel_table(const VerifyContext& ctx, Report& report);
void run_reflection_theorem(const VerifyContext& ctx, Report& report);
void run_aut_theorem(const VerifyContext& ctx, Report& report);
void run_gamma_theorem(const VerifyContext& ctx, Report& report);
void run_foundational(const VerifyContext& ctx, Report& report);

}  // namespace burnloops::detail
