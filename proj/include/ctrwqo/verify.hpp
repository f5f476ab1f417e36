#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ctrwqo {

enum class ItemStatus { Pass, Fail, Exhausted };

std::string_view to_string(ItemStatus s);

struct LemmaItem {
  std::string item;
  ItemStatus status = ItemStatus::Pass;
  std::string detail;  // filled on failures
};

struct LemmaReport {
  std::string lemma;
  int max_n = 0;
  std::vector<LemmaItem> items;

  int count(ItemStatus s) const;
  bool passed() const { return count(ItemStatus::Fail) == 0 && count(ItemStatus::Exhausted) == 0; }
};

struct VerifyOptions {
  int workers = 1;
  std::uint64_t budget = 0;  // per search, 0 = unlimited
  std::uint64_t seed = 1;
  int trials = 500;          // cycleclique only
};

/// dec, cycles, 2c, kpp1, comp, ctr, dpgraph, cycleclique, recons, imctr.
const std::vector<std::string_view>& lemma_names();

/// Runs one corpus check. max_n bounds the corpus order (1..8); kpp1 and
/// comp use their fixed parameter grids, cycleclique uses it as the
/// element order bound. Throws ParamOutOfRange for an unknown name.
LemmaReport verify_lemma(std::string_view name, int max_n, const VerifyOptions& opts = {});

}  // namespace ctrwqo
