#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ctcodes/autgamma.hpp"
#include "ctcodes/hamming.hpp"
#include "ctcodes/limits.hpp"

namespace ctc {

/// exhaustive: every object in a finite scope. sampled: seeded random draws.
/// corpus: the built-in instance list. instance: one named construction.
/// external: the statement rests on outside classifications; only its
/// arithmetic is replayed.
enum class ReplayKind { Exhaustive, Sampled, Corpus, Instance, External };
std::string to_string(ReplayKind kind);

struct ReplayEntry {
  std::string id;
  ReplayKind kind;
  std::uint64_t seed;
  std::string claim;
};

/// Sorted by id.
const std::vector<ReplayEntry>& replay_registry();

struct InstanceVerdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReplayReport {
  std::string id;
  ReplayKind kind = ReplayKind::Instance;
  std::uint64_t seed = 0;
  std::string claim;
  std::string scope;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<InstanceVerdict> instances;
  /// Objects examined, which can exceed instances.size() for exhaustive scans.
  std::uint64_t checked = 0;
  std::uint64_t counterexamples = 0;

  bool passed() const noexcept { return counterexamples == 0; }
  std::optional<std::string> fact(const std::string& key) const;
};

struct ReplayOptions {
  /// Restricts replays that range over lengths to this one.
  std::optional<int> m;
};

/// DomainError for an unknown id or an option outside the replay's range.
ReplayReport replay(const std::string& id, const ReplayOptions& options = {}, const Limits& limits = {});

/// `format-version: 1` followed by key: value lines in a fixed order.
void write_replay_report(std::ostream& out, const ReplayReport& report);

/// Runs every registered replay and writes `<dir>/<id>.txt` for each.
std::vector<ReplayReport> replay_all(const std::filesystem::path& dir, const Limits& limits = {});

/// A code with a group, used by the corpus replays.
struct CorpusInstance {
  std::string name;
  Code code;
  AutSubgroup group;
};
std::vector<CorpusInstance> transitive_corpus();

}  // namespace ctc
