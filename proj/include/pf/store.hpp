#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pf/enumerate.hpp"
#include "pf/invariants.hpp"
#include "pf/polytope.hpp"
#include "pf/problem.hpp"

namespace pf {

// Column file layout (little-endian):
//   "PHGC1"  u8 kind (0 numeric, 1 boolean)  u32 rows  then per row
//   numeric: i64 num, u64 den; den == 0 is undefined. When a value does not
//            fit, num is written as 0 and den as UINT64_MAX, followed by
//            u8 sign, u16 len, len magnitude bytes (numerator), then
//            u16 len, len magnitude bytes (denominator); magnitudes LSB first.
//   boolean: u8 0 false, 1 true, 2 undefined.
void write_column(const std::filesystem::path& file, InvariantKind kind,
                  std::span<const InvariantValue> values);
std::vector<InvariantValue> read_column(const std::filesystem::path& file);

/// Reads a g6 file, one encoding per line.
std::vector<std::string> read_g6_file(const std::filesystem::path& file);
void write_g6_file(const std::filesystem::path& file, std::span<const std::string> lines);

struct CorpusHandle {
  int order = 0;
  GraphClass graph_class = GraphClass::all;
  std::size_t rows = 0;
  std::filesystem::path dir;
  /// Invariant ids with a column file on disk.
  std::vector<std::string> columns;
};

struct QueryRow {
  std::size_t index = 0;  // corpus row
  std::string signature;
  Rational x;
  Rational y;
  std::optional<InvariantValue> color;
  std::optional<bool> highlight;
  std::vector<std::pair<std::string, InvariantValue>> extras;
};

struct QueryResult {
  std::vector<QueryRow> rows;
  std::size_t dropped_undefined = 0;
};

struct GraphRecord {
  std::string signature;
  std::map<std::string, InvariantValue> values;
};

/// Rows whose graph has exactly this (sorted) degree sequence.
std::vector<QueryRow> filter_degree_sequence(std::span<const QueryRow> rows,
                                             std::span<const int> sorted_degrees);

/// Embedded columnar corpus store rooted at data/{class}/order_{n}/.
/// Immutable after build; concurrent readers share a lazily filled cache.
class Store {
 public:
  explicit Store(std::filesystem::path root, int ceiling = kDefaultOrderCeiling);

  /// Root from PF_DATA_DIR, "data" when unset.
  static std::filesystem::path default_root();

  const std::filesystem::path& root() const noexcept { return root_; }
  int ceiling() const noexcept { return ceiling_; }
  std::filesystem::path corpus_dir(int order, GraphClass cls) const;

  /// Enumerates the corpus when graphs.g6 is missing, then writes one column
  /// per id. Rebuilding reproduces byte-identical files.
  CorpusHandle build(int order, GraphClass cls, std::span<const std::string> ids,
                     Exec exec = Exec::parallel);
  CorpusHandle open(int order, GraphClass cls) const;

  const std::vector<std::string>& signatures(int order, GraphClass cls) const;
  /// Throws NotFoundError when the column was not built.
  const std::vector<InvariantValue>& column(int order, GraphClass cls, std::string_view id) const;

  /// Corpus rows passing every constraint, in corpus order.
  std::vector<std::size_t> filter(int order, GraphClass cls,
                                  std::span<const Constraint> constraints) const;

  QueryResult query(const ProblemSpec& spec) const;
  std::vector<GraphRecord> graphs_at(const ProblemSpec& spec,
                                     std::span<const Point2> coords) const;
  /// Stored values when the graph is in the built corpus of its order,
  /// computed on demand otherwise.
  std::map<std::string, InvariantValue> invariants_of(std::string_view signature,
                                                      std::span<const std::string> ids) const;

 private:
  struct Corpus {
    std::vector<std::string> signatures;
    std::map<std::string, std::shared_ptr<const std::vector<InvariantValue>>, std::less<>> columns;
  };

  Corpus& corpus(int order, GraphClass cls) const;
  void forget(int order, GraphClass cls);

  std::filesystem::path root_;
  int ceiling_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<int, GraphClass>, std::unique_ptr<Corpus>> cache_;
};

}  // namespace pf
