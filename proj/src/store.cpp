#include "pf/store.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>

#include "pf/canon.hpp"
#include "pf/errors.hpp"

namespace pf {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[5] = {'P', 'H', 'G', 'C', '1'};
constexpr std::uint64_t kEscape = std::numeric_limits<std::uint64_t>::max();

template <typename T>
void put_le(std::string& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i)
    out.push_back(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF));
}

class Reader {
 public:
  Reader(std::string data, fs::path file) : data_(std::move(data)), file_(std::move(file)) {}

  template <typename T>
  T get() {
    need(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }

  BigInt magnitude() {
    auto len = get<std::uint16_t>();
    need(len);
    BigInt m = 0;
    for (std::size_t i = len; i-- > 0;) m = (m << 8) | static_cast<unsigned char>(data_[pos_ + i]);
    pos_ += len;
    return m;
  }

  std::string_view bytes(std::size_t n) {
    need(n);
    std::string_view v(data_.data() + pos_, n);
    pos_ += n;
    return v;
  }

  bool done() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > data_.size())
      throw Error("column file " + file_.string() + " truncated at byte " + std::to_string(pos_));
  }

  std::string data_;
  fs::path file_;
  std::size_t pos_ = 0;
};

void put_magnitude(std::string& out, BigInt m) {
  std::string bytes;
  while (m > 0) {
    bytes.push_back(static_cast<char>(static_cast<unsigned>(m & 0xFF)));
    m >>= 8;
  }
  if (bytes.size() > std::numeric_limits<std::uint16_t>::max())
    throw Error("rational too large for the column format");
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(bytes.size()));
  out += bytes;
}

std::string read_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw NotFoundError("cannot open " + file.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file_atomic(const fs::path& file, const std::string& data) {
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, file);
}

bool highlight_matches(const HighlightRule& rule, const InvariantValue& v) {
  if (is_undefined(v)) return false;
  return v == rule.target;
}

}  // namespace

void write_column(const fs::path& file, InvariantKind kind, std::span<const InvariantValue> values) {
  if (values.size() > std::numeric_limits<std::uint32_t>::max())
    throw Error("column has more rows than the format supports");
  std::string out(kMagic, sizeof(kMagic));
  out.push_back(kind == InvariantKind::numeric ? 0 : 1);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(values.size()));
  for (const auto& v : values) {
    if (kind == InvariantKind::boolean) {
      auto* b = std::get_if<bool>(&v);
      out.push_back(b ? static_cast<char>(*b ? 1 : 0) : 2);
      continue;
    }
    auto* r = std::get_if<Rational>(&v);
    if (!r || !r->defined()) {
      put_le<std::int64_t>(out, 0);
      put_le<std::uint64_t>(out, 0);
      continue;
    }
    bool fits = r->num() >= std::numeric_limits<std::int64_t>::min() &&
                r->num() <= std::numeric_limits<std::int64_t>::max() && r->den() < kEscape;
    if (fits) {
      put_le<std::int64_t>(out, r->num().convert_to<std::int64_t>());
      put_le<std::uint64_t>(out, r->den().convert_to<std::uint64_t>());
    } else {
      put_le<std::int64_t>(out, 0);
      put_le<std::uint64_t>(out, kEscape);
      out.push_back(r->num() < 0 ? 1 : 0);
      put_magnitude(out, abs(r->num()));
      put_magnitude(out, r->den());
    }
  }
  write_file_atomic(file, out);
}

std::vector<InvariantValue> read_column(const fs::path& file) {
  Reader in(read_file(file), file);
  if (in.bytes(5) != std::string_view(kMagic, 5))
    throw Error("column file " + file.string() + " has a bad magic");
  auto kind = in.get<std::uint8_t>();
  if (kind > 1) throw Error("column file " + file.string() + " has unknown kind");
  auto rows = in.get<std::uint32_t>();
  std::vector<InvariantValue> out;
  out.reserve(rows);
  for (std::uint32_t i = 0; i < rows; ++i) {
    if (kind == 1) {
      auto b = in.get<std::uint8_t>();
      if (b > 2) throw Error("column file " + file.string() + " has a bad boolean");
      out.push_back(b == 2 ? InvariantValue{} : InvariantValue{b == 1});
      continue;
    }
    auto num = in.get<std::int64_t>();
    auto den = in.get<std::uint64_t>();
    if (den == 0) {
      out.push_back(Rational::undefined());
    } else if (den == kEscape) {
      auto sign = in.get<std::uint8_t>();
      BigInt n = in.magnitude();
      BigInt d = in.magnitude();
      out.push_back(Rational(sign ? BigInt(-n) : n, d));
    } else {
      out.push_back(Rational(BigInt(num), BigInt(den)));
    }
  }
  if (!in.done()) throw Error("column file " + file.string() + " has trailing bytes");
  return out;
}

std::vector<std::string> read_g6_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw NotFoundError("cannot open " + file.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  return lines;
}

void write_g6_file(const fs::path& file, std::span<const std::string> lines) {
  std::string data;
  for (const auto& l : lines) {
    data += l;
    data.push_back('\n');
  }
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  write_file_atomic(file, data);
}

std::vector<QueryRow> filter_degree_sequence(std::span<const QueryRow> rows,
                                             std::span<const int> sorted_degrees) {
  std::vector<QueryRow> out;
  for (const auto& r : rows) {
    auto seq = degree_sequence(from_graph6(r.signature));
    if (std::equal(seq.begin(), seq.end(), sorted_degrees.begin(), sorted_degrees.end()))
      out.push_back(r);
  }
  return out;
}

Store::Store(fs::path root, int ceiling) : root_(std::move(root)), ceiling_(ceiling) {}

fs::path Store::default_root() {
  const char* env = std::getenv("PF_DATA_DIR");
  return env && *env ? fs::path(env) : fs::path("data");
}

fs::path Store::corpus_dir(int order, GraphClass cls) const {
  return root_ / std::string(to_string(cls)) / ("order_" + std::to_string(order));
}

CorpusHandle Store::build(int order, GraphClass cls, std::span<const std::string> ids, Exec exec) {
  if (order < 1 || order > ceiling_)
    throw DomainError("order " + std::to_string(order) + " outside [1, " +
                      std::to_string(ceiling_) + "]");
  for (const auto& id : ids) invariant(id);

  fs::path dir = corpus_dir(order, cls);
  fs::create_directories(dir);
  fs::path g6 = dir / "graphs.g6";

  std::vector<Graph> graphs;
  if (fs::exists(g6)) {
    for (const auto& line : read_g6_file(g6)) graphs.push_back(from_graph6(line));
  } else {
    graphs = enumerate_order(order, cls, ceiling_, exec);
    std::vector<std::string> lines;
    lines.reserve(graphs.size());
    for (const auto& g : graphs) lines.push_back(to_graph6(g));
    write_g6_file(g6, lines);
  }
  for (const auto& id : ids) {
    auto values = evaluate_column(id, graphs, exec);
    write_column(dir / (id + ".col"), invariant(id).kind, values);
  }
  forget(order, cls);
  return open(order, cls);
}

CorpusHandle Store::open(int order, GraphClass cls) const {
  fs::path dir = corpus_dir(order, cls);
  if (!fs::exists(dir / "graphs.g6"))
    throw NotFoundError("corpus for order " + std::to_string(order) + ", class " +
                        std::string(to_string(cls)) + " is not built");
  CorpusHandle h{order, cls, signatures(order, cls).size(), dir, {}};
  for (const auto& d : registry())
    if (fs::exists(dir / (d.id + ".col"))) h.columns.push_back(d.id);
  return h;
}

Store::Corpus& Store::corpus(int order, GraphClass cls) const {
  auto key = std::make_pair(order, cls);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
  }
  std::unique_lock lock(mutex_);
  if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
  fs::path g6 = corpus_dir(order, cls) / "graphs.g6";
  if (!fs::exists(g6))
    throw NotFoundError("corpus for order " + std::to_string(order) + ", class " +
                        std::string(to_string(cls)) + " is not built");
  auto c = std::make_unique<Corpus>();
  c->signatures = read_g6_file(g6);
  return *(cache_[key] = std::move(c));
}

void Store::forget(int order, GraphClass cls) {
  std::unique_lock lock(mutex_);
  cache_.erase({order, cls});
}

const std::vector<std::string>& Store::signatures(int order, GraphClass cls) const {
  return corpus(order, cls).signatures;
}

const std::vector<InvariantValue>& Store::column(int order, GraphClass cls,
                                                 std::string_view id) const {
  invariant(id);
  Corpus& c = corpus(order, cls);
  {
    std::shared_lock lock(mutex_);
    if (auto it = c.columns.find(id); it != c.columns.end()) return *it->second;
  }
  std::unique_lock lock(mutex_);
  if (auto it = c.columns.find(id); it != c.columns.end()) return *it->second;
  fs::path file = corpus_dir(order, cls) / (std::string(id) + ".col");
  if (!fs::exists(file))
    throw NotFoundError("column '" + std::string(id) + "' is not built for order " +
                        std::to_string(order) + ", class " + std::string(to_string(cls)));
  auto values = std::make_shared<const std::vector<InvariantValue>>(read_column(file));
  if (values->size() != c.signatures.size())
    throw Error("column '" + std::string(id) + "' does not match the corpus row count");
  auto& slot = c.columns[std::string(id)];
  slot = std::move(values);
  return *slot;
}

std::vector<std::size_t> Store::filter(int order, GraphClass cls,
                                       std::span<const Constraint> constraints) const {
  std::vector<const std::vector<InvariantValue>*> cols;
  for (const auto& c : constraints) cols.push_back(&column(order, cls, c.invariant));
  std::vector<std::size_t> rows;
  const std::size_t n = signatures(order, cls).size();
  for (std::size_t i = 0; i < n; ++i) {
    bool keep = true;
    for (std::size_t k = 0; k < constraints.size() && keep; ++k)
      keep = satisfies(constraints[k], (*cols[k])[i]);
    if (keep) rows.push_back(i);
  }
  return rows;
}

QueryResult Store::query(const ProblemSpec& spec) const {
  validate(spec);
  const auto& sigs = signatures(spec.order, spec.graph_class);
  const auto& xs = column(spec.order, spec.graph_class, spec.x);
  const auto& ys = column(spec.order, spec.graph_class, spec.y);
  const std::vector<InvariantValue>* colors =
      spec.coloration ? &column(spec.order, spec.graph_class, *spec.coloration) : nullptr;
  const std::vector<InvariantValue>* marks =
      spec.highlight ? &column(spec.order, spec.graph_class, spec.highlight->invariant) : nullptr;
  std::vector<const std::vector<InvariantValue>*> extras;
  for (const auto& id : spec.extra_invariants)
    extras.push_back(&column(spec.order, spec.graph_class, id));

  QueryResult result;
  for (std::size_t i : filter(spec.order, spec.graph_class, spec.constraints)) {
    if (is_undefined(xs[i]) || is_undefined(ys[i])) {
      ++result.dropped_undefined;
      continue;
    }
    QueryRow row;
    row.index = i;
    row.signature = sigs[i];
    row.x = std::get<Rational>(xs[i]);
    row.y = std::get<Rational>(ys[i]);
    if (colors) row.color = (*colors)[i];
    if (marks) row.highlight = highlight_matches(*spec.highlight, (*marks)[i]);
    for (std::size_t k = 0; k < extras.size(); ++k)
      row.extras.emplace_back(spec.extra_invariants[k], (*extras[k])[i]);
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::vector<GraphRecord> Store::graphs_at(const ProblemSpec& spec,
                                          std::span<const Point2> coords) const {
  std::set<Point2> wanted(coords.begin(), coords.end());
  std::vector<GraphRecord> out;
  for (auto& row : query(spec).rows) {
    if (!wanted.contains(Point2{row.x, row.y})) continue;
    GraphRecord rec{row.signature, {}};
    rec.values[spec.x] = row.x;
    rec.values[spec.y] = row.y;
    if (row.color) rec.values[*spec.coloration] = *row.color;
    for (auto& [id, v] : row.extras) rec.values[id] = v;
    out.push_back(std::move(rec));
  }
  return out;
}

std::map<std::string, InvariantValue> Store::invariants_of(std::string_view sig,
                                                           std::span<const std::string> ids) const {
  Graph g = from_graph6(sig);
  for (const auto& id : ids) invariant(id);

  std::optional<std::size_t> row;
  if (g.order() >= 1 && fs::exists(corpus_dir(g.order(), GraphClass::all) / "graphs.g6")) {
    std::string canon = signature(g);
    const auto& sigs = signatures(g.order(), GraphClass::all);
    auto it = std::lower_bound(sigs.begin(), sigs.end(), canon);
    if (it != sigs.end() && *it == canon) row = static_cast<std::size_t>(it - sigs.begin());
  }
  std::map<std::string, InvariantValue> out;
  for (const auto& id : ids) {
    if (row && fs::exists(corpus_dir(g.order(), GraphClass::all) / (id + ".col")))
      out[id] = column(g.order(), GraphClass::all, id)[*row];
    else
      out[id] = eval(id, g);
  }
  return out;
}

}  // namespace pf
