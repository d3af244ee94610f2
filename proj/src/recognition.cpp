#include "semigraph/recognition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace semigraph {

namespace {

using Run = std::vector<std::size_t>;

constexpr QScalar kQuarter = QScalar::quarter();
constexpr QScalar kHalf = QScalar::half();
constexpr QScalar kOne = QScalar::one();
constexpr QScalar kTwo = QScalar::from_int(2);

// Entries that join consecutively adjacent vertices.
bool is_link(QScalar v) { return v == kQuarter || v == kHalf || v == kOne; }

bool is_corner(QScalar v) { return v == kHalf || v == kOne; }

bool is_end_class(VertexClass c) { return c == VertexClass::PureEnd || c == VertexClass::MiddleEnd; }

bool is_middle_class(VertexClass c) {
  return c == VertexClass::PureMiddle || c == VertexClass::MiddleEnd;
}

// Corner value 1 belongs to a pure end, 1/2 to a middle end.
bool corner_matches(VertexClass c, QScalar corner) {
  return corner == kOne ? c == VertexClass::PureEnd : c == VertexClass::MiddleEnd;
}

std::vector<VertexId> to_ids(const Run& run) {
  std::vector<VertexId> out;
  out.reserve(run.size());
  for (std::size_t v : run) out.emplace_back(v);
  return out;
}

Run canonical(Run run) {
  Run reversed(run.rbegin(), run.rend());
  return reversed < run ? reversed : run;
}

std::string pair_label(std::size_t i, std::size_t j) {
  return "(v" + std::to_string(i + 1) + ",v" + std::to_string(j + 1) + ")";
}

std::string run_label(const Run& run) {
  std::string out = "(";
  for (std::size_t k = 0; k < run.size(); ++k) {
    if (k) out += ",";
    out += "v" + std::to_string(run[k] + 1);
  }
  return out + ")";
}

std::vector<std::vector<std::size_t>> skeleton_neighbours(const SquareMatrix& m) {
  std::vector<std::vector<std::size_t>> nb(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j && is_link(m.at(i, j))) nb[i].push_back(j);
    }
  }
  return nb;
}

// Checks alphabet, zero diagonal and symmetry in a single row-major scan.
std::optional<Rejected> entry_violation(const SquareMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const QScalar v = m.at(i, j);
      const QScalar w = m.at(j, i);
      RejectionWitness wit{{VertexId(i), VertexId(j)}, {v, w}, {}, {}};
      if (!in_adjacency_alphabet(v)) {
        wit.detail = "entry " + pair_label(i, j) + " = " + v.to_string() + " is outside {0, 1/4, 1/2, 1, 2, ...}";
        return Rejected{RejectReason::IllegalEntry, std::move(wit)};
      }
      if (i == j && !v.is_zero()) {
        wit.detail = "diagonal entry " + pair_label(i, i) + " = " + v.to_string();
        return Rejected{RejectReason::NonzeroDiagonal, std::move(wit)};
      }
      if (v != w) {
        wit.detail = "entry " + pair_label(i, j) + " = " + v.to_string() + " but " +
                     pair_label(j, i) + " = " + w.to_string();
        return Rejected{RejectReason::AsymmetricInput, std::move(wit)};
      }
    }
  }
  return std::nullopt;
}

void throw_on_violation(const SquareMatrix& m) {
  if (auto bad = entry_violation(m)) {
    ErrorCode code = ErrorCode::IllegalEntry;
    if (bad->reason == RejectReason::AsymmetricInput) code = ErrorCode::AsymmetricInput;
    if (bad->reason == RejectReason::NonzeroDiagonal) code = ErrorCode::NonzeroDiagonal;
    throw Error(code, bad->witness.detail);
  }
}

// Does the compatibility graph on `items` admit a perfect matching?
class PerfectMatcher {
 public:
  explicit PerfectMatcher(const std::vector<std::vector<char>>& compatible)
      : compatible_(compatible), used_(compatible.size(), 0) {}

  bool run() { return match(0); }

 private:
  bool match(std::size_t from) {
    if (++steps_ > kStepLimit) return false;
    while (from < used_.size() && used_[from]) ++from;
    if (from == used_.size()) return true;
    used_[from] = 1;
    for (std::size_t k = from + 1; k < used_.size(); ++k) {
      if (used_[k] || !compatible_[from][k]) continue;
      used_[k] = 1;
      if (match(from + 1)) return true;
      used_[k] = 0;
    }
    used_[from] = 0;
    return false;
  }

  static constexpr std::size_t kStepLimit = 1'000'000;
  const std::vector<std::vector<char>>& compatible_;
  std::vector<char> used_;
  std::size_t steps_ = 0;
};

std::vector<VertexClass> classes_from_entries(const SquareMatrix& m) {
  const auto nb = skeleton_neighbours(m);
  std::vector<VertexClass> out(m.size(), VertexClass::Isolated);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto row = m.row(i);
    if (std::all_of(row.begin(), row.end(), [](QScalar v) { return v.is_zero(); })) continue;

    const auto& ns = nb[i];
    if (std::any_of(ns.begin(), ns.end(), [&](std::size_t j) { return m.at(i, j) == kQuarter; })) {
      out[i] = VertexClass::MiddleEnd;
      continue;
    }
    std::vector<std::vector<char>> compatible(ns.size(), std::vector<char>(ns.size(), 0));
    bool any_pair = false;
    for (std::size_t a = 0; a < ns.size(); ++a) {
      for (std::size_t b = a + 1; b < ns.size(); ++b) {
        if (m.at(ns[a], ns[b]) == kTwo) {
          compatible[a][b] = compatible[b][a] = 1;
          any_pair = true;
        }
      }
    }
    if (!any_pair) {
      out[i] = VertexClass::PureEnd;
    } else if (ns.size() % 2 == 0 && PerfectMatcher(compatible).run()) {
      out[i] = VertexClass::PureMiddle;
    } else {
      out[i] = VertexClass::MiddleEnd;
    }
  }
  return out;
}

// Depth-first enumeration of runs u1..ur whose principal submatrix follows the
// edge band: a(ui,uj) = j-i for j-i >= 2, interior links 1, corner links 1 or
// 1/2, and a lone 1/4 only for r = 2. With `classes` set, runs must also agree
// with the given vertex classes at both ends and in the interior.
class RunTracer {
 public:
  RunTracer(const SquareMatrix& m, const std::vector<std::vector<std::size_t>>& nb,
            const std::vector<VertexClass>* classes, std::size_t budget)
      : m_(m), nb_(nb), classes_(classes), budget_(budget), on_run_(m.size(), 0) {}

  void trace_from(std::size_t start, std::map<Run, std::size_t>& found) {
    if (classes_ && !is_end_class((*classes_)[start])) return;
    Run run{start};
    on_run_[start] = 1;
    for (std::size_t j : nb_[start]) {
      run.push_back(j);
      on_run_[j] = 1;
      dfs(run, found);
      on_run_[j] = 0;
      run.pop_back();
    }
    on_run_[start] = 0;
  }

  bool exhausted() const noexcept { return exhausted_; }

 private:
  QScalar a(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  VertexClass cls(std::size_t v) const { return (*classes_)[v]; }

  bool closable(const Run& run) const {
    if (!classes_) return true;
    const std::size_t k = run.size();
    if (k == 2) {
      const QScalar v = a(run[0], run[1]);
      const VertexClass c0 = cls(run[0]);
      const VertexClass c1 = cls(run[1]);
      if (v == kOne) return c0 == VertexClass::PureEnd && c1 == VertexClass::PureEnd;
      if (v == kQuarter) return c0 == VertexClass::MiddleEnd && c1 == VertexClass::MiddleEnd;
      return (c0 == VertexClass::PureEnd && c1 == VertexClass::MiddleEnd) ||
             (c0 == VertexClass::MiddleEnd && c1 == VertexClass::PureEnd);
    }
    return corner_matches(cls(run[k - 1]), a(run[k - 2], run[k - 1]));
  }

  bool extendable(const Run& run) const {
    const std::size_t k = run.size();
    const QScalar head = a(run[0], run[1]);
    if (!is_corner(head)) return false;
    if (k >= 3 && a(run[k - 2], run[k - 1]) != kOne) return false;
    if (classes_) {
      if (!corner_matches(cls(run[0]), head)) return false;
      if (!is_middle_class(cls(run[k - 1]))) return false;
    }
    return true;
  }

  void dfs(Run& run, std::map<Run, std::size_t>& found) {
    if (++steps_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (closable(run)) ++found[canonical(run)];
    if (!extendable(run)) return;

    const std::size_t k = run.size();
    const std::size_t last = run.back();
    for (std::size_t x : nb_[last]) {
      if (on_run_[x] || !is_corner(a(last, x))) continue;
      bool band = true;
      for (std::size_t l = 0; l + 1 < k && band; ++l) {
        band = a(run[l], x) == QScalar::from_int(static_cast<std::int64_t>(k - l));
      }
      if (!band) continue;
      run.push_back(x);
      on_run_[x] = 1;
      dfs(run, found);
      on_run_[x] = 0;
      run.pop_back();
      if (exhausted_) return;
    }
  }

  const SquareMatrix& m_;
  const std::vector<std::vector<std::size_t>>& nb_;
  const std::vector<VertexClass>* classes_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  bool exhausted_ = false;
  std::vector<char> on_run_;
};

// Index of the nonzero upper-triangle pairs.
struct PairIndex {
  explicit PairIndex(const SquareMatrix& m) : n(m.size()), id(n * n, kNone) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!m.at(i, j).is_zero()) {
          id[i * n + j] = id[j * n + i] = pairs.size();
          pairs.emplace_back(i, j);
        }
      }
    }
  }

  std::size_t of(std::size_t i, std::size_t j) const { return id[i * n + j]; }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t n;
  std::vector<std::size_t> id;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

std::optional<Semigraph> build_from_runs(std::size_t n, const std::vector<Run>& runs) {
  try {
    return build_semigraph(n, runs);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool realizes(const std::optional<Semigraph>& g, const SquareMatrix& m) {
  return g && adjacency(*g).square() == m;
}

// Exact cover of the nonzero pairs by band runs, pruned by the vertex roles
// each run forces (an end with corner 1 is a pure end, so it may never sit
// inside another run). Every complete cover is verified against the matrix.
class CoverSearch {
 public:
  CoverSearch(const SquareMatrix& m, const PairIndex& index, std::vector<Run> candidates,
              std::size_t budget)
      : m_(m), index_(index), cands_(std::move(candidates)), budget_(budget) {
    std::stable_sort(cands_.begin(), cands_.end(),
                     [](const Run& x, const Run& y) { return x.size() > y.size(); });
    cand_pairs_.resize(cands_.size());
    pair_cands_.resize(index_.pairs.size());
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      const Run& run = cands_[c];
      for (std::size_t x = 0; x < run.size(); ++x) {
        for (std::size_t y = x + 1; y < run.size(); ++y) {
          const std::size_t p = index_.of(run[x], run[y]);
          cand_pairs_[c].push_back(p);
          pair_cands_[p].push_back(c);
        }
      }
    }
    covered_.assign(index_.pairs.size(), 0);
    blocked_.assign(cands_.size(), 0);
    pure_end_.assign(m.size(), 0);
    middle_end_.assign(m.size(), 0);
    middle_.assign(m.size(), 0);
  }

  void run(std::size_t limit) {
    limit_ = limit;
    search();
  }

  bool exhausted() const noexcept { return exhausted_; }
  const std::vector<Semigraph>& solutions() const noexcept { return solutions_; }

 private:
  void apply(std::size_t c, int sign) {
    for (std::size_t p : cand_pairs_[c]) {
      covered_[p] = sign > 0;
      for (std::size_t d : pair_cands_[p]) blocked_[d] += sign;
    }
    const Run& run = cands_[c];
    const std::size_t r = run.size();
    if (r == 2) {
      const QScalar v = m_.at(run[0], run[1]);
      if (v == kOne) {
        pure_end_[run[0]] += sign;
        pure_end_[run[1]] += sign;
      } else if (v == kQuarter) {
        middle_end_[run[0]] += sign;
        middle_end_[run[1]] += sign;
      }
      return;
    }
    auto mark_end = [&](std::size_t v, QScalar corner) {
      (corner == kOne ? pure_end_ : middle_end_)[v] += sign;
    };
    mark_end(run[0], m_.at(run[0], run[1]));
    mark_end(run[r - 1], m_.at(run[r - 2], run[r - 1]));
    for (std::size_t k = 1; k + 1 < r; ++k) middle_[run[k]] += sign;
  }

  bool conflicted(std::size_t c) const {
    for (std::size_t v : cands_[c]) {
      if (pure_end_[v] > 0 && (middle_[v] > 0 || middle_end_[v] > 0)) return true;
    }
    return false;
  }

  void search() {
    if (solutions_.size() >= limit_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    std::size_t best = PairIndex::kNone;
    std::size_t best_live = static_cast<std::size_t>(-1);
    for (std::size_t p = 0; p < covered_.size(); ++p) {
      if (covered_[p]) continue;
      std::size_t live = 0;
      for (std::size_t c : pair_cands_[p]) live += blocked_[c] == 0;
      if (live < best_live) {
        best_live = live;
        best = p;
        if (live == 0) break;
      }
    }
    if (best == PairIndex::kNone) {
      chosen_runs_.clear();
      for (std::size_t c : chosen_) chosen_runs_.push_back(cands_[c]);
      auto g = build_from_runs(m_.size(), chosen_runs_);
      if (realizes(g, m_)) solutions_.push_back(std::move(*g));
      return;
    }
    if (best_live == 0) return;

    const std::vector<std::size_t> options = pair_cands_[best];
    for (std::size_t c : options) {
      if (blocked_[c] != 0) continue;
      apply(c, +1);
      chosen_.push_back(c);
      if (!conflicted(c)) search();
      chosen_.pop_back();
      apply(c, -1);
      if (exhausted_ || solutions_.size() >= limit_) return;
    }
  }

  const SquareMatrix& m_;
  const PairIndex& index_;
  std::vector<Run> cands_;
  std::vector<std::vector<std::size_t>> cand_pairs_;
  std::vector<std::vector<std::size_t>> pair_cands_;
  std::vector<char> covered_;
  std::vector<int> blocked_;
  std::vector<int> pure_end_;
  std::vector<int> middle_end_;
  std::vector<int> middle_;
  std::vector<std::size_t> chosen_;
  std::vector<Run> chosen_runs_;
  std::vector<Semigraph> solutions_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::size_t limit_ = 1;
  bool exhausted_ = false;
};

constexpr std::size_t kTraceBudget = 5'000'000;

Rejected diagnose(const SquareMatrix& m, const PairIndex& index, const std::vector<Run>& traced) {
  std::vector<std::vector<std::size_t>> claims(index.pairs.size());
  for (std::size_t t = 0; t < traced.size(); ++t) {
    const Run& run = traced[t];
    for (std::size_t x = 0; x < run.size(); ++x) {
      for (std::size_t y = x + 1; y < run.size(); ++y) claims[index.of(run[x], run[y])].push_back(t);
    }
  }
  for (std::size_t p = 0; p < claims.size(); ++p) {
    if (claims[p].size() < 2) continue;
    const auto [i, j] = index.pairs[p];
    const Run& first = traced[claims[p][0]];
    const Run& second = traced[claims[p][1]];
    RejectionWitness wit{{VertexId(i), VertexId(j)}, {m.at(i, j)}, {to_ids(first), to_ids(second)},
                         "pair " + pair_label(i, j) + " is claimed by traced edges " +
                             run_label(first) + " and " + run_label(second)};
    return Rejected{RejectReason::OverlappingEdges, std::move(wit)};
  }

  std::vector<std::vector<VertexId>> all_runs;
  for (const Run& run : traced) all_runs.push_back(to_ids(run));
  for (std::size_t p = 0; p < claims.size(); ++p) {
    if (!claims[p].empty()) continue;
    const auto [i, j] = index.pairs[p];
    RejectionWitness wit{{VertexId(i), VertexId(j)}, {m.at(i, j)}, all_runs,
                         "entry " + pair_label(i, j) + " = " + m.at(i, j).to_string() +
                             " is not explained by any traced edge"};
    return Rejected{RejectReason::CoverageGap, std::move(wit)};
  }

  // The traced runs partition the nonzero pairs, so only corner values can differ.
  const auto g = build_from_runs(m.size(), traced);
  if (g) {
    const SymMatrix rebuilt = adjacency(*g);
    for (std::size_t p = 0; p < index.pairs.size(); ++p) {
      const auto [i, j] = index.pairs[p];
      if (rebuilt.at(i, j) == m.at(i, j)) continue;
      const Run& holder = traced[claims[p][0]];
      RejectionWitness wit{{VertexId(i), VertexId(j)}, {m.at(i, j), rebuilt.at(i, j)}, {to_ids(holder)},
                           "entry " + pair_label(i, j) + " = " + m.at(i, j).to_string() +
                               " but the end classes of traced edge " + run_label(holder) +
                               " give " + rebuilt.at(i, j).to_string()};
      return Rejected{RejectReason::EndpointClassMismatch, std::move(wit)};
    }
  }
  return Rejected{RejectReason::CoverageGap,
                  RejectionWitness{{}, {}, all_runs, "traced edges do not form a semigraph"}};
}

}  // namespace

std::string_view to_string(RejectReason reason) noexcept {
  switch (reason) {
    case RejectReason::IllegalEntry: return "IllegalEntry";
    case RejectReason::AsymmetricInput: return "AsymmetricInput";
    case RejectReason::NonzeroDiagonal: return "NonzeroDiagonal";
    case RejectReason::BrokenDistanceRun: return "BrokenDistanceRun";
    case RejectReason::OverlappingEdges: return "OverlappingEdges";
    case RejectReason::CoverageGap: return "CoverageGap";
    case RejectReason::EndpointClassMismatch: return "EndpointClassMismatch";
  }
  return "Unknown";
}

std::vector<VertexClass> detect_classes(const SquareMatrix& m) {
  throw_on_violation(m);
  RecognitionOptions opts;
  opts.allow_isolated = true;
  opts.check_uniqueness = false;
  const RecognitionOutcome outcome = reconstruct(m, opts);
  if (outcome.accepted()) return outcome.accepted_value().classes;
  return classes_from_entries(m);
}

std::vector<VertexClass> detect_classes(const SymMatrix& m) { return detect_classes(m.square()); }

RecognitionOutcome reconstruct(const SquareMatrix& m, const RecognitionOptions& options) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot recognize an empty matrix");

  if (auto bad = entry_violation(m)) return *bad;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const QScalar v = m.at(i, j);
      if (v.is_integer() && v.integer() > static_cast<std::int64_t>(n) - 1) {
        return Rejected{RejectReason::BrokenDistanceRun,
                        {{VertexId(i), VertexId(j)}, {v}, {},
                         "distance " + v.to_string() + " at " + pair_label(i, j) +
                             " needs an edge longer than the " + std::to_string(n) + " vertices"}};
      }
    }
  }

  if (!options.allow_isolated) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = m.row(i);
      if (std::all_of(row.begin(), row.end(), [](QScalar v) { return v.is_zero(); })) {
        return Rejected{RejectReason::CoverageGap,
                        {{VertexId(i)}, {}, {},
                         "row v" + std::to_string(i + 1) + " is zero, so no edge covers the vertex"}};
      }
    }
  }

  const PairIndex index(m);
  const auto nb = skeleton_neighbours(m);

  // Every band run, regardless of classes: the search space of the cover.
  std::map<Run, std::size_t> band_runs;
  RunTracer any_run(m, nb, nullptr, kTraceBudget);
  for (std::size_t s = 0; s < n && !any_run.exhausted(); ++s) any_run.trace_from(s, band_runs);
  const bool cover_possible = !any_run.exhausted();

  if (cover_possible) {
    std::vector<char> supported(index.pairs.size(), 0);
    for (const auto& [run, hits] : band_runs) {
      for (std::size_t x = 0; x < run.size(); ++x) {
        for (std::size_t y = x + 1; y < run.size(); ++y) supported[index.of(run[x], run[y])] = 1;
      }
    }
    for (std::size_t p = 0; p < index.pairs.size(); ++p) {
      if (supported[p]) continue;
      const auto [i, j] = index.pairs[p];
      return Rejected{RejectReason::BrokenDistanceRun,
                      {{VertexId(i), VertexId(j)}, {m.at(i, j)}, {},
                       "no run with distances 1.." + m.at(i, j).to_string() + " joins " +
                           pair_label(i, j)}};
    }
  }

  // Tracing from end vertices with classes read off the matrix.
  const auto classes = classes_from_entries(m);
  std::map<Run, std::size_t> traced_map;
  RunTracer end_runs(m, nb, &classes, kTraceBudget);
  for (std::size_t s = 0; s < n; ++s) end_runs.trace_from(s, traced_map);
  std::vector<Run> traced;
  for (const auto& [run, hits] : traced_map) traced.push_back(run);

  std::optional<Semigraph> direct = build_from_runs(n, traced);
  if (!realizes(direct, m)) direct.reset();

  std::vector<Semigraph> found;
  bool search_complete = false;
  if (cover_possible && (!direct || options.check_uniqueness)) {
    std::vector<Run> cands;
    for (const auto& [run, hits] : band_runs) cands.push_back(run);
    CoverSearch search(m, index, std::move(cands), options.search_budget);
    search.run(2);
    found = search.solutions();
    search_complete = !search.exhausted();
  }

  if (!direct && found.empty()) return diagnose(m, index, traced);

  Accepted acc{direct ? *direct : found.front(), {}, direct.has_value(), false, std::nullopt};
  acc.classes = classify_vertices(acc.semigraph);
  for (Semigraph& g : found) {
    if (!(g == acc.semigraph)) {
      acc.alternative = std::move(g);
      break;
    }
  }
  acc.uniqueness_checked = acc.alternative.has_value() || (options.check_uniqueness && search_complete);
  return acc;
}

RecognitionOutcome reconstruct(const SymMatrix& m, const RecognitionOptions& options) {
  return reconstruct(m.square(), options);
}

SemigraphicalResult is_semigraphical(const SquareMatrix& m, const RecognitionOptions& options) {
  RecognitionOutcome outcome = reconstruct(m, options);
  const bool ok = outcome.accepted() && adjacency(outcome.accepted_value().semigraph).square() == m;
  return {ok, std::move(outcome)};
}

SemigraphicalResult is_semigraphical(const SymMatrix& m, const RecognitionOptions& options) {
  return is_semigraphical(m.square(), options);
}

}  // namespace semigraph
