#include "foursq/quad_enum.hpp"

#include <algorithm>
#include <set>

#include "foursq/errors.hpp"

namespace foursq {
namespace {

using Point = std::array<Int, kVarCount>;
using PointSpan = std::span<const Int, kVarCount>;

// Number of signed values of magnitude `mag` admitted by d; the first is +mag.
inline int variants(Domain d, Int mag) {
  switch (d) {
    case Domain::N: return 1;
    case Domain::Z: return mag == 0 ? 1 : 2;
    case Domain::ZPos: return mag == 0 ? 0 : 1;
  }
  return 0;
}

// Squares mod 64 occupy 12 residues; this rejects most non-squares before isqrt.
constexpr std::uint64_t kSquareMod64 = [] {
  std::uint64_t mask = 0;
  for (int i = 0; i < 64; ++i) mask |= std::uint64_t{1} << ((i * i) % 64);
  return mask;
}();

inline bool square_root(Int v, Int& root) {
  if (((kSquareMod64 >> (static_cast<std::uint64_t>(v) & 63U)) & 1U) == 0) return false;
  root = static_cast<Int>(isqrt(static_cast<std::uint64_t>(v)));
  return root * root == v;
}

inline bool key_less(Int a, Int b) {
  const Int ma = a < 0 ? -a : a;
  const Int mb = b < 0 ? -b : b;
  if (ma != mb) return ma < mb;
  return a > b;
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide ceil_div(Wide a, Wide b) { return -floor_div(-a, b); }

Wide wide_pow(Wide t, int m) {
  Wide r = 1;
  for (int i = 0; i < m; ++i) r = checked_mul(r, t);
  return r;
}

// Largest t with t^m <= q (m odd or q >= 0).
Wide floor_root(Wide q, int m) {
  if (q >= 0) return static_cast<Wide>(iroot(static_cast<unsigned __int128>(q), m));
  const Wide r = static_cast<Wide>(iroot(static_cast<unsigned __int128>(-q), m));
  return wide_pow(r, m) == -q ? -r : -r - 1;
}

// Smallest t with t^m >= q (m odd or q >= 0).
Wide ceil_root(Wide q, int m) {
  const Wide r = floor_root(q, m);
  return wide_pow(r, m) == q ? r : r + 1;
}

// Calls f(t, d*t^m) for every class value in [lo, hi], t ascending. T is the
// loop type; Int is only valid when [lo, hi] fits in 64 bits.
template <class T, class F>
void class_values(const PowerClass& cls, Wide lo, Wide hi, F&& f) {
  if (lo > hi) return;
  if (cls.is_zero()) {
    if (lo <= 0 && 0 <= hi) f(T{0}, T{0});
    return;
  }
  const Wide d = cls.scale();
  const int m = cls.exponent();
  const Wide qhi = floor_div(hi, d);
  const Wide qlo = ceil_div(lo, d);
  Wide tmin;
  Wide tmax;
  if (cls.nonneg_root()) {
    if (qhi < 0) return;
    tmax = floor_root(qhi, m);
    tmin = qlo <= 0 ? 0 : ceil_root(qlo, m);
  } else {
    tmax = floor_root(qhi, m);
    tmin = ceil_root(qlo, m);
  }
  Wide step = 1;
  if (cls.even_root()) {
    step = 2;
    if (tmin % 2 != 0) ++tmin;
  }
  const T dd = static_cast<T>(d);
  for (T t = static_cast<T>(tmin); t <= static_cast<T>(tmax); t += static_cast<T>(step)) {
    T v = dd;
    for (int i = 0; i < m; ++i) v *= t;
    f(t, v);
  }
}

constexpr Wide kNarrowLimit = Wide{1} << 62;

bool fits_narrow(Wide v) { return v > -kNarrowLimit && v < kNarrowLimit; }

// Pruning plan derived from a spec.
struct Plan {
  std::array<std::vector<const SideClause*>, kVarCount + 1> clauses_at{};
  int target_depth = kVarCount;  // depth at which every alternative is decidable
  // Linear solve for z: the single target is c*z + R(x, y).
  bool solve_z = false;
  const PowerTarget* target = nullptr;
  Int z_coefficient = 0;
};

int depth_of(unsigned mask) {
  int d = 1;
  for (int v = 0; v < kVarCount; ++v) {
    if ((mask >> v) & 1U) d = v + 1;
  }
  return d;
}

unsigned target_mask(const Target& t) {
  if (const auto* pt = std::get_if<PowerTarget>(&t)) return pt->poly.variable_mask();
  if (const auto* zt = std::get_if<ZeroProductTarget>(&t)) {
    unsigned m = 0;
    for (const auto& f : zt->factors) m |= f.variable_mask();
    return m;
  }
  const auto& lt = std::get<LegsTarget>(t);
  return lt.p.variable_mask() | lt.q.variable_mask();
}

Plan make_plan(const ConstraintSpec& spec) {
  Plan plan;
  for (const auto& clause : spec.side_conditions) {
    plan.clauses_at[static_cast<std::size_t>(depth_of(clause.variable_mask()))].push_back(&clause);
  }
  int depth = 1;
  for (const auto& t : spec.alternatives) depth = std::max(depth, depth_of(target_mask(t)));
  plan.target_depth = depth;

  if (spec.alternatives.size() == 1) {
    if (const auto* pt = std::get_if<PowerTarget>(&spec.alternatives[0])) {
      const Polynomial& p = pt->poly;
      if (!p.depends_on(3) && p.depends_on(2)) {
        bool linear = true;
        Int c = 0;
        for (const auto& term : p.terms()) {
          if (term.exponents[2] == 0) continue;
          if (term.exponents == Exponents{0, 0, 1, 0}) {
            c = term.coefficient;
          } else {
            linear = false;
          }
        }
        if (linear && c != 0) {
          plan.solve_z = true;
          plan.target = pt;
          plan.z_coefficient = c;
        }
      }
    }
  }
  return plan;
}

class Search {
 public:
  Search(Int n, const ConstraintSpec& spec, const SearchOptions& options, SearchStats* stats)
      : n_(n), spec_(spec), prune_(options.prune), stats_(stats) {
    require_in_cap(n);
    if (prune_) plan_ = make_plan(spec);
  }

  // Calls leaf(point, witness) for each satisfier until it returns true.
  template <class Leaf>
  void run(Leaf&& leaf) {
    const DomainSet& dom = spec_.domains;
    Point p{};
    auto emit_w = [&](Int aw) -> bool {
      const int cw = variants(dom[3], aw);
      for (int sw = 0; sw < cw; ++sw) {
        p[3] = sw ? -aw : aw;
        if (stats_) ++stats_->visited;
        if (auto w = satisfies_point(PointSpan(p), spec_)) {
          if (leaf(p, *w)) return true;
        }
      }
      return false;
    };

    const Int ax_max = static_cast<Int>(isqrt(static_cast<std::uint64_t>(n_)));
    for (Int ax = 0; ax <= ax_max; ++ax) {
      const int cx = variants(dom[0], ax);
      for (int sx = 0; sx < cx; ++sx) {
        p[0] = sx ? -ax : ax;
        if (prune_ && !prefix_ok(1, p)) continue;
        const Int rx = n_ - ax * ax;
        const Int ay_max = static_cast<Int>(isqrt(static_cast<std::uint64_t>(rx)));
        for (Int ay = 0; ay <= ay_max; ++ay) {
          const int cy = variants(dom[1], ay);
          for (int sy = 0; sy < cy; ++sy) {
            p[1] = sy ? -ay : ay;
            if (prune_ && !prefix_ok(2, p)) continue;
            const Int ry = rx - ay * ay;
            if (plan_.solve_z) {
              if (solved_z(p, ry, emit_w)) return;
              continue;
            }
            // Two-pointer walk: aw tracks floor(sqrt(ry - az^2)).
            Int aw = static_cast<Int>(isqrt(static_cast<std::uint64_t>(ry)));
            for (Int az = 0; az * az <= ry; ++az) {
              const Int rz = ry - az * az;
              while (aw * aw > rz) --aw;
              if (aw * aw != rz) continue;
              const int cz = variants(dom[2], az);
              for (int sz = 0; sz < cz; ++sz) {
                p[2] = sz ? -az : az;
                if (prune_ && !prefix_ok(3, p)) continue;
                if (emit_w(aw)) return;
              }
            }
          }
        }
      }
    }
  }

 private:
  bool prefix_ok(int depth, const Point& p) {
    for (const SideClause* c : plan_.clauses_at[static_cast<std::size_t>(depth)]) {
      if (!c->holds(PointSpan(p))) {
        if (stats_) ++stats_->pruned;
        return false;
      }
    }
    if (depth == plan_.target_depth && depth < kVarCount) {
      for (const auto& t : spec_.alternatives) {
        if (check_target(t, PointSpan(p))) return true;
      }
      if (stats_) ++stats_->pruned;
      return false;
    }
    return true;
  }

  template <class EmitW>
  bool solved_z(Point& p, Int ry, EmitW& emit_w) {
    const Domain dz = spec_.domains[2];
    const Int zmax = static_cast<Int>(isqrt(static_cast<std::uint64_t>(ry)));
    const Int zlo = dz == Domain::Z ? -zmax : dz == Domain::ZPos ? 1 : 0;
    const Int zhi = zmax;
    if (zlo > zhi) return false;
    p[2] = 0;
    p[3] = 0;
    const Wide r = plan_.target->poly.eval(PointSpan(p));
    const Wide c = plan_.z_coefficient;
    const Wide v1 = c * zlo + r;
    const Wide v2 = c * zhi + r;
    candidates_.clear();
    auto collect = [&](auto, auto v) {
      using T = decltype(v);
      const T diff = v - static_cast<T>(r);
      if (diff % static_cast<T>(c) != 0) return;
      const T z = diff / static_cast<T>(c);
      if (z < zlo || z > zhi) return;
      candidates_.push_back(static_cast<Int>(z));
    };
    const Wide lo = std::min(v1, v2);
    const Wide hi = std::max(v1, v2);
    if (fits_narrow(lo) && fits_narrow(hi) && fits_narrow(r)) {
      class_values<Int>(plan_.target->cls, lo, hi, collect);
    } else {
      class_values<Wide>(plan_.target->cls, lo, hi, collect);
    }
    if (!std::is_sorted(candidates_.begin(), candidates_.end(), key_less)) {
      std::sort(candidates_.begin(), candidates_.end(), key_less);
    }
    for (const Int z : candidates_) {
      const Int rz = ry - z * z;
      Int aw;
      if (!square_root(rz, aw)) continue;
      p[2] = z;
      if (!prefix_ok(3, p)) continue;
      if (emit_w(aw)) return true;
    }
    return false;
  }

  Int n_;
  const ConstraintSpec& spec_;
  bool prune_;
  SearchStats* stats_;
  Plan plan_;
  std::vector<Int> candidates_;
};

}  // namespace

bool for_each_representation(Int n, const DomainSet& domains, const RepresentationVisitor& visit) {
  ConstraintSpec all;
  all.alternatives.push_back(PowerTarget{Polynomial{}, PowerClass::zero(), 1});
  all.domains = domains;
  bool stopped = false;
  Search search(n, all, SearchOptions{false}, nullptr);
  search.run([&](const Point& p, const Witness&) {
    stopped = visit(Representation(n, p, domains));
    return stopped;
  });
  return stopped;
}

std::vector<Representation> enumerate_four_squares(Int n, const DomainSet& domains) {
  std::vector<Representation> out;
  for_each_representation(n, domains, [&](const Representation& r) {
    out.push_back(r);
    return false;
  });
  return out;
}

std::uint64_t count_four_squares(Int n, const DomainSet& domains) {
  std::uint64_t count = 0;
  for_each_representation(n, domains, [&](const Representation&) {
    ++count;
    return false;
  });
  return count;
}

void for_each_constrained(Int n, const ConstraintSpec& spec,
                          const std::function<bool(const Found&)>& visit,
                          const SearchOptions& options, SearchStats* stats) {
  Search search(n, spec, options, stats);
  search.run([&](const Point& p, const Witness& w) {
    return visit(Found{Representation(n, p, spec.domains), w});
  });
}

std::optional<Found> find_constrained(Int n, const ConstraintSpec& spec,
                                      const SearchOptions& options, SearchStats* stats) {
  std::optional<Found> out;
  Search search(n, spec, options, stats);
  search.run([&](const Point& p, const Witness& w) {
    out.emplace(Found{Representation(n, p, spec.domains), w});
    return true;
  });
  return out;
}

DedupRule DedupRule::canonical_by(std::string_view conditions) {
  return {Kind::SideConditionCanonical, parse_side_conditions(conditions)};
}

DedupRule DedupRule::parse(std::string_view text) {
  if (text == "ordered") return ordered();
  if (text == "unordered") return unordered();
  constexpr std::string_view kPrefix = "canonical:";
  if (text.substr(0, kPrefix.size()) == kPrefix) return canonical_by(text.substr(kPrefix.size()));
  throw std::invalid_argument("unknown dedup rule '" + std::string(text) + "'");
}

std::string DedupRule::to_string() const {
  switch (kind) {
    case Kind::Ordered: return "ordered";
    case Kind::UnorderedMultiset: return "unordered";
    case Kind::SideConditionCanonical: {
      std::string out = "canonical:";
      for (std::size_t i = 0; i < canonical.size(); ++i) {
        if (i) out += ';';
        out += canonical[i].to_string();
      }
      return out;
    }
  }
  return {};
}

std::uint64_t count_constrained(Int n, const ConstraintSpec& spec, const DedupRule& dedup,
                                const SearchOptions& options) {
  if (dedup.kind == DedupRule::Kind::SideConditionCanonical) {
    ConstraintSpec narrowed = spec;
    narrowed.side_conditions.insert(narrowed.side_conditions.end(), dedup.canonical.begin(),
                                    dedup.canonical.end());
    return count_constrained(n, narrowed, DedupRule::ordered(), options);
  }
  std::uint64_t count = 0;
  std::set<Point> seen;
  Search search(n, spec, options, nullptr);
  search.run([&](const Point& p, const Witness&) {
    if (dedup.kind == DedupRule::Kind::Ordered) {
      ++count;
      return false;
    }
    // Sort values within each group of like-domained variables.
    Point key = p;
    for (Domain d : {Domain::N, Domain::Z, Domain::ZPos}) {
      std::vector<std::size_t> idx;
      std::vector<Int> vals;
      for (std::size_t i = 0; i < kVarCount; ++i) {
        if (spec.domains[i] == d) {
          idx.push_back(i);
          vals.push_back(p[i]);
        }
      }
      std::sort(vals.begin(), vals.end());
      for (std::size_t k = 0; k < idx.size(); ++k) key[idx[k]] = vals[k];
    }
    seen.insert(key);
    return false;
  });
  return dedup.kind == DedupRule::Kind::Ordered ? count : seen.size();
}

}  // namespace foursq
