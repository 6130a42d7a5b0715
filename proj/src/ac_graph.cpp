#include "acgraph/ac_graph.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "sha256.hpp"

namespace acg {

namespace {

constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

std::vector<Code> powers(std::size_t n, std::size_t k) {
  std::vector<Code> p(k + 1, 1);
  for (std::size_t i = 1; i <= k; ++i) p[i] = p[i - 1] * n;
  return p;
}

/// Code -> vertex position. Flat array when N_k fills at least 1/16 of the
/// code space, hash map otherwise.
class CodeIndex {
 public:
  CodeIndex(const std::vector<Code>& codes, Code space) {
    if (codes.size() * 16 >= space) {
      dense_.assign(space, kAbsent);
      for (std::uint32_t p = 0; p < codes.size(); ++p) dense_[codes[p]] = p;
    } else {
      sparse_.reserve(codes.size());
      for (std::uint32_t p = 0; p < codes.size(); ++p) sparse_.emplace(codes[p], p);
    }
  }

  std::uint32_t find(Code c) const {
    if (!dense_.empty()) return dense_[c];
    auto it = sparse_.find(c);
    return it == sparse_.end() ? kAbsent : it->second;
  }

 private:
  std::vector<std::uint32_t> dense_;
  std::unordered_map<Code, std::uint32_t> sparse_;
};

/// Union-find with atomic parent links. The root of a union is always the
/// smaller index, so linking never creates cycles under contention.
class ConcurrentDsu {
 public:
  explicit ConcurrentDsu(std::size_t n) : parent_(n) {
    for (std::uint32_t i = 0; i < n; ++i) parent_[i].store(i, std::memory_order_relaxed);
  }

  std::uint32_t find(std::uint32_t x) {
    while (true) {
      std::uint32_t p = parent_[x].load(std::memory_order_relaxed);
      if (p == x) return x;
      std::uint32_t gp = parent_[p].load(std::memory_order_relaxed);
      if (gp != p) parent_[x].compare_exchange_weak(p, gp, std::memory_order_relaxed);
      x = gp;
    }
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    while (true) {
      a = find(a);
      b = find(b);
      if (a == b) return;
      if (a < b) std::swap(a, b);
      std::uint32_t expected = a;
      if (parent_[a].compare_exchange_strong(expected, b, std::memory_order_relaxed)) return;
    }
  }

 private:
  std::vector<std::atomic<std::uint32_t>> parent_;
};

void require_in_nk(const KTuple& t, const MoveAlphabet& alphabet, const char* which) {
  for (Element e : t.entries)
    if (!alphabet.group().contains(e))
      throw InputError(std::string("tuple ") + which + " has an entry outside the group");
  if (!is_n_generating(t, alphabet.group(), alphabet.operators()))
    throw InputError(std::string("tuple ") + which + " is not normally generating");
}

}  // namespace

Code tuple_space_size(std::size_t n, std::size_t k) {
  constexpr Code limit = Code{1} << 63;
  Code size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && size > limit / n) throw BudgetExceeded("tuple code space exceeds 2^63");
    size *= n;
  }
  return size;
}

Code KTuple::code(std::size_t n) const {
  Code c = 0;
  for (std::size_t i = entries.size(); i-- > 0;) c = c * n + entries[i];
  return c;
}

KTuple KTuple::from_code(Code code, std::size_t n, std::size_t k) {
  KTuple t{std::vector<Element>(k)};
  for (std::size_t i = 0; i < k; ++i) {
    t.entries[i] = static_cast<Element>(code % n);
    code /= n;
  }
  return t;
}

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::RightMult: return "RightMult";
    case MoveKind::LeftMult: return "LeftMult";
    case MoveKind::Invert: return "Invert";
    case MoveKind::Conjugate: return "Conjugate";
  }
  return "?";
}

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent: return "equivalent";
    case Equivalence::Different: return "different";
    case Equivalence::Inconclusive: return "inconclusive";
  }
  return "?";
}

// --- MoveAlphabet -------------------------------------------------------------

MoveAlphabet::MoveAlphabet(GroupPtr group, std::span<const Element> conjugators, OperatorSet ops)
    : group_(std::move(group)), ops_(std::move(ops)) {
  for (Element s : conjugators) {
    if (!group_->contains(s)) throw InputError("conjugator outside the group");
    conjugators_.push_back(s);
    conjugators_.push_back(group_->inv(s));
  }
  std::sort(conjugators_.begin(), conjugators_.end());
  conjugators_.erase(std::unique(conjugators_.begin(), conjugators_.end()), conjugators_.end());
  for (const auto& a : ops_.autos) {
    if (a.perm.size() != group_->order()) throw InputError("operator does not act on the group");
    inverse_ops_.autos.push_back(a.inverse());
  }
}

MoveAlphabet MoveAlphabet::with_generators(GroupPtr group, OperatorSet ops) {
  std::vector<Element> gens = group->generators();
  return MoveAlphabet(std::move(group), gens, std::move(ops));
}

MoveAlphabet MoveAlphabet::with_all(GroupPtr group, OperatorSet ops) {
  std::vector<Element> all(group->order());
  for (Element a = 0; a < all.size(); ++a) all[a] = a;
  return MoveAlphabet(std::move(group), all, std::move(ops));
}

std::vector<MoveSpec> MoveAlphabet::moves(std::size_t k) const {
  std::vector<MoveSpec> out;
  const auto kk = static_cast<std::uint32_t>(k);
  for (MoveKind kind : {MoveKind::RightMult, MoveKind::LeftMult})
    for (std::uint32_t i = 0; i < kk; ++i)
      for (std::uint32_t j = 0; j < kk; ++j)
        if (i != j)
          for (int sign : {1, -1}) out.push_back(MoveSpec{kind, i, j, sign, {}});
  for (std::uint32_t i = 0; i < kk; ++i) out.push_back(MoveSpec{MoveKind::Invert, i, 0, 1, {}});
  for (std::uint32_t i = 0; i < kk; ++i) {
    for (Element w : conjugators_)
      out.push_back(MoveSpec{MoveKind::Conjugate, i, 0, 1, {Conjugator::Type::Element, w, 1}});
    for (std::uint32_t a = 0; a < ops_.autos.size(); ++a)
      for (int sign : {1, -1})
        out.push_back(
            MoveSpec{MoveKind::Conjugate, i, 0, 1, {Conjugator::Type::Automorphism, a, sign}});
  }
  return out;
}

void MoveAlphabet::check(const MoveSpec& m, std::size_t k) const {
  if (m.i >= k) throw InputError("move position out of range");
  switch (m.kind) {
    case MoveKind::RightMult:
    case MoveKind::LeftMult:
      if (m.j >= k || m.j == m.i) throw InputError("multiplication move needs j != i in range");
      if (m.sign != 1 && m.sign != -1) throw InputError("move sign must be +1 or -1");
      break;
    case MoveKind::Invert: break;
    case MoveKind::Conjugate:
      if (m.w.type == Conjugator::Type::Element) {
        if (!std::binary_search(conjugators_.begin(), conjugators_.end(), m.w.index))
          throw InputError("conjugator not in the alphabet");
      } else {
        if (m.w.index >= ops_.autos.size()) throw InputError("operator index out of range");
        if (m.w.sign != 1 && m.w.sign != -1) throw InputError("operator sign must be +1 or -1");
      }
      break;
  }
}

Element MoveAlphabet::image(const MoveSpec& m, std::span<const Element> entries) const {
  const FiniteGroup& g = *group_;
  const Element x = entries[m.i];
  switch (m.kind) {
    case MoveKind::RightMult: {
      const Element y = entries[m.j];
      return g.mul(x, m.sign > 0 ? y : g.inv(y));
    }
    case MoveKind::LeftMult: {
      const Element y = entries[m.j];
      return g.mul(m.sign > 0 ? y : g.inv(y), x);
    }
    case MoveKind::Invert: return g.inv(x);
    case MoveKind::Conjugate:
      if (m.w.type == Conjugator::Type::Element) return g.conjugate(x, m.w.index);
      return m.w.sign > 0 ? ops_.autos[m.w.index](x) : inverse_ops_.autos[m.w.index](x);
  }
  return x;
}

MoveSpec MoveAlphabet::inverse(const MoveSpec& m) const {
  MoveSpec r = m;
  switch (m.kind) {
    case MoveKind::RightMult:
    case MoveKind::LeftMult: r.sign = -m.sign; break;
    case MoveKind::Invert: break;
    case MoveKind::Conjugate:
      if (m.w.type == Conjugator::Type::Element)
        r.w.index = group_->inv(m.w.index);
      else
        r.w.sign = -m.w.sign;
      break;
  }
  return r;
}

std::string MoveAlphabet::descriptor() const {
  std::string conj;
  for (Element w : conjugators_) detail::put_u32(conj, w);
  std::string ops;
  for (const auto& a : ops_.autos)
    for (Element x : a.perm) detail::put_u32(ops, x);
  return "S:" + std::to_string(conjugators_.size()) + ":" + detail::sha256_hex(conj).substr(0, 16) +
         ";ops:" + std::to_string(ops_.autos.size()) + ":" +
         detail::sha256_hex(ops).substr(0, 16);
}

// --- tuples and moves ----------------------------------------------------------

KTuple apply_move(const KTuple& t, const MoveSpec& m, const MoveAlphabet& alphabet) {
  alphabet.check(m, t.size());
  KTuple out = t;
  out.entries[m.i] = alphabet.image(m, t.entries);
  return out;
}

std::vector<KTuple> neighbors(const KTuple& t, const MoveAlphabet& alphabet) {
  std::vector<KTuple> out;
  for (const MoveSpec& m : alphabet.moves(t.size())) {
    KTuple nb = t;
    nb.entries[m.i] = alphabet.image(m, t.entries);
    out.push_back(std::move(nb));
  }
  return out;
}

bool is_n_generating(const KTuple& t, const FiniteGroup& g, const OperatorSet& ops) {
  return normal_closure(g, ops, t.entries).size() == g.order();
}

std::vector<Code> enumerate_nk(const FiniteGroup& g, std::size_t k, const OperatorSet& ops,
                               const ExploreOptions& options) {
  if (k == 0) throw InputError("tuple length must be positive");
  const std::size_t n = g.order();
  const Code space = tuple_space_size(n, k);
  if (space > options.budget)
    throw BudgetExceeded("code space " + std::to_string(space) + " exceeds budget " +
                         std::to_string(options.budget));
  NormalClosureOracle oracle(g, ops);
  const auto pw = powers(n, k);
  std::vector<Code> out;
  // Highest position outermost, so codes come out increasing.
  auto rec = [&](auto&& self, std::size_t pos, NormalClosureOracle::Id acc, Code base) -> void {
    for (Element e = 0; e < n; ++e) {
      const auto joined = oracle.join(acc, oracle.of_element(e));
      const Code c = base + Code{e} * pw[pos];
      if (pos == 0) {
        if (oracle.is_full(joined)) out.push_back(c);
      } else {
        self(self, pos - 1, joined, c);
      }
    }
  };
  rec(rec, k - 1, oracle.trivial(), 0);
  return out;
}

// --- ComponentTable -------------------------------------------------------------

ComponentTable::ComponentTable(std::size_t k, std::size_t group_order, std::vector<Code> codes,
                               std::vector<std::uint32_t> ids)
    : k_(k), n_(group_order), codes_(std::move(codes)), ids_(std::move(ids)) {
  if (codes_.size() != ids_.size()) throw InputError("component table size mismatch");
  for (std::size_t p = 0; p < codes_.size(); ++p) {
    if (p > 0 && codes_[p] <= codes_[p - 1]) throw InputError("component table codes not sorted");
    const std::uint32_t id = ids_[p];
    if (id > reps_.size()) throw InputError("component ids not in representative order");
    if (id == reps_.size()) reps_.push_back(codes_[p]);
  }
}

std::optional<std::uint32_t> ComponentTable::label(Code code) const {
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return std::nullopt;
  return ids_[static_cast<std::size_t>(it - codes_.begin())];
}

std::vector<std::size_t> ComponentTable::component_sizes() const {
  std::vector<std::size_t> sizes(reps_.size(), 0);
  for (auto id : ids_) ++sizes[id];
  return sizes;
}

ComponentTable components(const MoveAlphabet& alphabet, std::size_t k,
                          const ExploreOptions& options) {
  const FiniteGroup& g = alphabet.group();
  const std::size_t n = g.order();
  std::vector<Code> codes = enumerate_nk(g, k, alphabet.operators(), options);
  const Code space = tuple_space_size(n, k);
  const CodeIndex index(codes, space);
  const auto pw = powers(n, k);
  const auto moves = alphabet.moves(k);
  ConcurrentDsu dsu(codes.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<Element> entries(k);
    for (std::size_t p = begin; p < end; ++p) {
      Code c = codes[p];
      for (std::size_t i = 0; i < k; ++i) {
        entries[i] = static_cast<Element>(c % n);
        c /= n;
      }
      for (const MoveSpec& m : moves) {
        const Element before = entries[m.i];
        const Element after = alphabet.image(m, entries);
        if (after == before) continue;
        const Code nb = codes[p] + Code{after} * pw[m.i] - Code{before} * pw[m.i];
        const std::uint32_t q = index.find(nb);
        if (q == kAbsent) throw std::logic_error("move left N_k: closure invariant violated");
        dsu.unite(static_cast<std::uint32_t>(p), q);
      }
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || codes.size() < 4096) {
    work(0, codes.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (codes.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t b = std::min(codes.size(), t * chunk);
      const std::size_t e = std::min(codes.size(), b + chunk);
      pool.emplace_back([&, t, b, e] {
        try {
          work(b, e);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  std::vector<std::uint32_t> ids(codes.size());
  std::vector<std::uint32_t> root_id(codes.size(), kAbsent);
  std::uint32_t next = 0;
  for (std::uint32_t p = 0; p < codes.size(); ++p) {
    const std::uint32_t r = dsu.find(p);
    if (root_id[r] == kAbsent) root_id[r] = next++;
    ids[p] = root_id[r];
  }
  return ComponentTable(k, n, std::move(codes), std::move(ids));
}

// --- equivalence --------------------------------------------------------------------

KTuple replay(const KTuple& start, const Certificate& cert, const MoveAlphabet& alphabet) {
  KTuple t = start;
  for (const MoveSpec& m : cert.moves) t = apply_move(t, m, alphabet);
  return t;
}

EquivalenceResult equivalent(const KTuple& u, const KTuple& v, const MoveAlphabet& alphabet,
                             const ComponentTable* table, std::size_t depth_cap) {
  if (u.size() != v.size() || u.size() == 0) throw InputError("tuples must have equal positive length");
  require_in_nk(u, alphabet, "U");
  require_in_nk(v, alphabet, "V");
  const std::size_t n = alphabet.group().order();
  const std::size_t k = u.size();
  if (u == v) return {Equivalence::Equivalent, Certificate{}};
  if (table != nullptr) {
    if (table->k() != k || table->group_order() != n)
      throw InputError("component table does not match the tuples");
    auto lu = table->label(u), lv = table->label(v);
    if (!lu || !lv) throw InputError("tuple missing from component table");
    if (*lu != *lv) return {Equivalence::Different, std::nullopt};
  }

  struct Pred {
    Code parent;
    MoveSpec move;
  };
  const auto moves = alphabet.moves(k);
  const Code cu = u.code(n), cv = v.code(n);
  std::unordered_map<Code, Pred> seen_u{{cu, Pred{cu, {}}}}, seen_v{{cv, Pred{cv, {}}}};
  std::vector<Code> front_u{cu}, front_v{cv};
  std::size_t depth = 0;
  std::optional<Code> meet;

  while (!meet && depth < depth_cap && !front_u.empty() && !front_v.empty()) {
    const bool forward = front_u.size() <= front_v.size();
    auto& front = forward ? front_u : front_v;
    auto& seen = forward ? seen_u : seen_v;
    const auto& other = forward ? seen_v : seen_u;
    std::vector<Code> next;
    for (Code c : front) {
      const KTuple t = KTuple::from_code(c, n, k);
      for (const MoveSpec& m : moves) {
        KTuple nb = t;
        nb.entries[m.i] = alphabet.image(m, t.entries);
        const Code nc = nb.code(n);
        if (seen.emplace(nc, Pred{c, m}).second) {
          next.push_back(nc);
          if (other.count(nc)) {
            meet = nc;
            break;
          }
        }
      }
      if (meet) break;
    }
    front.swap(next);
    ++depth;
  }
  if (!meet) return {Equivalence::Inconclusive, std::nullopt};

  Certificate cert;
  for (Code c = *meet; c != cu;) {
    const Pred& p = seen_u.at(c);
    cert.moves.push_back(p.move);
    c = p.parent;
  }
  std::reverse(cert.moves.begin(), cert.moves.end());
  for (Code c = *meet; c != cv;) {
    const Pred& p = seen_v.at(c);
    cert.moves.push_back(alphabet.inverse(p.move));
    c = p.parent;
  }
  if (replay(u, cert, alphabet) != v) throw std::logic_error("certificate does not replay");
  return {Equivalence::Equivalent, std::move(cert)};
}

// --- projection ----------------------------------------------------------------------

KTuple project_tuple(const Homomorphism& phi, const KTuple& t) {
  KTuple out = t;
  for (Element& e : out.entries) e = phi(e);
  return out;
}

MoveSpec project_move(const Homomorphism& phi, const MoveSpec& m) {
  MoveSpec out = m;
  if (m.kind == MoveKind::Conjugate && m.w.type == Conjugator::Type::Element)
    out.w.index = phi(m.w.index);
  return out;
}

MoveAlphabet project_alphabet(const Homomorphism& phi, const MoveAlphabet& source) {
  std::vector<Element> image;
  for (Element w : source.conjugators()) image.push_back(phi(w));
  return MoveAlphabet(phi.target, image, induced_operator(phi, source.operators()));
}

bool lift_equivalence_check(const Homomorphism& phi, const KTuple& u, const KTuple& v,
                            const Certificate& cert, const MoveAlphabet& source) {
  if (replay(u, cert, source) != v)
    throw std::logic_error("certificate does not carry U to V in the source group");
  const MoveAlphabet target = project_alphabet(phi, source);
  KTuple t = project_tuple(phi, u);
  for (const MoveSpec& m : cert.moves) t = apply_move(t, project_move(phi, m), target);
  return t == project_tuple(phi, v);
}

}  // namespace acg
